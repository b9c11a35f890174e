#include "cbid/pit.hpp"

#include <chrono>
#include <exception>
#include <optional>
#include <random>

#include <omp.h>

namespace cbid {

namespace {

struct CompiledBase {
    ModularPoly numerator;
    ModularPoly denominator;
};

struct CompiledFactor {
    std::size_t base;
    std::int64_t exponent;
};

struct CompiledTerm {
    std::uint64_t coefficient; // sign of the side folded in
    std::vector<CompiledFactor> factors;
};

struct CompiledIdentity {
    std::size_t arity = 0;
    std::uint64_t prime = 0;
    std::vector<CompiledBase> bases;
    std::vector<CompiledTerm> terms;
    std::optional<ModularPoly> constraint;
    std::optional<std::size_t> bound_variable;
    std::optional<CompiledBase> bound_value;
};

CompiledBase compile_rf(const RationalFunction& f, std::uint64_t p)
{
    return {ModularPoly(f.numerator(), p), ModularPoly(f.denominator(), p)};
}

CompiledIdentity compile(const Identity& id, std::uint64_t p)
{
    CompiledIdentity c;
    c.arity = id.arity();
    c.prime = p;
    std::vector<const RationalFunction*> seen;
    auto base_index = [&](const RationalFunction& b) {
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (*seen[i] == b)
                return i;
        seen.push_back(&b);
        c.bases.push_back(compile_rf(b, p));
        return seen.size() - 1;
    };
    auto add_side = [&](const std::vector<Term>& side, bool negate) {
        for (const auto& t : side) {
            std::uint64_t k = modp::reduce(t.coefficient(), p);
            CompiledTerm ct{negate ? modp::sub(0, k, p) : k, {}};
            for (const auto& f : t.factors())
                ct.factors.push_back({base_index(f.base), f.exponent});
            c.terms.push_back(std::move(ct));
        }
    };
    add_side(id.lhs(), false);
    add_side(id.rhs(), true);
    if (id.is_conditional()) {
        c.constraint.emplace(*id.constraint(), p);
        c.bound_variable = id.parametrization()->variable;
        c.bound_value = compile_rf(id.parametrization()->value, p);
    }
    return c;
}

struct TrialOutcome {
    bool zero = false;
    bool degenerate = false;
    std::uint64_t constraint_checks = 0;
    std::vector<std::uint64_t> point;
};

// Value of the difference at `point` as a fraction; nullopt at a pole.
std::optional<std::uint64_t> evaluate(const CompiledIdentity& c, std::span<const std::uint64_t> point)
{
    const std::uint64_t p = c.prime;
    std::vector<std::uint64_t> bn(c.bases.size()), bd(c.bases.size());
    for (std::size_t i = 0; i < c.bases.size(); ++i) {
        bn[i] = c.bases[i].numerator.eval(point);
        bd[i] = c.bases[i].denominator.eval(point);
        if (bd[i] == 0)
            return std::nullopt;
    }
    std::uint64_t total_n = 0, total_d = 1;
    for (const auto& t : c.terms) {
        std::uint64_t n = t.coefficient, d = 1;
        for (const auto& f : t.factors) {
            const std::uint64_t e = static_cast<std::uint64_t>(f.exponent < 0 ? -f.exponent : f.exponent);
            const std::uint64_t up = modp::pow(bn[f.base], e, p), down = modp::pow(bd[f.base], e, p);
            n = modp::mul(n, f.exponent < 0 ? down : up, p);
            d = modp::mul(d, f.exponent < 0 ? up : down, p);
        }
        if (d == 0)
            return std::nullopt;
        total_n = modp::add(modp::mul(total_n, d, p), modp::mul(n, total_d, p), p);
        total_d = modp::mul(total_d, d, p);
    }
    return total_n;
}

TrialOutcome run_trial(const CompiledIdentity& c, const FuzzConfig& cfg, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> draw(0, cfg.prime - 1);
    TrialOutcome out;
    std::vector<std::uint64_t> point(c.arity);
    for (std::uint64_t attempt = 0; attempt < cfg.max_resamples; ++attempt) {
        for (std::size_t v = 0; v < c.arity; ++v)
            point[v] = draw(rng);
        if (c.bound_variable) {
            const std::uint64_t d = c.bound_value->denominator.eval(point);
            if (d == 0)
                continue;
            point[*c.bound_variable] =
                modp::mul(c.bound_value->numerator.eval(point), modp::inverse(d, cfg.prime), cfg.prime);
            ++out.constraint_checks;
            if (c.constraint->eval(point) != 0)
                throw std::logic_error("sample point is off the constraint variety");
        }
        if (auto value = evaluate(c, point)) {
            out.zero = *value == 0;
            out.point = point;
            return out;
        }
    }
    out.degenerate = true;
    return out;
}

VerificationReport summarize(const Identity& id, const FuzzConfig& cfg, const std::vector<TrialOutcome>& outcomes,
                             std::chrono::steady_clock::time_point start)
{
    VerificationReport r;
    r.family = id.family();
    r.params = id.params();
    r.method = Method::modp;
    r.trials = cfg.trials;
    r.seed = cfg.seed;
    bool all_zero = true;
    for (const auto& o : outcomes) {
        if (o.degenerate)
            throw DegenerateSampling();
        all_zero = all_zero && o.zero;
        r.constraint_checks += o.constraint_checks;
    }
    r.verdict = all_zero ? Verdict::holds : Verdict::fails;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<TrialOutcome> run_trials_parallel(const CompiledIdentity& c, const FuzzConfig& cfg)
{
    std::vector<TrialOutcome> outcomes(cfg.trials);
    std::exception_ptr error;
    const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < trials; ++i) {
        try {
            outcomes[static_cast<std::size_t>(i)] = run_trial(c, cfg, static_cast<std::uint64_t>(i));
        } catch (...) {
#pragma omp critical(cbid_fuzz_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return outcomes;
}

} // namespace

void FuzzConfig::validate() const
{
    if (trials == 0)
        throw std::invalid_argument("trials must be positive");
    if (max_resamples == 0)
        throw std::invalid_argument("max_resamples must be positive");
    if (prime >= (1ull << 63) || !modp::is_prime(prime))
        throw std::invalid_argument("modulus must be a prime below 2^63");
}

VerificationReport fuzz_verify(const Identity& id, const FuzzConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    config.validate();
    const CompiledIdentity c = compile(id, config.prime);
    return summarize(id, config, run_trials_parallel(c, config), start);
}

VerificationReport fuzz_verify_serial(const Identity& id, const FuzzConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    config.validate();
    const CompiledIdentity c = compile(id, config.prime);
    std::vector<TrialOutcome> outcomes;
    for (std::uint64_t i = 0; i < config.trials; ++i)
        outcomes.push_back(run_trial(c, config, i));
    return summarize(id, config, outcomes, start);
}

std::vector<std::vector<std::uint64_t>> fuzz_sample_points(const Identity& id, const FuzzConfig& config)
{
    config.validate();
    const CompiledIdentity c = compile(id, config.prime);
    std::vector<std::vector<std::uint64_t>> points;
    for (auto& o : run_trials_parallel(c, config)) {
        if (o.degenerate)
            throw DegenerateSampling();
        points.push_back(std::move(o.point));
    }
    return points;
}

} // namespace cbid
