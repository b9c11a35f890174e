#include "cbid/sparse_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "cbid/modular.hpp"

namespace cbid {

namespace {

using Term = SparsePoly::Term;

// Products below this many term pairs are not worth a parallel region.
constexpr std::size_t kParallelMulThreshold = 1u << 14;

void check_same_arity(const SparsePoly& a, const SparsePoly& b, const char* op)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) +
                                    " vs " + std::to_string(b.arity()) + ")");
}

// Sorts by exponent, sums duplicates, removes zeros.
void canonicalize(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        BigRational sum = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first) {
            sum += terms[j].second;
            ++j;
        }
        if (!sum.is_zero()) {
            terms[out].first = terms[i].first;
            terms[out].second = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Merge of two canonical term lists; `sign` = -1 subtracts b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
            ++j;
        } else {
            BigRational c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
            if (!c.is_zero())
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Term> product_block(std::span<const Term> a, std::span<const Term> b)
{
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            out.emplace_back(ea + eb, ca * cb);
    canonicalize(out);
    return out;
}

} // namespace

SparsePoly::SparsePoly(std::size_t arity) : arity_(arity)
{
    if (arity == 0 || arity > kMaxArity)
        throw std::invalid_argument("SparsePoly: arity must be in [1, " + std::to_string(kMaxArity) + "]");
}

SparsePoly SparsePoly::constant(std::size_t arity, const BigRational& c)
{
    SparsePoly p(arity);
    if (!c.is_zero())
        p.terms_.emplace_back(ExponentVector(arity), c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t arity, std::size_t index)
{
    if (index >= arity)
        throw std::out_of_range("SparsePoly::variable: index out of range");
    ExponentVector e(arity);
    e.set(index, 1);
    return monomial(e, BigRational(1));
}

SparsePoly SparsePoly::monomial(const ExponentVector& exponents, const BigRational& c)
{
    SparsePoly p(exponents.size());
    if (!c.is_zero())
        p.terms_.emplace_back(exponents, c);
    return p;
}

SparsePoly SparsePoly::from_terms(std::size_t arity, std::vector<Term> terms)
{
    SparsePoly p(arity);
    for (const auto& t : terms)
        if (t.first.size() != arity)
            throw std::invalid_argument("SparsePoly::from_terms: exponent vector arity mismatch");
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

SparsePoly SparsePoly::from_canonical_terms(std::size_t arity, std::vector<Term> terms)
{
    SparsePoly p(arity);
    p.terms_ = std::move(terms);
    return p;
}

bool SparsePoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

std::uint64_t SparsePoly::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.total_degree());
    return d;
}

std::uint32_t SparsePoly::degree(std::size_t var) const
{
    if (var >= arity_)
        throw std::out_of_range("SparsePoly::degree: variable index out of range");
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first[var]);
    return d;
}

BigRational SparsePoly::coefficient(const ExponentVector& exponents) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                               [](const Term& t, const ExponentVector& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponents)
        return it->second;
    return BigRational(0);
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b)
{
    check_same_arity(a, b, "poly_add");
    return SparsePoly::from_canonical_terms(a.arity(), merge(a.terms(), b.terms(), +1));
}

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b)
{
    check_same_arity(a, b, "poly_sub");
    return SparsePoly::from_canonical_terms(a.arity(), merge(a.terms(), b.terms(), -1));
}

SparsePoly poly_neg(const SparsePoly& a)
{
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out)
        t.second = -t.second;
    return SparsePoly::from_canonical_terms(a.arity(), std::move(out));
}

SparsePoly poly_scale(const SparsePoly& a, const BigRational& c)
{
    if (c.is_zero())
        return SparsePoly(a.arity());
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out)
        t.second *= c;
    return SparsePoly::from_canonical_terms(a.arity(), std::move(out));
}

SparsePoly poly_shift(const SparsePoly& a, const ExponentVector& shift)
{
    if (shift.size() != a.arity())
        throw std::invalid_argument("poly_shift: arity mismatch");
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out)
        t.first = t.first + shift;
    return SparsePoly::from_canonical_terms(a.arity(), std::move(out));
}

SparsePoly poly_mul_serial(const SparsePoly& a, const SparsePoly& b)
{
    check_same_arity(a, b, "poly_mul");
    if (a.is_zero() || b.is_zero())
        return SparsePoly(a.arity());
    return SparsePoly::from_canonical_terms(a.arity(), product_block(a.terms(), b.terms()));
}

SparsePoly poly_mul_parallel(const SparsePoly& a, const SparsePoly& b)
{
    check_same_arity(a, b, "poly_mul");
    if (a.is_zero() || b.is_zero())
        return SparsePoly(a.arity());

    const std::span<const Term> outer = a.size() >= b.size() ? a.terms() : b.terms();
    const std::span<const Term> inner = a.size() >= b.size() ? b.terms() : a.terms();
    const std::size_t chunks = std::max<std::size_t>(
        1, std::min<std::size_t>(outer.size(), static_cast<std::size_t>(omp_get_max_threads()) * 2));

    std::vector<std::vector<Term>> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = outer.size() * c / chunks;
        const std::size_t hi = outer.size() * (c + 1) / chunks;
        partial[c] = product_block(outer.subspan(lo, hi - lo), inner);
    }

    // Pairwise merge tree; canonical lists merge into a canonical list.
    while (partial.size() > 1) {
        std::vector<std::vector<Term>> next((partial.size() + 1) / 2);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (2 * i + 1 < partial.size())
                next[i] = merge(partial[2 * i], partial[2 * i + 1], +1);
            else
                next[i] = std::move(partial[2 * i]);
        }
        partial = std::move(next);
    }
    return SparsePoly::from_canonical_terms(a.arity(), std::move(partial.front()));
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b)
{
    if (a.size() * b.size() < kParallelMulThreshold || omp_in_parallel() || omp_get_max_threads() == 1)
        return poly_mul_serial(a, b);
    return poly_mul_parallel(a, b);
}

SparsePoly poly_pow(const SparsePoly& a, std::uint32_t e)
{
    SparsePoly result = SparsePoly::constant(a.arity(), BigRational(1));
    if (e == 0)
        return result;
    if (a.is_monomial()) {
        const auto& [exps, c] = a.leading_term();
        ExponentVector r(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i)
            r.set(i, exps[i] * e);
        mpq_class cp;
        mpz_pow_ui(cp.get_num_mpz_t(), c.raw().get_num_mpz_t(), e);
        mpz_pow_ui(cp.get_den_mpz_t(), c.raw().get_den_mpz_t(), e);
        return SparsePoly::monomial(r, BigRational(cp));
    }
    SparsePoly base = a;
    while (true) {
        if (e & 1)
            result = poly_mul(result, base);
        e >>= 1;
        if (!e)
            break;
        base = poly_mul(base, base);
    }
    return result;
}

SparsePoly poly_partial_derivative(const SparsePoly& p, std::size_t var)
{
    if (var >= p.arity())
        throw std::out_of_range("poly_partial_derivative: variable index " + std::to_string(var) +
                                " out of range for arity " + std::to_string(p.arity()));
    // Lowering one coordinate by one preserves the relative lex order of the
    // surviving terms, so no re-sort is needed.
    std::vector<Term> out;
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0)
            continue;
        ExponentVector d = e;
        d.set(var, e[var] - 1);
        out.emplace_back(d, c * BigRational(static_cast<long>(e[var])));
    }
    return SparsePoly::from_canonical_terms(p.arity(), std::move(out));
}

std::optional<SparsePoly> poly_divide_exact(const SparsePoly& a, const SparsePoly& b)
{
    check_same_arity(a, b, "poly_divide_exact");
    if (b.is_zero())
        throw std::domain_error("poly_divide_exact: division by the zero polynomial");
    if (a.is_zero())
        return SparsePoly(a.arity());

    const auto& [lead_exp, lead_coef] = b.leading_term();
    if (b.is_monomial()) {
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& [e, c] : a.terms()) {
            if (!lead_exp.divides(e))
                return std::nullopt;
            out.emplace_back(e - lead_exp, c / lead_coef);
        }
        return SparsePoly::from_canonical_terms(a.arity(), std::move(out));
    }

    // Cheap necessary conditions: leading and trailing monomials divide, and
    // no variable has smaller degree in a than in b.
    if (!lead_exp.divides(a.leading_term().first) || !b.trailing_term().first.divides(a.trailing_term().first))
        return std::nullopt;
    for (std::size_t v = 0; v < a.arity(); ++v)
        if (a.degree(v) < b.degree(v))
            return std::nullopt;
    if (a.size() < 2 && b.size() >= 2)
        return std::nullopt;

    std::map<ExponentVector, BigRational> rem;
    for (const auto& t : a.terms())
        rem.emplace_hint(rem.end(), t.first, t.second);

    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!lead_exp.divides(top->first))
            return std::nullopt;
        ExponentVector qe = top->first - lead_exp;
        BigRational qc = top->second / lead_coef;
        for (const auto& [be, bc] : b.terms()) {
            auto [it, inserted] = rem.try_emplace(be + qe);
            it->second -= qc * bc;
            if (it->second.is_zero())
                rem.erase(it);
        }
        quotient.emplace_back(std::move(qe), std::move(qc));
    }
    std::reverse(quotient.begin(), quotient.end());
    return SparsePoly::from_canonical_terms(a.arity(), std::move(quotient));
}

ExponentVector poly_monomial_content(const SparsePoly& p)
{
    if (p.is_zero())
        return ExponentVector(p.arity());
    ExponentVector m = p.terms().front().first;
    for (const auto& t : p.terms())
        m = min(m, t.first);
    return m;
}

BigRational poly_eval(const SparsePoly& p, std::span<const BigRational> point)
{
    if (point.size() != p.arity())
        throw std::invalid_argument("poly_eval: point has wrong dimension");
    std::vector<std::vector<BigRational>> powers(p.arity());
    for (std::size_t v = 0; v < p.arity(); ++v) {
        std::uint32_t d = p.degree(v);
        powers[v].reserve(d + 1);
        powers[v].emplace_back(1);
        for (std::uint32_t k = 1; k <= d; ++k)
            powers[v].push_back(powers[v].back() * point[v]);
    }
    BigRational sum;
    for (const auto& [e, c] : p.terms()) {
        BigRational t = c;
        for (std::size_t v = 0; v < p.arity(); ++v)
            if (e[v])
                t *= powers[v][e[v]];
        sum += t;
    }
    return sum;
}

ModularPoly::ModularPoly(const SparsePoly& p, std::uint64_t prime)
    : arity_(p.arity()), prime_(prime), max_degree_(p.arity(), 0)
{
    terms_.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t r = modp::reduce(c, prime);
        for (std::size_t v = 0; v < arity_; ++v)
            max_degree_[v] = std::max(max_degree_[v], e[v]);
        if (r != 0)
            terms_.emplace_back(e, r);
    }
}

std::uint64_t ModularPoly::eval(std::span<const std::uint64_t> point) const
{
    if (point.size() != arity_)
        throw std::invalid_argument("ModularPoly::eval: point has wrong dimension");
    std::vector<std::vector<std::uint64_t>> powers(arity_);
    for (std::size_t v = 0; v < arity_; ++v) {
        powers[v].resize(max_degree_[v] + 1);
        powers[v][0] = 1;
        const std::uint64_t x = point[v] % prime_;
        for (std::uint32_t k = 1; k <= max_degree_[v]; ++k)
            powers[v][k] = modp::mul(powers[v][k - 1], x, prime_);
    }
    std::uint64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = c;
        for (std::size_t v = 0; v < arity_; ++v)
            if (e[v])
                t = modp::mul(t, powers[v][e[v]], prime_);
        sum = modp::add(sum, t, prime_);
    }
    return sum;
}

std::uint64_t poly_eval_modp(const SparsePoly& p, std::span<const std::uint64_t> point, std::uint64_t prime)
{
    return ModularPoly(p, prime).eval(point);
}

SparsePoly poly_remap(const SparsePoly& p, std::size_t arity, std::span<const std::size_t> map)
{
    if (map.size() > p.arity())
        throw std::invalid_argument("poly_remap: map longer than source arity");
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r(arity);
        for (std::size_t v = 0; v < p.arity(); ++v) {
            if (e[v] == 0)
                continue;
            if (v >= map.size() || map[v] >= arity)
                throw std::invalid_argument("poly_remap: variable " + std::to_string(v) + " has no image");
            r.set(map[v], r[map[v]] + e[v]);
        }
        out.emplace_back(r, c);
    }
    return SparsePoly::from_terms(arity, std::move(out));
}

} // namespace cbid
