#include "cbid/identity.hpp"

#include <array>
#include <stdexcept>

namespace cbid {

namespace {

constexpr std::array<Family, 11> kFamilies{
    Family::cb,       Family::homogeneous, Family::gkp,         Family::base_n,
    Family::inverse_n, Family::n_powers,   Family::knuth3,      Family::s2_one,
    Family::transformed, Family::three_param, Family::ks27,
};

std::vector<RationalFunction> values_of(const std::vector<Term>& terms)
{
    std::vector<RationalFunction> out;
    out.reserve(terms.size());
    for (const auto& t : terms)
        out.push_back(t.value());
    return out;
}

} // namespace

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::cb: return "cb";
    case Family::homogeneous: return "homogeneous";
    case Family::gkp: return "gkp";
    case Family::base_n: return "base_n";
    case Family::inverse_n: return "inverse_n";
    case Family::n_powers: return "n_powers";
    case Family::knuth3: return "knuth3";
    case Family::s2_one: return "s2_one";
    case Family::transformed: return "transformed";
    case Family::three_param: return "three_param";
    case Family::ks27: return "ks27";
    }
    throw std::logic_error("family_name: unknown family");
}

std::optional<Family> family_from_name(std::string_view name)
{
    for (Family f : kFamilies)
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

std::span<const Family> all_families() { return kFamilies; }

bool family_takes_order_vector(Family family)
{
    return family == Family::inverse_n || family == Family::n_powers || family == Family::transformed;
}

std::vector<std::string> family_variable_names(Family family, std::size_t arity)
{
    switch (family) {
    case Family::cb:
    case Family::three_param:
    case Family::ks27:
    case Family::homogeneous:
    case Family::gkp:
    case Family::knuth3:
    case Family::s2_one: {
        static const std::array<std::string, 3> xyz{"x", "y", "z"};
        if (arity <= 3)
            return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(arity)};
        break;
    }
    default:
        break;
    }
    const std::string stem = family == Family::transformed ? "u" : "x";
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= arity; ++i)
        names.push_back(stem + std::to_string(i));
    return names;
}

const RationalFunction& PowerCache::power(const RationalFunction& base, std::int64_t exponent)
{
    Entry* entry = nullptr;
    for (auto& e : entries_)
        if (e.base == base) {
            entry = &e;
            break;
        }
    if (!entry) {
        entries_.push_back({base, {}});
        entry = &entries_.back();
    }
    for (auto& [k, v] : entry->powers)
        if (k == exponent)
            return v;
    entry->powers.emplace_back(exponent, rf_pow(base, exponent));
    return entry->powers.back().second;
}

Term::Term(BigRational coefficient, CoefficientForm form, std::vector<Factor> factors, std::size_t arity,
           PowerCache* cache)
    : coefficient_(std::move(coefficient)), form_(std::move(form)), factors_(std::move(factors)),
      value_(RationalFunction::constant(arity, coefficient_))
{
    if (coefficient_.is_zero())
        return;
    for (const auto& f : factors_) {
        if (f.base.arity() != arity)
            throw std::invalid_argument("Term: factor arity mismatch");
        if (f.exponent == 0)
            continue;
        value_ = cache ? rf_mul(value_, cache->power(f.base, f.exponent)) : rf_mul(value_, rf_pow(f.base, f.exponent));
    }
}

Term::Term(BigRational coefficient, CoefficientForm form, std::vector<Factor> factors, RationalFunction value)
    : coefficient_(std::move(coefficient)), form_(std::move(form)), factors_(std::move(factors)),
      value_(std::move(value))
{
}

Term Term::with_coefficient(BigRational coefficient) const
{
    RationalFunction value = RationalFunction(value_.arity());
    if (!coefficient_.is_zero())
        value = rf_scale(value_, coefficient / coefficient_);
    else
        value = Term(coefficient, form_, factors_, value_.arity()).value();
    return Term(std::move(coefficient), CoefficientForm{}, factors_, std::move(value));
}

Identity::Identity(Family family, std::vector<std::int64_t> params, std::size_t arity, std::vector<Term> lhs,
                   std::vector<Term> rhs, std::optional<SparsePoly> constraint,
                   std::optional<Parametrization> parametrization)
    : family_(family), params_(std::move(params)), arity_(arity), lhs_(std::move(lhs)), rhs_(std::move(rhs)),
      constraint_(std::move(constraint)), parametrization_(std::move(parametrization))
{
    for (const auto* side : {&lhs_, &rhs_})
        for (const auto& t : *side)
            if (t.value().arity() != arity_)
                throw std::invalid_argument("Identity: term arity differs from the identity's arity");
    if (constraint_.has_value() != parametrization_.has_value())
        throw std::invalid_argument("Identity: constraint and parametrization must be given together");
    if (constraint_) {
        const auto& p = *parametrization_;
        if (constraint_->arity() != arity_ || p.value.arity() != arity_ || p.variable >= arity_)
            throw std::invalid_argument("Identity: constraint/parametrization arity mismatch");
        if (p.value.numerator().depends_on(p.variable) || p.value.denominator().depends_on(p.variable))
            throw std::invalid_argument("Identity: parametrization refers to its own variable");
        if (!rf_substitute(RationalFunction(*constraint_), p.variable, p.value).is_zero())
            throw std::invalid_argument("Identity: parametrization does not annihilate the constraint");
    }
}

std::vector<RationalFunction> Identity::lhs_values() const { return values_of(lhs_); }
std::vector<RationalFunction> Identity::rhs_values() const { return values_of(rhs_); }

std::string Identity::label() const
{
    std::string s(family_name(family_));
    s += '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(params_[i]);
    }
    s += ')';
    return s;
}

Identity mutate_coefficient(const Identity& id, Side side, std::size_t index)
{
    std::vector<Term> lhs = id.lhs(), rhs = id.rhs();
    auto& terms = side == Side::lhs ? lhs : rhs;
    if (index >= terms.size())
        throw std::out_of_range("mutate_coefficient: term index out of range");
    const BigRational& c = terms[index].coefficient();
    BigRational bumped = c + BigRational(c.sign() < 0 ? -1 : 1);
    terms[index] = terms[index].with_coefficient(std::move(bumped));
    return Identity(id.family(), id.params(), id.arity(), std::move(lhs), std::move(rhs), id.constraint(),
                    id.parametrization());
}

} // namespace cbid
