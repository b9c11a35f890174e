#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbid/rational_function.hpp"

namespace cbid {

enum class Family {
    cb,
    homogeneous,
    gkp,
    base_n,
    inverse_n,
    n_powers,
    knuth3,
    s2_one,
    transformed,
    three_param,
    ks27,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
std::span<const Family> all_families();

/// True for families whose parameter list is an order vector of any length >= 2.
bool family_takes_order_vector(Family family);

/// Display names of the ring variables: x / x,y / x,y,z for the fixed-arity
/// families, x1..xn for the n-variable ones and u1..un for `transformed`.
std::vector<std::string> family_variable_names(Family family, std::size_t arity);

/// How a term's scalar coefficient arose, kept for rendering.
struct CoefficientForm {
    enum class Kind { plain, binomial, multinomial };
    Kind kind = Kind::plain;
    std::vector<std::int64_t> args; ///< {n, r} for binomial, the orders for multinomial
};

/// base^exponent; the exponent may be negative.
struct Factor {
    RationalFunction base;
    std::int64_t exponent = 1;
};

/// Memoizes powers of repeated factor bases while one identity is built.
class PowerCache {
public:
    const RationalFunction& power(const RationalFunction& base, std::int64_t exponent);

private:
    struct Entry {
        RationalFunction base;
        std::vector<std::pair<std::int64_t, RationalFunction>> powers;
    };
    std::vector<Entry> entries_;
};

/// One summand: coefficient * prod(factor.base ^ factor.exponent).
class Term {
public:
    Term(BigRational coefficient, CoefficientForm form, std::vector<Factor> factors, std::size_t arity,
         PowerCache* cache = nullptr);

    const BigRational& coefficient() const { return coefficient_; }
    const CoefficientForm& form() const { return form_; }
    const std::vector<Factor>& factors() const { return factors_; }
    /// The canonical rational function this term equals.
    const RationalFunction& value() const { return value_; }

    Term with_coefficient(BigRational coefficient) const;

    /// Applies a field automorphism (e.g. x_i -> 1/x_i) to every factor base
    /// and to the value.
    template <class Map>
    Term map_values(Map&& map) const
    {
        std::vector<Factor> factors;
        factors.reserve(factors_.size());
        for (const auto& f : factors_)
            factors.push_back({map(f.base), f.exponent});
        return Term(coefficient_, form_, std::move(factors), map(value_));
    }

private:
    Term(BigRational coefficient, CoefficientForm form, std::vector<Factor> factors, RationalFunction value);

    BigRational coefficient_;
    CoefficientForm form_;
    std::vector<Factor> factors_;
    RationalFunction value_;
};

/// Variable `variable` expressed through the others on a constraint variety.
struct Parametrization {
    std::size_t variable = 0;
    RationalFunction value;
};

enum class Side { lhs, rhs };

/// A materialized equation sum(lhs) = sum(rhs), optionally asserted only on
/// the zero set of `constraint`.
class Identity {
public:
    /// Validates: every term has `arity`; constraint and parametrization come
    /// together; the parametrization does not mention its own variable and
    /// annihilates the constraint.
    Identity(Family family, std::vector<std::int64_t> params, std::size_t arity, std::vector<Term> lhs,
             std::vector<Term> rhs, std::optional<SparsePoly> constraint = std::nullopt,
             std::optional<Parametrization> parametrization = std::nullopt);

    Family family() const { return family_; }
    const std::vector<std::int64_t>& params() const { return params_; }
    std::size_t arity() const { return arity_; }
    const std::vector<Term>& lhs() const { return lhs_; }
    const std::vector<Term>& rhs() const { return rhs_; }
    const std::vector<Term>& side(Side s) const { return s == Side::lhs ? lhs_ : rhs_; }
    const std::optional<SparsePoly>& constraint() const { return constraint_; }
    const std::optional<Parametrization>& parametrization() const { return parametrization_; }
    bool is_conditional() const { return constraint_.has_value(); }

    std::vector<RationalFunction> lhs_values() const;
    std::vector<RationalFunction> rhs_values() const;
    std::vector<std::string> variable_names() const { return family_variable_names(family_, arity_); }

    /// "cb(2,3)", "inverse_n(1,0,1)", ...
    std::string label() const;

private:
    Family family_;
    std::vector<std::int64_t> params_;
    std::size_t arity_;
    std::vector<Term> lhs_;
    std::vector<Term> rhs_;
    std::optional<SparsePoly> constraint_;
    std::optional<Parametrization> parametrization_;
};

/// Bumps the magnitude of one term's coefficient by one (a binomial C becomes
/// C + 1, keeping its sign). Used to check that verifiers catch corruption.
Identity mutate_coefficient(const Identity& id, Side side, std::size_t index);

} // namespace cbid
