#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cbid/sparse_poly.hpp"

namespace cbid {

/// Quotient of two polynomials in canonical form.
///
/// Canonical means: numerator and denominator share no nonconstant factor,
/// both have integer coefficients with joint content 1, and the denominator's
/// lex-leading coefficient is positive. Zero is 0/1. Two values are equal as
/// rational functions iff they are equal here member by member.
class RationalFunction {
public:
    /// The zero function of the given arity.
    explicit RationalFunction(std::size_t arity = 1);
    /// A polynomial, brought to canonical form.
    explicit RationalFunction(const SparsePoly& poly);

    static RationalFunction constant(std::size_t arity, const BigRational& c);
    static RationalFunction variable(std::size_t arity, std::size_t index);

    const SparsePoly& numerator() const { return num_; }
    const SparsePoly& denominator() const { return den_; }
    std::size_t arity() const { return num_.arity(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    friend RationalFunction rf_normalize(SparsePoly num, SparsePoly den);
    friend RationalFunction rf_from_coprime(SparsePoly num, SparsePoly den);
    RationalFunction(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {}

    SparsePoly num_;
    SparsePoly den_;
};

/// Throws std::domain_error for a zero denominator and std::invalid_argument
/// for an arity mismatch.
RationalFunction rf_normalize(SparsePoly num, SparsePoly den);

/// Like rf_normalize but trusts the caller that gcd(num, den) is constant;
/// only content and sign are fixed.
RationalFunction rf_from_coprime(SparsePoly num, SparsePoly den);

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
/// Throws std::domain_error when b is zero.
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_neg(const RationalFunction& a);
RationalFunction rf_scale(const RationalFunction& a, const BigRational& c);
/// Negative exponents invert; zero to a negative power throws std::domain_error.
RationalFunction rf_pow(const RationalFunction& a, std::int64_t e);

RationalFunction rf_partial_derivative(const RationalFunction& f, std::size_t var);

/// Replaces variable `var` by `g` (same ring). Throws std::domain_error if
/// the resulting denominator vanishes identically.
RationalFunction rf_substitute(const RationalFunction& f, std::size_t var, const RationalFunction& g);

/// Replaces every variable x_i by 1/x_i.
RationalFunction rf_invert_variables(const RationalFunction& f);

/// Numerator and denominator of a sum over a common denominator, without
/// the final gcd. The sum is zero iff `numerator` is the zero polynomial.
struct UnreducedSum {
    SparsePoly numerator;
    SparsePoly denominator;
};

/// Sums the terms over their least common denominator. Terms sharing the
/// same denominator factor are grouped, so a long list of terms whose
/// denominators are powers of one polynomial costs a handful of divisions.
UnreducedSum rf_sum_unreduced(std::span<const RationalFunction> terms, std::size_t arity);
RationalFunction rf_sum(std::span<const RationalFunction> terms, std::size_t arity);

/// Value at a rational point, or nullopt where the denominator vanishes.
std::optional<BigRational> rf_eval(const RationalFunction& f, std::span<const BigRational> point);

/// Drops or renames variables; see poly_remap.
RationalFunction rf_remap(const RationalFunction& f, std::size_t arity, std::span<const std::size_t> map);

/// A strict total order on canonical forms, used to sort term multisets.
bool rf_less(const RationalFunction& a, const RationalFunction& b);

/// Multiset equality of canonical terms.
bool same_term_multiset(std::vector<RationalFunction> a, std::vector<RationalFunction> b);

inline RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return rf_add(a, b); }
inline RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return rf_sub(a, b); }
inline RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) { return rf_mul(a, b); }
inline RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return rf_div(a, b); }
inline RationalFunction operator-(const RationalFunction& a) { return rf_neg(a); }

} // namespace cbid
