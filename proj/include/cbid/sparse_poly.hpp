#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cbid/big_rational.hpp"
#include "cbid/exponent_vector.hpp"

namespace cbid {

/// Multivariate polynomial over Q stored as a sorted list of nonzero terms.
///
/// Terms are kept in ascending lexicographic order of their exponent vectors
/// (variable 0 most significant), so the leading term is the last one. The
/// zero polynomial is the empty list and still carries its arity.
class SparsePoly {
public:
    using Term = std::pair<ExponentVector, BigRational>;

    explicit SparsePoly(std::size_t arity = 1);

    static SparsePoly constant(std::size_t arity, const BigRational& c);
    static SparsePoly variable(std::size_t arity, std::size_t index);
    static SparsePoly monomial(const ExponentVector& exponents, const BigRational& c);

    /// Sorts, merges equal exponents and drops zero coefficients.
    static SparsePoly from_terms(std::size_t arity, std::vector<Term> terms);

    /// Adopts `terms` as-is. They must be strictly ascending with nonzero coefficients.
    static SparsePoly from_canonical_terms(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Largest term in lex order. Requires a nonzero polynomial.
    const Term& leading_term() const { return terms_.back(); }
    const Term& trailing_term() const { return terms_.front(); }

    std::uint64_t total_degree() const;
    std::uint32_t degree(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree(var) > 0; }

    BigRational coefficient(const ExponentVector& exponents) const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::size_t arity_;
    std::vector<Term> terms_;
};

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_neg(const SparsePoly& a);
SparsePoly poly_scale(const SparsePoly& a, const BigRational& c);

/// Multiplies by the monomial x^shift.
SparsePoly poly_shift(const SparsePoly& a, const ExponentVector& shift);

/// Product. Large products are split across OpenMP threads; the result is
/// identical to poly_mul_serial.
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul_serial(const SparsePoly& a, const SparsePoly& b);
/// Always takes the threaded path, whatever the operand sizes.
SparsePoly poly_mul_parallel(const SparsePoly& a, const SparsePoly& b);

SparsePoly poly_pow(const SparsePoly& a, std::uint32_t e);

SparsePoly poly_partial_derivative(const SparsePoly& p, std::size_t var);

/// Quotient a/b when b divides a exactly over Q, otherwise nullopt.
/// Throws std::domain_error for b = 0.
std::optional<SparsePoly> poly_divide_exact(const SparsePoly& a, const SparsePoly& b);

/// Componentwise minimum exponent over all terms (the largest monomial divisor).
ExponentVector poly_monomial_content(const SparsePoly& p);

BigRational poly_eval(const SparsePoly& p, std::span<const BigRational> point);
std::uint64_t poly_eval_modp(const SparsePoly& p, std::span<const std::uint64_t> point, std::uint64_t prime);

/// Re-embeds `p` into a ring of `arity` variables, sending variable i to
/// variable map[i]. Variables absent from `map` must not occur in `p`.
SparsePoly poly_remap(const SparsePoly& p, std::size_t arity, std::span<const std::size_t> map);

/// A polynomial with coefficients already reduced modulo a prime.
class ModularPoly {
public:
    /// Throws modp::BadPrime if a coefficient denominator vanishes mod `prime`.
    ModularPoly(const SparsePoly& p, std::uint64_t prime);

    std::uint64_t eval(std::span<const std::uint64_t> point) const;
    std::uint64_t prime() const { return prime_; }

private:
    std::size_t arity_;
    std::uint64_t prime_;
    std::vector<std::uint32_t> max_degree_;
    std::vector<std::pair<ExponentVector, std::uint64_t>> terms_;
};

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return poly_add(a, b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return poly_sub(a, b); }
inline SparsePoly operator-(const SparsePoly& a) { return poly_neg(a); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return poly_mul(a, b); }

} // namespace cbid
