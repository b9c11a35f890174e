#pragma once

#include <optional>

#include "cbid/sparse_poly.hpp"

namespace cbid {

/// Greatest common divisor of two polynomials over Q.
///
/// The result is the unique associate with integer coefficients, integer
/// content 1 and a positive leading coefficient. gcd(0, 0) = 0 and the gcd
/// with a nonzero constant is 1.
SparsePoly poly_gcd(const SparsePoly& a, const SparsePoly& b);

/// Rescales `p` to integer coefficients with content 1 and a positive leading
/// coefficient. Returns the factor used, so that primitive = factor * p.
BigRational make_primitive(SparsePoly& p);

namespace detail {

/// Heuristic GCD alone (evaluation at large integers, then x-adic
/// reconstruction). nullopt when every attempt fails the divisibility check.
std::optional<SparsePoly> poly_gcd_heuristic(const SparsePoly& a, const SparsePoly& b);

/// Primitive polynomial remainder sequence, recursive in the variables.
SparsePoly poly_gcd_prs(const SparsePoly& a, const SparsePoly& b);

} // namespace detail

} // namespace cbid
