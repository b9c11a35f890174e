#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "cbid/identity.hpp"

namespace cbid {

/// Invalid builder parameters (negative orders, a violated parameter
/// relation, an empty sum range, a wrong parameter count).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Each builder transcribes one identity term by term. Sums are stored flat,
// one Term per summand; summands with a vanishing binomial are omitted.

/// 1 = x^{k+1} sum_{i<=m} C(k+i,k)(1-x)^i + (1-x)^{m+1} sum_{i<=k} C(m+i,m) x^i.
Identity build_cb(std::int64_t k, std::int64_t m);

/// Two-variable homogeneous form in x, y with the ratio xy/(x+y); the
/// product x^{m+1} y^{k+1} is the right-hand side.
Identity build_homogeneous(std::int64_t k, std::int64_t m);

/// Same shape with the ratio replaced by 1, valid on xy = x + y.
Identity build_gkp(std::int64_t k, std::int64_t m);

/// 1/(x1...xn) = sum_t 1/(x1..^xt..xn * (x1+...+xn)).
Identity build_base_n(std::int64_t n);

/// 1/prod x_t^{m_t+1} expanded into multinomial-weighted partial fractions.
Identity build_inverse_n(std::span<const std::int64_t> orders);

/// prod x_t^{m_t+1} as multinomial sums against powers of S_{n,n}/S_{n-1,n}.
Identity build_n_powers(std::span<const std::int64_t> orders);

/// Three-variable analogue valid on xyz = xy + yz + zx.
Identity build_knuth3(std::int64_t m1, std::int64_t m2, std::int64_t m3);

/// Three-variable Chaundy-Bullard analogue valid on xy + yz + zx = 1.
Identity build_s2_one(std::int64_t m1, std::int64_t m2, std::int64_t m3);

/// Polynomial identity in u1..un with (u1+...+un)^{sum m + 1} on the right.
Identity build_transformed(std::span<const std::int64_t> orders);

/// Requires m - r + k - l = 0 (ParameterError "parameter constraint violated").
/// The right-hand side depends on the sign of m - r.
Identity build_three_param(std::int64_t m, std::int64_t r, std::int64_t k, std::int64_t l);

/// sum_{j<m-r} C(j+r,r) x^j = sum_{i<m-r} C(m,i) x^i (1-x)^{m-r-i-1}; requires m > r >= 0.
Identity build_ks27(std::int64_t m, std::int64_t r);

/// Dispatches on `family` after checking the parameter count.
Identity build_identity(Family family, std::span<const std::int64_t> params);

} // namespace cbid
