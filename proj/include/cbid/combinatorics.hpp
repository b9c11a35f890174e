#pragma once

#include <cstdint>
#include <span>

#include "cbid/big_rational.hpp"

namespace cbid {

mpz_class factorial(std::int64_t n);

/// C(n, r) with the zero convention outside 0 <= r <= n. Requires n >= 0.
BigRational rat_binomial(std::int64_t n, std::int64_t r);

/// (sum orders)! / prod(orders_i!). All orders must be non-negative.
BigRational multinomial(std::span<const std::int64_t> orders);

} // namespace cbid
