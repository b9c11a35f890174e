#pragma once

// Reference computations that share no code with the library kernels.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cbid/rational_function.hpp"

namespace oracle {

inline mpz_class factorial(std::int64_t n)
{
    mpz_class f = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// n! / (r! (n-r)!), zero outside 0 <= r <= n.
inline mpz_class binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || r > n)
        return 0;
    return factorial(n) / (factorial(r) * factorial(n - r));
}

/// (sum a)! / prod a!.
inline mpz_class multinomial(std::span<const std::int64_t> orders)
{
    std::int64_t total = 0;
    mpz_class den = 1;
    for (auto a : orders) {
        total += a;
        den *= factorial(a);
    }
    return factorial(total) / den;
}

/// (u_1 + ... + u_n)^power by repeated multiplication on a plain map.
inline std::map<std::vector<std::uint32_t>, mpz_class> expand_sum_power(std::size_t n, std::uint32_t power)
{
    std::map<std::vector<std::uint32_t>, mpz_class> acc{{std::vector<std::uint32_t>(n, 0), 1}};
    for (std::uint32_t step = 0; step < power; ++step) {
        std::map<std::vector<std::uint32_t>, mpz_class> next;
        for (const auto& [e, c] : acc)
            for (std::size_t v = 0; v < n; ++v) {
                auto f = e;
                ++f[v];
                next[f] += c;
            }
        acc = std::move(next);
    }
    return acc;
}

/// Horner-free evaluation: each monomial as a product of repeated factors.
inline mpq_class eval_poly(const cbid::SparsePoly& p, std::span<const mpq_class> point)
{
    mpq_class sum = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class m = c.raw();
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k)
                m *= point[v];
        sum += m;
    }
    return sum;
}

/// Value of f at `point`; the denominator must not vanish there.
inline mpq_class eval_rf(const cbid::RationalFunction& f, std::span<const mpq_class> point)
{
    return eval_poly(f.numerator(), point) / eval_poly(f.denominator(), point);
}

} // namespace oracle
