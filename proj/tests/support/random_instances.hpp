#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cbid/rational_function.hpp"

namespace testkit {

/// Random polynomial with at most `max_terms` terms, total degree <= max_degree
/// and small rational coefficients.
inline cbid::SparsePoly random_poly(std::mt19937_64& rng, std::size_t arity, std::uint32_t max_degree = 4,
                                    std::size_t max_terms = 5)
{
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::uniform_int_distribution<std::int64_t> coef(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 3);
    std::vector<cbid::SparsePoly::Term> terms;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        cbid::ExponentVector e(arity);
        std::uint32_t budget = std::uniform_int_distribution<std::uint32_t>(0, max_degree)(rng);
        for (std::size_t v = 0; v < arity && budget > 0; ++v) {
            const std::uint32_t d = std::uniform_int_distribution<std::uint32_t>(0, budget)(rng);
            e.set(v, d);
            budget -= d;
        }
        terms.emplace_back(e, cbid::BigRational(mpz_class(coef(rng)), mpz_class(den(rng))));
    }
    return cbid::SparsePoly::from_terms(arity, std::move(terms));
}

inline cbid::SparsePoly random_nonzero_poly(std::mt19937_64& rng, std::size_t arity, std::uint32_t max_degree = 4,
                                            std::size_t max_terms = 5)
{
    while (true) {
        auto p = random_poly(rng, arity, max_degree, max_terms);
        if (!p.is_zero())
            return p;
    }
}

inline cbid::RationalFunction random_rf(std::mt19937_64& rng, std::size_t arity, std::uint32_t max_degree = 3)
{
    return cbid::rf_normalize(random_poly(rng, arity, max_degree, 4), random_nonzero_poly(rng, arity, max_degree, 3));
}

inline std::vector<cbid::BigRational> random_point(std::mt19937_64& rng, std::size_t arity)
{
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    std::vector<cbid::BigRational> pt;
    for (std::size_t i = 0; i < arity; ++i)
        pt.emplace_back(mpz_class(num(rng)), mpz_class(den(rng)));
    return pt;
}

} // namespace testkit
