#include "cbid/combinatorics.hpp"

#include <stdexcept>

namespace cbid {

mpz_class factorial(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigRational rat_binomial(std::int64_t n, std::int64_t r)
{
    if (n < 0)
        throw std::invalid_argument("rat_binomial: n must be non-negative");
    if (r < 0 || r > n)
        return BigRational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return BigRational(c);
}

BigRational multinomial(std::span<const std::int64_t> orders)
{
    // Product of successive binomials: C(o0+o1, o1) * C(o0+o1+o2, o2) * ...
    mpz_class result = 1;
    std::int64_t running = 0;
    for (std::int64_t o : orders) {
        if (o < 0)
            throw std::invalid_argument("multinomial: negative order");
        running += o;
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(running), static_cast<unsigned long>(o));
        result *= c;
    }
    return BigRational(result);
}

} // namespace cbid
