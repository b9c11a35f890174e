#include "cbid/modular.hpp"

#include <array>

namespace cbid::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent) {
        if (exponent & 1)
            result = mul(result, base, p);
        base = mul(base, base, p);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw std::domain_error("modp::inverse: zero has no inverse");
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0)
            return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p)
{
    mpz_class r;
    mpz_class modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::uint64_t reduce(const BigRational& value, std::uint64_t p)
{
    std::uint64_t den = reduce(value.denominator(), p);
    if (den == 0)
        throw BadPrime();
    return mul(reduce(value.numerator(), p), inverse(den, p), p);
}

} // namespace cbid::modp
