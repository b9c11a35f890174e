#pragma once

#include <cstdint>
#include <stdexcept>

#include "cbid/big_rational.hpp"

namespace cbid::modp {

/// 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = 2305843009213693951ull;

/// Raised when a coefficient denominator vanishes modulo the chosen prime.
class BadPrime : public std::domain_error {
public:
    BadPrime() : std::domain_error("bad prime, choose another") {}
};

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);

/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t reduce(const mpz_class& value, std::uint64_t p);

/// num * den^{-1} mod p. Throws BadPrime when den is divisible by p.
std::uint64_t reduce(const BigRational& value, std::uint64_t p);

} // namespace cbid::modp
