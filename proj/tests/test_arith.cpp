#include <doctest.h>

#include <array>

#include "cbid/big_rational.hpp"
#include "cbid/combinatorics.hpp"
#include "cbid/exponent_vector.hpp"
#include "cbid/modular.hpp"
#include "support/oracles.hpp"

using namespace cbid;

TEST_CASE("big rationals stay in lowest terms")
{
    BigRational a(mpz_class(6), mpz_class(-4));
    CHECK(a.str() == "-3/2");
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK((a + BigRational(mpz_class(3), mpz_class(2))).is_zero());
    CHECK((a * a).str() == "9/4");
    CHECK(a.inverse().str() == "-2/3");
    CHECK(BigRational::parse("10/4") == BigRational(mpz_class(5), mpz_class(2)));
    CHECK(BigRational(7).is_integer());
    CHECK(BigRational(-7).abs() == 7);
    CHECK(BigRational(1) < BigRational(mpz_class(3), mpz_class(2)));
    CHECK_THROWS_AS(BigRational(mpz_class(1), mpz_class(0)), std::domain_error);
    CHECK_THROWS(BigRational(0).inverse());
}

TEST_CASE("binomials follow the zero convention")
{
    CHECK(rat_binomial(4, 2) == 6);
    CHECK(rat_binomial(5, 7) == 0);
    CHECK(rat_binomial(10, 3) == BigRational(oracle::binomial(10, 3)));
    CHECK(rat_binomial(3, -1) == 0);
    CHECK_THROWS(rat_binomial(-1, 0));
    for (std::int64_t n = 0; n <= 30; ++n)
        for (std::int64_t r = -2; r <= n + 2; ++r)
            CHECK(rat_binomial(n, r) == BigRational(oracle::binomial(n, r)));
}

TEST_CASE("multinomials match the factorial quotient")
{
    CHECK(multinomial(std::array<std::int64_t, 3>{1, 1, 1}) == 6);
    CHECK(multinomial(std::array<std::int64_t, 2>{2, 0}) == 1);
    CHECK(multinomial(std::array<std::int64_t, 3>{2, 1, 1}) == BigRational(oracle::multinomial(std::array<std::int64_t, 3>{2, 1, 1})));
    for (std::int64_t a = 0; a <= 5; ++a)
        for (std::int64_t b = 0; b <= 5; ++b)
            for (std::int64_t c = 0; c <= 5; ++c) {
                const std::array<std::int64_t, 3> o{a, b, c};
                CHECK(multinomial(o) == BigRational(oracle::multinomial(o)));
            }
    // Exceeds 64 bits: 25!/(10! 15!) * ... stays exact.
    const std::array<std::int64_t, 3> big{10, 10, 10};
    CHECK(multinomial(big) == BigRational(oracle::multinomial(big)));
}

TEST_CASE("exponent vectors")
{
    ExponentVector a{2, 0, 1}, b{1, 0, 1};
    CHECK(a.total_degree() == 3);
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK((a - b) == ExponentVector{1, 0, 0});
    CHECK((a + b) == ExponentVector{3, 0, 2});
    CHECK(min(a, ExponentVector{0, 4, 4}) == ExponentVector{0, 0, 1});
    CHECK(b < a);
    CHECK(ExponentVector{0, 5, 5} < ExponentVector{1, 0, 0});
    CHECK_THROWS(b - a);
    CHECK_THROWS(ExponentVector(17));
}

TEST_CASE("modular helpers")
{
    const std::uint64_t p = modp::kMersenne61;
    CHECK(modp::is_prime(p));
    CHECK_FALSE(modp::is_prime(p - 2));
    CHECK(modp::is_prime(2));
    CHECK_FALSE(modp::is_prime(1));
    CHECK_FALSE(modp::is_prime(3215031751ull)); // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(modp::is_prime(18446744073709551557ull));
    CHECK(modp::mul(p - 1, p - 1, p) == 1);
    CHECK(modp::mul(modp::inverse(12345, p), 12345, p) == 1);
    CHECK(modp::pow(3, p - 1, p) == 1);
    CHECK(modp::reduce(BigRational(mpz_class(1), mpz_class(2)), p) == modp::inverse(2, p));
    CHECK(modp::reduce(mpz_class(-1), p) == p - 1);
    CHECK_THROWS_WITH(modp::reduce(BigRational(mpz_class(1), mpz_class(7)), 7), "bad prime, choose another");
}
