#include <doctest.h>

#include <random>

#include "cbid/poly_gcd.hpp"
#include "cbid/modular.hpp"
#include "cbid/sparse_poly.hpp"
#include "cbid/text_format.hpp"
#include "support/random_instances.hpp"

using namespace cbid;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

SparsePoly P(const char* text, std::size_t arity = 2)
{
    const auto f = parse_rf(text, std::span(kXYZ).first(arity));
    REQUIRE(f.is_polynomial());
    return poly_scale(f.numerator(), f.denominator().leading_term().second.inverse());
}

} // namespace

TEST_CASE("basic polynomial arithmetic")
{
    CHECK(poly_add(P("x"), P("-x")).is_zero());
    CHECK(poly_add(P("x"), P("-x")).arity() == 2);
    CHECK(poly_mul(P("x+y"), P("x-y")) == P("x^2-y^2"));
    CHECK(poly_pow(P("1-x", 1), 2) == P("1-2*x+x^2", 1));
    CHECK(poly_pow(P("x+y"), 0) == SparsePoly::constant(2, 1));
    CHECK_THROWS(poly_add(P("x", 1), P("x", 2)));
}

TEST_CASE("terms are kept in ascending lex order")
{
    const auto p = P("y^5 + x + 1");
    REQUIRE(p.size() == 3);
    CHECK(p.leading_term().first == ExponentVector{1, 0});
    CHECK(p.trailing_term().first == ExponentVector{0, 0});
    CHECK(p.total_degree() == 5);
    CHECK(p.degree(1) == 5);
}

TEST_CASE("partial derivatives")
{
    CHECK(poly_partial_derivative(P("x^2*y + 3*x"), 0) == P("2*x*y + 3"));
    CHECK(poly_partial_derivative(P("x^2"), 1).is_zero());
    CHECK(poly_partial_derivative(P("x^5", 1), 0) == P("5*x^4", 1));
    CHECK_THROWS(poly_partial_derivative(P("x"), 2));
}

TEST_CASE("evaluation")
{
    const std::vector<BigRational> pt{2, 3};
    CHECK(poly_eval(P("x^2+y"), pt) == 7);
    CHECK(poly_eval(SparsePoly(2), pt) == 0);
    const std::vector<std::uint64_t> mp{3, 5};
    CHECK(poly_eval_modp(P("x*y"), mp, cbid::modp::kMersenne61) == 15);
    CHECK(ModularPoly(P("x*y"), cbid::modp::kMersenne61).eval(mp) == 15);
    CHECK_THROWS_WITH(poly_eval_modp(P("x/7"), mp, 7), "bad prime, choose another");
}

TEST_CASE("exact division")
{
    CHECK(poly_divide_exact(P("x^2-y^2"), P("x-y")) == P("x+y"));
    CHECK_FALSE(poly_divide_exact(P("x^2+y^2"), P("x-y")).has_value());
    CHECK(poly_divide_exact(P("6*x^3*y"), P("2*x*y")) == P("3*x^2"));
    CHECK_THROWS(poly_divide_exact(P("x"), SparsePoly(2)));
}

TEST_CASE("gcd is primitive with positive leading coefficient")
{
    CHECK(poly_gcd(P("x^2-y^2"), P("2*x-2*y")) == P("x-y"));
    CHECK(poly_gcd(P("x^2*y"), P("x*y^3")) == P("x*y"));
    CHECK(poly_gcd(P("x+1"), P("y+1")) == SparsePoly::constant(2, 1));
    CHECK(poly_gcd(SparsePoly(2), SparsePoly(2)).is_zero());
    CHECK(poly_gcd(SparsePoly(2), P("-4*x-2")) == P("2*x+1"));
    const auto s = P("x+y+z", 3);
    const auto a = poly_pow(s, 4) * P("x*y", 3), b = poly_pow(s, 3) * P("y*z + 1", 3);
    CHECK(poly_gcd(a, b) == poly_pow(s, 3));
}

TEST_CASE("heuristic and PRS gcd routes agree")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + i % 3;
        const auto c = testkit::random_nonzero_poly(rng, n, 3, 4);
        const auto a = testkit::random_poly(rng, n, 3, 4) * c;
        const auto b = testkit::random_poly(rng, n, 3, 4) * c;
        const auto prs = detail::poly_gcd_prs(a, b);
        if (auto heu = detail::poly_gcd_heuristic(a, b))
            CHECK(*heu == prs);
        CHECK(poly_gcd(a, b) == prs);
    }
}

TEST_CASE("parallel product matches the serial reference")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        const auto a = testkit::random_poly(rng, 3, 12, 300), b = testkit::random_poly(rng, 3, 12, 300);
        CHECK(poly_mul_parallel(a, b) == poly_mul_serial(a, b));
        CHECK(poly_mul(a, b) == poly_mul_serial(a, b));
    }
}

TEST_CASE("remapping variables")
{
    const std::vector<std::size_t> map{2, 0};
    CHECK(poly_remap(P("x^2*y"), 3, map) == P("x*z^2", 3));
}
