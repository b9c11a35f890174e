#include <doctest.h>

#include "cbid/rational_function.hpp"
#include "support/oracles.hpp"
#include "support/parse.hpp"

using namespace cbid;
using testkit::R;

TEST_CASE("normalization removes the gcd, content and sign")
{
    auto f = rf_normalize(R("x^2-y^2").numerator(), R("x-y").numerator());
    CHECK(f.numerator() == R("x+y").numerator());
    CHECK(f.denominator() == SparsePoly::constant(2, 1));

    f = rf_normalize(R("2*x").numerator(), SparsePoly::constant(2, 4));
    CHECK(f.numerator() == R("x").numerator());
    CHECK(f.denominator() == SparsePoly::constant(2, 2));

    f = rf_normalize(R("x").numerator(), R("-y").numerator());
    CHECK(f.numerator() == R("-x").numerator());
    CHECK(f.denominator() == R("y").numerator());

    f = rf_normalize(poly_scale(R("x").numerator(), BigRational(mpz_class(1), mpz_class(2))),
                     poly_scale(R("y").numerator(), BigRational(mpz_class(1), mpz_class(3))));
    CHECK(f == R("3*x/(2*y)"));

    CHECK_THROWS_AS(rf_normalize(R("x").numerator(), SparsePoly(2)), std::domain_error);
    CHECK(rf_normalize(SparsePoly(2), R("x+y").numerator()) == RationalFunction(2));
}

TEST_CASE("field operations")
{
    CHECK(R("1/(x*(x+y))") + R("1/(y*(x+y))") == R("1/(x*y)"));
    CHECK(rf_pow(R("x/y"), -1) == R("y/x"));
    CHECK(rf_mul(R("(x+1)/y"), RationalFunction(2)).is_zero());
    CHECK(rf_div(R("x^2-1"), R("x-1")) == R("x+1"));
    CHECK_THROWS(rf_pow(RationalFunction(2), -1));
    CHECK_THROWS(rf_div(R("x"), RationalFunction(2)));
    CHECK(rf_sub(R("1/x"), R("1/x")).is_zero());
    CHECK(rf_scale(R("x/y"), 0).is_zero());
}

TEST_CASE("derivatives of rational functions")
{
    CHECK(rf_partial_derivative(R("1/x"), 0) == R("-1/x^2"));
    CHECK(rf_partial_derivative(R("1/(x*(x+y))"), 0) == R("-(2*x+y)/(x^2*(x+y)^2)"));
    CHECK(rf_partial_derivative(R("1/x"), 1).is_zero());
    CHECK(rf_partial_derivative(R("1/(x+y)^3"), 1) == R("-3/(x+y)^4"));
}

TEST_CASE("substitution")
{
    CHECK(rf_substitute(R("1/(x*y)"), 0, R("1/x")) == R("x/y"));
    CHECK(rf_substitute(R("x+y"), 1, R("x/(x-1)")) == R("x^2/(x-1)"));
    const auto f = R("(x^2+3*y)/(x-y^2)");
    CHECK(rf_substitute(f, 0, R("x")) == f);
    CHECK_THROWS_WITH(rf_substitute(R("1/(x-y)"), 1, R("x")), "substitution hits pole identically");
    CHECK(rf_substitute(R("x*y - x - y"), 1, R("x/(x-1)")).is_zero());
}

TEST_CASE("variable inversion reflects exponents")
{
    CHECK(rf_invert_variables(R("1/(x*(x+y))")) == R("x^2*y/(x+y)"));
    const auto f = R("(x^2+3*y)/(x-y^2)");
    CHECK(rf_invert_variables(rf_invert_variables(f)) == f);
    CHECK(rf_invert_variables(f) == rf_substitute(rf_substitute(f, 0, R("1/x")), 1, R("1/y")));
}

TEST_CASE("summing many terms without intermediate gcds")
{
    const auto terms = testkit::Rs({"1/(y*z*(x+y+z))", "1/(x*z*(x+y+z))", "1/(x*y*(x+y+z))", "-1/(x*y*z)"}, 3);
    const auto s = rf_sum_unreduced(terms, 3);
    CHECK(s.numerator.is_zero());
    CHECK(rf_sum(terms, 3).is_zero());

    const auto partial = testkit::Rs({"1/(x*(x+y))", "1/(y*(x+y))", "2/x^2", "(x-1)/(x+y)^2"}, 2);
    RationalFunction pairwise(2);
    for (const auto& t : partial)
        pairwise = pairwise + t;
    CHECK(rf_sum(partial, 2) == pairwise);
    const auto u = rf_sum_unreduced(partial, 2);
    CHECK(rf_normalize(u.numerator, u.denominator) == pairwise);
}

TEST_CASE("evaluation at rational points")
{
    const auto f = R("(x^2+3*y)/(x-y^2)");
    const std::vector<BigRational> pt{BigRational(mpz_class(1), mpz_class(3)), 2};
    const std::vector<mpq_class> qpt{mpq_class(1, 3), 2};
    CHECK(rf_eval(f, pt)->raw() == oracle::eval_rf(f, qpt));
    const std::vector<BigRational> pole{1, 1};
    CHECK_FALSE(rf_eval(f, pole).has_value());
}

TEST_CASE("term multisets")
{
    CHECK(same_term_multiset(testkit::Rs({"x", "y", "x"}, 2), testkit::Rs({"x", "x", "y"}, 2)));
    CHECK_FALSE(same_term_multiset(testkit::Rs({"x", "y", "y"}, 2), testkit::Rs({"x", "x", "y"}, 2)));
    CHECK_FALSE(same_term_multiset(testkit::Rs({"x"}, 2), testkit::Rs({"x", "x"}, 2)));
}
