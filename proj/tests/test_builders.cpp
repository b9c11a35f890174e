#include <doctest.h>

#include <array>

#include "cbid/builders.hpp"
#include "cbid/verify.hpp"
#include "support/oracles.hpp"
#include "support/parse.hpp"

using namespace cbid;
using testkit::R;
using testkit::Rs;

namespace {

template <std::size_t N>
std::span<const std::int64_t> v(const std::array<std::int64_t, N>& a)
{
    return a;
}

mpq_class sum_at(const std::vector<RationalFunction>& terms, std::span<const mpq_class> pt)
{
    mpq_class s = 0;
    for (const auto& t : terms)
        s += oracle::eval_rf(t, pt);
    return s;
}

// x^{k+1} sum_{i<=m} C(k+i,k)(1-x)^i + (1-x)^{m+1} sum_{i<=k} C(m+i,m) x^i, straight from the formula.
mpq_class cb_formula(std::int64_t k, std::int64_t m, const mpq_class& x)
{
    auto pw = [](mpq_class b, std::int64_t e) {
        mpq_class r = 1;
        for (std::int64_t i = 0; i < e; ++i)
            r *= b;
        return r;
    };
    mpq_class a = 0, b = 0;
    for (std::int64_t i = 0; i <= m; ++i)
        a += mpq_class(oracle::binomial(k + i, k)) * pw(1 - x, i);
    for (std::int64_t i = 0; i <= k; ++i)
        b += mpq_class(oracle::binomial(m + i, m)) * pw(x, i);
    return pw(x, k + 1) * a + pw(1 - x, m + 1) * b;
}

} // namespace

TEST_CASE("Chaundy-Bullard terms")
{
    const auto id = build_cb(0, 0);
    CHECK(same_term_multiset(id.lhs_values(), Rs({"x", "1-x"}, 1)));
    CHECK(same_term_multiset(id.rhs_values(), Rs({"1"}, 1)));
    CHECK(id.arity() == 1);
    CHECK_FALSE(id.is_conditional());

    const auto one = build_cb(1, 1);
    CHECK(rf_sum(one.lhs_values(), 1) == R("1", 1));
    CHECK(same_term_multiset(one.lhs_values(), Rs({"x^2", "2*x^2*(1-x)", "(1-x)^2", "2*x*(1-x)^2"}, 1)));

    const auto two = build_cb(0, 2);
    CHECK(same_term_multiset(two.lhs_values(), Rs({"x", "x*(1-x)", "x*(1-x)^2", "(1-x)^3"}, 1)));
    CHECK(verify_exact(two).holds());

    const std::array<mpq_class, 1> third{mpq_class(1, 3)};
    CHECK(sum_at(build_cb(2, 3).lhs_values(), third) == 1);
    CHECK(cb_formula(2, 3, third[0]) == 1);
    for (std::int64_t k = 0; k <= 6; ++k)
        for (std::int64_t m = 0; m <= 6; ++m) {
            const std::array<mpq_class, 1> pt{mpq_class(2, 7)};
            CHECK(sum_at(build_cb(k, m).lhs_values(), pt) == cb_formula(k, m, pt[0]));
        }
}

TEST_CASE("Chaundy-Bullard symmetry under x -> 1-x")
{
    for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t m = 0; m <= 5; ++m) {
            std::vector<RationalFunction> mapped;
            for (const auto& t : build_cb(k, m).lhs_values())
                mapped.push_back(rf_substitute(t, 0, R("1-x", 1)));
            CHECK(same_term_multiset(mapped, build_cb(m, k).lhs_values()));
        }
}

TEST_CASE("homogeneous form and its bridge to Chaundy-Bullard")
{
    const auto id = build_homogeneous(0, 0);
    CHECK(same_term_multiset(id.lhs_values(), Rs({"x^2*y/(x+y)", "x*y^2/(x+y)"}, 2)));
    CHECK(same_term_multiset(id.rhs_values(), Rs({"x*y"}, 2)));
    CHECK(verify_exact(build_homogeneous(1, 1)).holds());

    for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t m = 0; m <= 5; ++m) {
            const auto h = build_homogeneous(k, m);
            const auto scale = rf_pow(R("x"), -(m + 1)) * rf_pow(R("y"), -(k + 1));
            auto bridge = [&](const std::vector<RationalFunction>& side) {
                std::vector<RationalFunction> out;
                for (const auto& t : side) {
                    const auto s = rf_substitute(t * scale, 1, R("1-x"));
                    // Back into the one-variable ring.
                    const std::array<std::size_t, 1> map{0};
                    out.push_back(rf_remap(s, 1, map));
                }
                return out;
            };
            const auto cb = build_cb(k, m);
            CHECK(same_term_multiset(bridge(h.lhs_values()), cb.lhs_values()));
            CHECK(same_term_multiset(bridge(h.rhs_values()), cb.rhs_values()));
        }
}

TEST_CASE("conditional identities carry constraint and parametrization")
{
    const auto gkp = build_gkp(1, 1);
    REQUIRE(gkp.is_conditional());
    CHECK(*gkp.constraint() == R("x*y-x-y").numerator());
    CHECK(gkp.parametrization()->variable == 1);
    CHECK(gkp.parametrization()->value == R("x/(x-1)"));
    CHECK(rf_substitute(RationalFunction(*gkp.constraint()), 1, gkp.parametrization()->value).is_zero());
    CHECK(verify_exact(gkp).holds());

    const auto base = build_gkp(0, 0);
    CHECK(same_term_multiset(base.lhs_values(), Rs({"x", "y"}, 2)));
    CHECK(same_term_multiset(base.rhs_values(), Rs({"x*y"}, 2)));

    const auto k3 = build_knuth3(0, 0, 0);
    CHECK(*k3.constraint() == R("x*y*z-x*y-y*z-x*z", 3).numerator());
    CHECK(k3.parametrization()->value == R("x*y/(x*y-x-y)", 3));
    CHECK(same_term_multiset(k3.lhs_values(), Rs({"y*z", "x*z", "x*y"}, 3)));
    CHECK(same_term_multiset(k3.rhs_values(), Rs({"x*y*z"}, 3)));
    CHECK(verify_exact(build_knuth3(1, 1, 0)).holds());

    const auto s2 = build_s2_one(0, 0, 0);
    CHECK(*s2.constraint() == R("x*y+y*z+x*z-1", 3).numerator());
    CHECK(s2.parametrization()->value == R("(1-x*y)/(x+y)", 3));
    CHECK(same_term_multiset(s2.lhs_values(), Rs({"y*z", "x*z", "x*y"}, 3)));
    CHECK(same_term_multiset(s2.rhs_values(), Rs({"1"}, 3)));
    CHECK(verify_exact(build_s2_one(1, 0, 1)).holds());
}

TEST_CASE("conditional identities fail off the variety")
{
    // Without the constraint the gkp sums do not equal the product.
    const auto gkp = build_gkp(1, 2);
    const Identity loose(gkp.family(), gkp.params(), gkp.arity(), gkp.lhs(), gkp.rhs());
    CHECK_FALSE(verify_exact(loose).holds());
}

TEST_CASE("n-variable base identity")
{
    const auto two = build_base_n(2);
    CHECK(same_term_multiset(two.lhs_values(), Rs({"1/(x*y)"}, 2)));
    CHECK(same_term_multiset(two.rhs_values(), Rs({"1/(x*(x+y))", "1/(y*(x+y))"}, 2)));
    const auto three = build_base_n(3);
    CHECK(same_term_multiset(three.rhs_values(), Rs({"1/(y*z*(x+y+z))", "1/(x*z*(x+y+z))", "1/(x*y*(x+y+z))"}, 3)));
    CHECK(verify_exact(build_base_n(4)).holds());
    CHECK_THROWS_AS(build_base_n(1), ParameterError);
}

TEST_CASE("inverse identity in n variables")
{
    const auto eis = build_inverse_n(v(std::array<std::int64_t, 2>{1, 1}));
    CHECK(same_term_multiset(eis.lhs_values(), Rs({"1/(x^2*y^2)"}, 2)));
    CHECK(same_term_multiset(eis.rhs_values(),
                             Rs({"1/(x^2*(x+y)^2)", "1/(y^2*(x+y)^2)", "2/(x*(x+y)^3)", "2/(y*(x+y)^3)"}, 2)));
    const auto zero = build_inverse_n(v(std::array<std::int64_t, 2>{0, 0}));
    CHECK(same_term_multiset(zero.rhs_values(), build_base_n(2).rhs_values()));
    CHECK(verify_exact(build_inverse_n(v(std::array<std::int64_t, 3>{1, 0, 1}))).holds());
    CHECK_THROWS_AS(build_inverse_n(v(std::array<std::int64_t, 2>{1, -1})), ParameterError);
    CHECK_THROWS_AS(build_inverse_n(v(std::array<std::int64_t, 1>{1})), ParameterError);
}

TEST_CASE("powers identity reduces to the homogeneous form for n = 2")
{
    CHECK(verify_exact(build_n_powers(v(std::array<std::int64_t, 3>{0, 0, 0}))).holds());
    CHECK(verify_exact(build_n_powers(v(std::array<std::int64_t, 3>{1, 2, 1}))).holds());
    for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b) {
            const auto p = build_n_powers(v(std::array<std::int64_t, 2>{a, b}));
            const auto h = build_homogeneous(b, a);
            CHECK(same_term_multiset(p.lhs_values(), h.lhs_values()));
            CHECK(same_term_multiset(p.rhs_values(), h.rhs_values()));
        }
}

TEST_CASE("transformed identity")
{
    const std::vector<std::string> u{"u1", "u2", "u3"};
    auto U = [&](const char* s, std::size_t n) { return parse_rf(s, std::span(u).first(n)); };
    const auto base = build_transformed(v(std::array<std::int64_t, 2>{0, 0}));
    CHECK(rf_sum(base.lhs_values(), 2) == U("u1+u2", 2));
    CHECK(same_term_multiset(base.rhs_values(), {U("u1+u2", 2)}));
    CHECK(verify_exact(build_transformed(v(std::array<std::int64_t, 2>{1, 1}))).holds());
    CHECK(verify_exact(build_transformed(v(std::array<std::int64_t, 3>{1, 0, 1}))).holds());
    CHECK(build_transformed(v(std::array<std::int64_t, 2>{1, 1})).variable_names() == std::vector<std::string>{"u1", "u2"});
}

TEST_CASE("transformed right-hand side matches a direct multinomial expansion")
{
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::int64_t m = 0; m <= 3; ++m) {
            std::vector<std::int64_t> orders(n, m);
            orders[0] = 0;
            const auto id = build_transformed(orders);
            REQUIRE(id.rhs().size() == 1);
            const RationalFunction rhs = id.rhs_values().front();
            REQUIRE(rhs.is_polynomial());
            std::uint32_t power = 1;
            for (auto o : orders)
                power += static_cast<std::uint32_t>(o);
            const auto expected = oracle::expand_sum_power(n, power);
            CHECK(rhs.numerator().size() == expected.size());
            for (const auto& [e, c] : expected) {
                ExponentVector ev(n);
                for (std::size_t i = 0; i < n; ++i)
                    ev.set(i, e[i]);
                CHECK(rhs.numerator().coefficient(ev) == BigRational(c));
            }
        }
}

TEST_CASE("three-parameter identity")
{
    CHECK_THROWS_WITH(build_three_param(3, 1, 0, 1), "parameter constraint violated");
    const auto first = build_three_param(3, 1, 0, 2);
    CHECK(verify_exact(first).holds());
    CHECK(rf_sum(first.rhs_values(), 1) == R("1 - (1-x)^3 - 3*x*(1-x)^2", 1));
    const auto second = build_three_param(0, 2, 3, 1);
    CHECK(verify_exact(second).holds());
    CHECK(rf_sum(second.rhs_values(), 1) == R("1 - x^3 - 3*(1-x)*x^2", 1));
    for (std::int64_t k = 0; k <= 4; ++k)
        for (std::int64_t m = 0; m <= 4; ++m) {
            const auto d = build_three_param(m, m, k, k);
            CHECK(same_term_multiset(d.lhs_values(), build_cb(k, m).lhs_values()));
            CHECK(same_term_multiset(d.rhs_values(), Rs({"1"}, 1)));
        }
}

TEST_CASE("shifted Chaundy-Bullard sums")
{
    CHECK_THROWS_WITH(build_ks27(2, 2), "empty identity");
    const auto unit = build_ks27(3, 2);
    CHECK(rf_sum(unit.lhs_values(), 1) == R("1", 1));
    CHECK(rf_sum(unit.rhs_values(), 1) == R("1", 1));
    const auto small = build_ks27(3, 1);
    CHECK(same_term_multiset(small.lhs_values(), Rs({"1", "2*x"}, 1)));
    CHECK(same_term_multiset(small.rhs_values(), Rs({"1-x", "3*x"}, 1)));
    CHECK(verify_exact(build_ks27(4, 1)).holds());
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(build_cb(-1, 0), ParameterError);
    CHECK_THROWS_AS(build_identity(Family::cb, v(std::array<std::int64_t, 1>{1})), ParameterError);
    CHECK_THROWS_AS(build_identity(Family::knuth3, v(std::array<std::int64_t, 2>{1, 1})), ParameterError);
    CHECK(build_identity(Family::inverse_n, v(std::array<std::int64_t, 4>{0, 0, 0, 0})).arity() == 4);
    CHECK(build_identity(Family::cb, v(std::array<std::int64_t, 2>{2, 3})).label() == "cb(2,3)");
}

TEST_CASE("every single-coefficient mutation is detected exactly")
{
    for (Family f : all_families()) {
        const std::vector<std::int64_t> params = [&]() -> std::vector<std::int64_t> {
            switch (f) {
            case Family::base_n: return {3};
            case Family::inverse_n:
            case Family::n_powers:
            case Family::transformed: return {1, 2};
            case Family::knuth3:
            case Family::s2_one: return {1, 0, 1};
            case Family::three_param: return {3, 1, 0, 2};
            case Family::ks27: return {4, 1};
            default: return {2, 3};
            }
        }();
        const auto id = build_identity(f, params);
        CAPTURE(id.label());
        REQUIRE(verify_exact(id).holds());
        for (Side s : {Side::lhs, Side::rhs})
            for (std::size_t i = 0; i < id.side(s).size(); ++i) {
                const auto report = verify_exact(mutate_coefficient(id, s, i));
                CHECK_FALSE(report.holds());
                REQUIRE(report.residual.has_value());
                CHECK_FALSE(report.residual->is_zero());
            }
    }
}
