#include <doctest.h>

#include <array>

#include "cbid/builders.hpp"
#include "cbid/grid.hpp"
#include "cbid/text_format.hpp"
#include "support/parse.hpp"

using namespace cbid;
using testkit::R;

TEST_CASE("polynomial strings")
{
    const auto& names = testkit::xyz();
    CHECK(format_poly(R("x*y - x - y").numerator(), names) == "x*y - x - y");
    CHECK(format_poly(R("3*x^2*y - 1").numerator(), names) == "3*x^2*y - 1");
    CHECK(format_poly(R("1 - x", 1).numerator(), names, PolyOrder::degree_ascending) == "1 - x");
    CHECK(format_poly(R("1 - x", 1).numerator(), names) == "-x + 1");
    CHECK(format_poly(SparsePoly(2), names) == "0");
    CHECK(format_rf(R("x/(2*y)"), names) == "(x)/(2*y)");
    CHECK(format_rf(R("x/2"), names) == "(x)/(2)");
}

TEST_CASE("parser")
{
    CHECK(R("3/2*x") == rf_scale(R("x"), BigRational(mpz_class(3), mpz_class(2))));
    CHECK(R("-x^2 + (x+y)^-1") == rf_add(rf_neg(rf_mul(R("x"), R("x"))), rf_pow(R("x+y"), -1)));
    CHECK(R("2^3") == RationalFunction::constant(2, 8));
    CHECK_THROWS_AS(R("x + w"), std::invalid_argument);
    CHECK_THROWS_AS(R("(x + y"), std::invalid_argument);
    CHECK_THROWS_AS(R("x / 0"), std::invalid_argument);
    CHECK_THROWS_AS(R("x y"), std::invalid_argument);
}

TEST_CASE("plain rendering")
{
    CHECK(render_plain(build_cb(0, 0)) == "x + (1 - x) = 1");
    CHECK(render_plain(build_gkp(0, 0)) == "x + y = x*y  [on x*y - x - y = 0]");
}

TEST_CASE("LaTeX rendering of the Eisenstein identity")
{
    const std::array<std::int64_t, 2> m{1, 1};
    const auto tex = render_latex(build_inverse_n(m));
    CHECK(tex.starts_with("\\frac{1}{x_{1}^{2} x_{2}^{2}} = "));
    CHECK(tex.find("\\binom{2}{1} \\frac{1}{x_{2} \\left(x_{1} + x_{2}\\right)^{3}}") != std::string::npos);
    CHECK(tex.find("\\frac{1}{x_{1}^{2} \\left(x_{1} + x_{2}\\right)^{2}}") != std::string::npos);
    CHECK(render_latex(build_cb(1, 0)).find("\\binom{") != std::string::npos);
}

TEST_CASE("identity JSON")
{
    const auto doc = identity_to_json(build_gkp(1, 1));
    CHECK(doc["constraint"] == "x*y - x - y");
    CHECK(doc["family"] == "gkp");
    CHECK(doc["arity"] == 2);
    CHECK(doc["params"] == nlohmann::json::array({1, 1}));
    CHECK(identity_to_json(build_cb(1, 1))["constraint"].is_null());
}

TEST_CASE("identity JSON round-trips to the same term multisets")
{
    for (Family f : all_families()) {
        for (const auto& params : grid_tuples(f, 2, 2)) {
            const auto id = build_identity(f, params);
            CAPTURE(id.label());
            const auto text = identity_to_json(id).dump();
            const auto back = identity_from_json(nlohmann::json::parse(text));
            CHECK(back.family == f);
            CHECK(back.params == params);
            CHECK(back.arity == id.arity());
            CHECK(same_term_multiset(back.lhs, id.lhs_values()));
            CHECK(same_term_multiset(back.rhs, id.rhs_values()));
            CHECK(back.constraint.has_value() == id.is_conditional());
        }
    }
}

TEST_CASE("report JSON schema")
{
    VerificationReport r;
    r.family = Family::cb;
    r.params = {2, 3};
    r.verdict = Verdict::fails;
    r.residual = R("x^2 - 1", 1);
    const std::vector<std::string> names{"x"};
    const auto doc = report_to_json(r, names);
    CHECK(doc["method"] == "exact");
    CHECK(doc["verdict"] == "fails");
    CHECK(doc["residual"] == "x^2 - 1");
    CHECK(doc["trials"].is_null());
    CHECK(doc["seed"].is_null());
    CHECK(doc["elapsed_ms"].is_number());
    CHECK(doc.size() == 8);
}
