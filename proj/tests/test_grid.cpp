#include <doctest.h>

#include "cbid/grid.hpp"

using namespace cbid;

TEST_CASE("grid enumeration")
{
    CHECK(grid_tuples(Family::cb, 8).size() == 81);
    CHECK(grid_tuples(Family::cb, 0).size() == 1);
    CHECK(grid_tuples(Family::base_n, 6).size() == 5);
    CHECK(grid_tuples(Family::ks27, 10).size() == 55);
    CHECK(grid_tuples(Family::knuth3, 2).size() == 27);
    CHECK(grid_tuples(Family::inverse_n, 3, 3).size() == 64);
    for (const auto& t : grid_tuples(Family::three_param, 6))
        CHECK(t[0] - t[1] + t[2] - t[3] == 0);
    // Tuples with m - r + k - l = 0 in [0,6]^4: sum over d of (#(m-r = d))^2.
    CHECK(grid_tuples(Family::three_param, 6).size() == 231);
    CHECK_THROWS(grid_tuples(Family::cb, -1));
}

TEST_CASE("grid runs are ordered and match the serial reference")
{
    GridOptions opt;
    opt.bound = 4;
    opt.modp = true;
    const auto par = run_grid(Family::three_param, opt);
    const auto ser = run_grid_serial(Family::three_param, opt);
    REQUIRE(par.rows.size() == ser.rows.size());
    for (std::size_t i = 0; i < par.rows.size(); ++i) {
        CHECK(par.rows[i].params == ser.rows[i].params);
        CHECK(par.rows[i].passed == ser.rows[i].passed);
    }
    CHECK(par.all_passed());
    CHECK(par.passed == par.rows.size());
}

TEST_CASE("a grid needs at least one verification method")
{
    GridOptions opt;
    opt.bound = 3;
    opt.exact = false;
    CHECK_THROWS(run_grid(Family::cb, opt));
}
