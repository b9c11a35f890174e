#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cbid/identity.hpp"
#include "cbid/pit.hpp"
#include "cbid/verify.hpp"

namespace cbid {

/// Parameter tuples of `family` with every entry in [0, bound]:
/// base_n takes n in [2, bound]; ks27 takes 0 <= r < m; three_param keeps the
/// tuples with m - r + k - l = 0; order-vector families use length `n`.
std::vector<std::vector<std::int64_t>> grid_tuples(Family family, std::int64_t bound, std::size_t n = 2);

struct GridRow {
    std::vector<std::int64_t> params;
    bool passed = false;
    std::vector<VerificationReport> reports;
    std::string error; ///< set when building or verifying threw
};

struct GridSummary {
    Family family = Family::cb;
    std::vector<GridRow> rows;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::chrono::duration<double, std::milli> elapsed{0};

    bool all_passed() const { return failed == 0; }
};

struct GridOptions {
    std::int64_t bound = 3;
    std::size_t n = 2;
    bool exact = true;
    bool modp = false;
    FuzzConfig fuzz;
};

/// Verifies every tuple of the grid; rows are parallel over tuples and come
/// back in tuple order.
GridSummary run_grid(Family family, const GridOptions& options);

/// Single-threaded reference for run_grid.
GridSummary run_grid_serial(Family family, const GridOptions& options);

} // namespace cbid
