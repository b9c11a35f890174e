#include "cbid/grid.hpp"

#include <stdexcept>

#include "cbid/builders.hpp"

namespace cbid {

namespace {

void cartesian(std::size_t length, std::int64_t bound, std::vector<std::vector<std::int64_t>>& out)
{
    std::vector<std::int64_t> t(length, 0);
    while (true) {
        out.push_back(t);
        std::size_t i = length;
        while (i > 0 && t[i - 1] == bound)
            t[--i] = 0;
        if (i == 0)
            return;
        ++t[i - 1];
    }
}

GridRow run_row(Family family, const std::vector<std::int64_t>& params, const GridOptions& opt)
{
    GridRow row{params, false, {}, {}};
    try {
        const Identity id = build_identity(family, params);
        bool ok = true;
        if (opt.exact) {
            row.reports.push_back(verify_exact(id));
            ok = ok && row.reports.back().holds();
        }
        if (opt.modp) {
            // One verifier running in parallel per row is enough.
            row.reports.push_back(fuzz_verify_serial(id, opt.fuzz));
            ok = ok && row.reports.back().holds();
        }
        row.passed = ok;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

GridSummary tally(Family family, std::vector<GridRow> rows, std::chrono::steady_clock::time_point start)
{
    GridSummary s;
    s.family = family;
    s.rows = std::move(rows);
    for (const auto& r : s.rows)
        ++(r.passed ? s.passed : s.failed);
    s.elapsed = std::chrono::steady_clock::now() - start;
    return s;
}

void check_options(const GridOptions& opt)
{
    if (opt.bound < 0)
        throw std::invalid_argument("grid bound must be non-negative");
    if (!opt.exact && !opt.modp)
        throw std::invalid_argument("grid needs at least one verification method");
    if (opt.modp)
        opt.fuzz.validate();
}

} // namespace

std::vector<std::vector<std::int64_t>> grid_tuples(Family family, std::int64_t bound, std::size_t n)
{
    if (bound < 0)
        throw std::invalid_argument("grid bound must be non-negative");
    std::vector<std::vector<std::int64_t>> out;
    switch (family) {
    case Family::base_n:
        for (std::int64_t k = 2; k <= bound; ++k)
            out.push_back({k});
        return out;
    case Family::ks27:
        for (std::int64_t m = 1; m <= bound; ++m)
            for (std::int64_t r = 0; r < m; ++r)
                out.push_back({m, r});
        return out;
    case Family::three_param: {
        std::vector<std::vector<std::int64_t>> all;
        cartesian(4, bound, all);
        for (auto& t : all)
            if (t[0] - t[1] + t[2] - t[3] == 0)
                out.push_back(std::move(t));
        return out;
    }
    case Family::knuth3:
    case Family::s2_one:
        cartesian(3, bound, out);
        return out;
    case Family::inverse_n:
    case Family::n_powers:
    case Family::transformed:
        if (n < 2)
            throw std::invalid_argument("order vectors need length >= 2");
        cartesian(n, bound, out);
        return out;
    case Family::cb:
    case Family::homogeneous:
    case Family::gkp:
        cartesian(2, bound, out);
        return out;
    }
    throw std::logic_error("unknown family");
}

GridSummary run_grid(Family family, const GridOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    check_options(options);
    const auto tuples = grid_tuples(family, options.bound, options.n);
    std::vector<GridRow> rows(tuples.size());
    const auto count = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i)
        rows[static_cast<std::size_t>(i)] = run_row(family, tuples[static_cast<std::size_t>(i)], options);
    return tally(family, std::move(rows), start);
}

GridSummary run_grid_serial(Family family, const GridOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    check_options(options);
    std::vector<GridRow> rows;
    for (const auto& t : grid_tuples(family, options.bound, options.n))
        rows.push_back(run_row(family, t, options));
    return tally(family, std::move(rows), start);
}

} // namespace cbid
