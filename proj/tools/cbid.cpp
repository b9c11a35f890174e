// cbid: build, render and verify partial-fraction binomial identities.
//
// Exit status: 0 when every requested check holds, 1 when one fails,
// 2 on usage errors, bad parameters or internal errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbid/builders.hpp"
#include "cbid/derivation.hpp"
#include "cbid/grid.hpp"
#include "cbid/pit.hpp"
#include "cbid/text_format.hpp"
#include "cbid/verify.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

constexpr std::size_t kMaxEchoLength = 400;

struct FuzzFlags {
    std::uint64_t seed = cbid::kDefaultSeed;
    std::uint64_t trials = 64;
    std::uint64_t prime = cbid::modp::kMersenne61;

    cbid::FuzzConfig config() const
    {
        cbid::FuzzConfig c;
        c.seed = seed;
        c.trials = trials;
        c.prime = prime;
        return c;
    }
};

void add_fuzz_flags(CLI::App* cmd, FuzzFlags& flags)
{
    cmd->add_option("--seed", flags.seed, "fuzz seed (default from CBID_SEED, else built in)")->envname("CBID_SEED");
    cmd->add_option("--trials", flags.trials, "fuzz evaluation points")->check(CLI::PositiveNumber);
    cmd->add_option("--prime", flags.prime, "fuzz modulus, a prime below 2^63");
}

cbid::Family parse_family(const std::string& name)
{
    if (auto f = cbid::family_from_name(name))
        return *f;
    std::string known;
    for (auto f : cbid::all_families())
        known += (known.empty() ? "" : ", ") + std::string(cbid::family_name(f));
    throw std::invalid_argument("unknown family '" + name + "' (known: " + known + ")");
}

std::string params_text(const std::vector<std::int64_t>& params)
{
    std::string s;
    for (auto p : params)
        s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

void print_report(const cbid::VerificationReport& r, const std::vector<std::string>& names)
{
    std::cout << cbid::method_name(r.method) << ": " << cbid::verdict_name(r.verdict);
    if (r.trials)
        std::cout << " (" << *r.trials << " trials, seed " << *r.seed << ")";
    if (r.constraint_checks)
        std::cout << " [" << r.constraint_checks << " points on the constraint]";
    std::cout << " in " << r.elapsed.count() << " ms\n";
    if (r.residual)
        std::cout << "residual: " << cbid::format_rf(*r.residual, names) << '\n';
}

int cmd_verify(const std::string& family_name, const std::vector<std::int64_t>& params, const std::string& mode,
               bool json, const FuzzFlags& flags)
{
    const cbid::Identity id = cbid::build_identity(parse_family(family_name), params);
    std::vector<cbid::VerificationReport> reports;
    if (mode == "exact" || mode == "both")
        reports.push_back(cbid::verify_exact(id));
    if (mode == "fuzz" || mode == "both")
        reports.push_back(cbid::fuzz_verify(id, flags.config()));

    const auto names = id.variable_names();
    bool all = true;
    for (const auto& r : reports)
        all = all && r.holds();
    if (json) {
        nlohmann::json doc;
        if (reports.size() == 1) {
            doc = cbid::report_to_json(reports.front(), names);
        } else {
            doc = nlohmann::json::array();
            for (const auto& r : reports)
                doc.push_back(cbid::report_to_json(r, names));
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::string shown = cbid::render_plain(id);
        if (shown.size() > kMaxEchoLength)
            shown = shown.substr(0, kMaxEchoLength) + " ...";
        std::cout << id.label() << ": " << shown << '\n';
        for (const auto& r : reports)
            print_report(r, names);
    }
    return all ? kHolds : kFails;
}

int cmd_expand(const std::string& family_name, const std::vector<std::int64_t>& params, const std::string& format)
{
    const cbid::Identity id = cbid::build_identity(parse_family(family_name), params);
    if (format == "json")
        std::cout << cbid::identity_to_json(id).dump(2) << '\n';
    else if (format == "latex")
        std::cout << cbid::render_latex(id) << '\n';
    else
        std::cout << cbid::render_plain(id) << '\n';
    return kHolds;
}

int cmd_derive(const std::vector<std::int64_t>& orders)
{
    const cbid::Derivation d = cbid::derive_inverse_identity(orders);
    const cbid::Identity inverted = cbid::invert_variables(d.identity);
    const cbid::Identity powers = cbid::build_n_powers(orders);
    // Inversion swaps the roles of the sides: the lone product lands on the right.
    auto offending = cbid::first_unmatched_term(inverted.lhs_values(), powers.rhs_values());
    if (!offending)
        offending = cbid::first_unmatched_term(inverted.rhs_values(), powers.lhs_values());

    const bool first_ok = d.verifies && d.leibniz_consistent && d.matches_closed_form;
    const bool second_ok = !offending;
    std::cout << "matches inverse_n: " << (first_ok ? "yes" : "no")
              << "; matches n_powers after inversion: " << (second_ok ? "yes" : "no") << '\n';
    const auto names = d.identity.variable_names();
    if (!first_ok) {
        if (d.offending_term)
            std::cout << "offending term: " << cbid::format_rf(*d.offending_term, names) << '\n';
        else if (d.report.residual)
            std::cout << "residual: " << cbid::format_rf(*d.report.residual, names) << '\n';
        else
            std::cout << "Leibniz expansion disagrees with direct differentiation\n";
    } else if (!second_ok) {
        std::cout << "offending term: " << cbid::format_rf(*offending, names) << '\n';
    }
    return first_ok && second_ok ? kHolds : kFails;
}

int cmd_grid(const std::string& family_name, std::int64_t bound, const std::string& mode, std::size_t n,
             const FuzzFlags& flags)
{
    const cbid::Family family = parse_family(family_name);
    cbid::GridOptions opt;
    opt.bound = bound;
    opt.n = n;
    opt.exact = mode == "exact" || mode == "both";
    opt.modp = mode == "fuzz" || mode == "both";
    opt.fuzz = flags.config();
    const cbid::GridSummary s = cbid::run_grid(family, opt);
    for (const auto& row : s.rows) {
        std::cout << cbid::family_name(family) << '(' << params_text(row.params) << ")  "
                  << (row.passed ? "pass" : "FAIL");
        for (const auto& r : row.reports)
            std::cout << "  " << cbid::method_name(r.method) << '=' << cbid::verdict_name(r.verdict);
        if (!row.error.empty())
            std::cout << "  error: " << row.error;
        std::cout << '\n';
    }
    std::cout << s.rows.size() << " identities, " << s.passed << " pass, " << s.failed << " fail, "
              << s.elapsed.count() << " ms\n";
    return s.all_passed() ? kHolds : kFails;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build, render and verify partial-fraction binomial identities"};
    app.require_subcommand(1);

    std::string family, mode = "exact", format = "plain";
    std::vector<std::int64_t> params;
    bool json = false;
    FuzzFlags flags;
    std::int64_t bound = 0;
    std::size_t grid_n = 2;

    auto* verify = app.add_subcommand("verify", "check an identity exactly, by random evaluation, or both");
    verify->add_option("family", family, "identity family")->required();
    verify->add_option("params", params, "integer parameters");
    verify->add_option("--mode", mode, "exact | fuzz | both")->check(CLI::IsMember({"exact", "fuzz", "both"}));
    verify->add_flag("--json", json, "print the report as JSON");
    add_fuzz_flags(verify, flags);

    auto* expand = app.add_subcommand("expand", "print the terms of an identity");
    expand->add_option("family", family, "identity family")->required();
    expand->add_option("params", params, "integer parameters");
    expand->add_option("--format", format, "json | latex | plain")->check(CLI::IsMember({"json", "latex", "plain"}));

    auto* derive = app.add_subcommand("derive", "derive the n-variable identity by differentiation and compare");
    derive->add_option("orders", params, "differentiation orders, one per variable")->required();

    auto* grid = app.add_subcommand("grid", "verify every parameter tuple up to a bound");
    grid->add_option("family", family, "identity family")->required();
    grid->add_option("bound", bound, "largest parameter value")->required()->check(CLI::NonNegativeNumber);
    grid->add_option("--mode", mode, "exact | fuzz | both")->check(CLI::IsMember({"exact", "fuzz", "both"}));
    grid->add_option("--n", grid_n, "vector length for order-vector families")->check(CLI::Range(2, 16));
    add_fuzz_flags(grid, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(family, params, mode, json, flags);
        if (*expand)
            return cmd_expand(family, params, format);
        if (*derive)
            return cmd_derive(params);
        return cmd_grid(family, bound, mode, grid_n, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
