#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cbid/identity.hpp"

namespace cbid {

enum class Method { exact, modp };
enum class Verdict { holds, fails };

std::string_view method_name(Method m);
std::string_view verdict_name(Verdict v);

struct VerificationReport {
    Family family = Family::cb;
    std::vector<std::int64_t> params;
    Method method = Method::exact;
    Verdict verdict = Verdict::holds;
    /// sum(lhs) - sum(rhs), present exactly when an exact check fails.
    std::optional<RationalFunction> residual;
    std::optional<std::uint64_t> trials; ///< modp only
    std::optional<std::uint64_t> seed;   ///< modp only
    /// Sample points checked against the constraint (modp, conditional identities).
    std::uint64_t constraint_checks = 0;
    std::chrono::duration<double, std::milli> elapsed{0};

    bool holds() const { return verdict == Verdict::holds; }
};

/// The terms of lhs and the negated terms of rhs. For a conditional identity
/// the parametrization is substituted into each term first.
std::vector<RationalFunction> difference_terms(const Identity& id);

/// Exact check: the difference is summed over a common denominator and the
/// verdict is `holds` iff the numerator vanishes identically.
VerificationReport verify_exact(const Identity& id);

} // namespace cbid
