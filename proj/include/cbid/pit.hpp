#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cbid/identity.hpp"
#include "cbid/modular.hpp"
#include "cbid/verify.hpp"

namespace cbid {

inline constexpr std::uint64_t kDefaultSeed = 0x243F6A8885A308D3ull;

struct FuzzConfig {
    std::uint64_t trials = 64;
    std::uint64_t prime = modp::kMersenne61;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_resamples = 100;

    /// Throws std::invalid_argument unless prime is a prime below 2^63 and
    /// trials, max_resamples are positive.
    void validate() const;
};

/// Every draw of a trial hit a pole of some term.
class DegenerateSampling : public std::runtime_error {
public:
    DegenerateSampling() : std::runtime_error("degenerate sampling; raise max_resamples or change prime") {}
};

/// Evaluates sum(lhs) - sum(rhs) at `trials` random points of F_p^n (on the
/// constraint variety for conditional identities: the bound coordinate comes
/// from the parametrization, and the constraint is re-checked at each point).
/// holds iff every evaluation is zero. Trials run in parallel; trial i always
/// draws from the same stream, so the verdict is independent of thread count.
VerificationReport fuzz_verify(const Identity& id, const FuzzConfig& config = {});

/// Single-threaded reference for fuzz_verify.
VerificationReport fuzz_verify_serial(const Identity& id, const FuzzConfig& config = {});

/// The accepted sample point of every trial, in trial order.
std::vector<std::vector<std::uint64_t>> fuzz_sample_points(const Identity& id, const FuzzConfig& config = {});

} // namespace cbid
