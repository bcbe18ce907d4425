#pragma once

#include <string>
#include <vector>

#include "blochnorm/types.hpp"

namespace blochnorm::validation {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidateConfig {
    Params p;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
};

// Runs the full invariant suite (special functions, series representations,
// quadrature oracles, constants, Monte Carlo) and returns one result per
// check.  Deterministic for fixed (p, samples, seed).
std::vector<CheckResult> run_all(const ValidateConfig& cfg);

}  // namespace blochnorm::validation
