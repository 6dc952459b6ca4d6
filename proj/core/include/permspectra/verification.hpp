#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permspectra {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // failure description, or a short summary when passed
};

/// Run one of the ten verification criteria (1-based).  Each criterion
/// cross-checks a slice of the library against independent oracles
/// (brute-force enumeration, dense characteristic polynomials, interval
/// arithmetic); randomized parts are driven by `seed` and deterministic
/// for a fixed seed.
CriterionResult run_criterion(int id, std::uint64_t seed = 20260823ULL);

/// All ten criteria in order.
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = 20260823ULL);

}  // namespace permspectra
