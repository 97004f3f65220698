#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rotvac {

enum class ToleranceProfile {
    standard, ///< full case counts
    quick,    ///< reduced case counts, same tolerances
};

struct VerifyOptions {
    std::vector<int> criteria; ///< empty = all of 1..10
    ToleranceProfile profile = ToleranceProfile::standard;
    std::uint64_t seed = 0x5eed5eedULL;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int criterion_count = 10;

std::string criterion_title(int id);

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

std::vector<CriterionResult> run_verification(const VerifyOptions& opts = {});

} // namespace rotvac
