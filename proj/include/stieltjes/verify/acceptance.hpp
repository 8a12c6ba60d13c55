#pragma once

// The nine acceptance criteria as named groups of sweep cases.

#include "stieltjes/verify/sweeps.hpp"

#include <string>
#include <vector>

namespace stieltjes::verify {

struct CriterionResult {
    int number = 0;
    std::string title;
    std::vector<CaseResult> cases;
    double seconds = 0.0;  // wall clock, informational only

    bool pass() const;
    std::size_t failures() const;
};

inline constexpr int kCriterionCount = 9;

// Modulators exercised by criteria 2 and 5 (sine-only) and 3 and 5 (cosine-bearing).
std::vector<Modulator> sine_modulators(const LogNormalWeight& w);
std::vector<Modulator> cosine_modulators(const LogNormalWeight& w);

// Throws InvalidArgument for numbers outside 1..kCriterionCount.
CriterionResult run_criterion(int number);
std::vector<CriterionResult> run_acceptance();

}  // namespace stieltjes::verify
