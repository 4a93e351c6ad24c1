#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnloci/bn_core.hpp"

namespace bnloci {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct SelftestOptions {
    Int gmax = 60;
    // Negative control: the closed-form kappa of this locus is perturbed by
    // +1 before being compared against the brute-force oracle.
    std::optional<BNLocus> inject_fault;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

} // namespace bnloci
