#pragma once

#include "orbitint/interval.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitint {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// First failing case, if any.
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    mpfr_prec_t precision = kDefaultPrecision;
    /// Multiplies every sample count.
    std::size_t scale = 1;
};

/// Runs every invariant suite.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);
/// Fixed-width pass/fail table.
std::string verify_table(const std::vector<SuiteResult>& results);
std::string verify_json(const std::vector<SuiteResult>& results, const VerifyOptions& options);

}  // namespace orbitint
