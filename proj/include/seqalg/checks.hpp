#pragma once

#include <string>
#include <vector>

namespace seqalg {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // filled in on failure
};

// Names of the built-in verification suites.
const std::vector<std::string>& check_suite_names();

// Runs a suite; throws Error(UnknownSuite) for unrecognised names.
std::vector<CheckResult> run_check_suite(const std::string& suite);

} // namespace seqalg
