#pragma once

#include <string>
#include <vector>

namespace trimeval::selftest {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail; // first failure, empty on success
};

/// Names of the embedded suites, in run order.
std::vector<std::string> suite_names();

/// Runs every embedded invariant suite at small fixed sizes.
std::vector<SuiteResult> run_all();

} // namespace trimeval::selftest
