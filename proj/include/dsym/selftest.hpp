#pragma once

// Consistency suites behind `dsym selftest`: closed forms against the
// brute-force route, scaled by the largest n.

#include <functional>
#include <string>
#include <vector>

namespace dsym {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// Runs every suite for sizes up to max_n (brute force stops at 6). The
/// callback, if set, sees each result as it completes.
std::vector<SuiteResult> run_selftest(int max_n, const std::function<void(const SuiteResult&)>& on_done = {});

} // namespace dsym
