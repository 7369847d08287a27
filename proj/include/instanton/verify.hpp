#pragma once

#include <string>
#include <vector>

namespace inst {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    double seconds = 0;
};

// The twelve acceptance checks, in order.
std::vector<CheckResult> acceptance_checks();
// One acceptance check by number (1..12).
CheckResult acceptance_check(int number);

// Named suites: algebra, localization, nekrasov, pert, wallcross, p2, all.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace inst
