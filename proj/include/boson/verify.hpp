#ifndef BOSON_VERIFY_HPP
#define BOSON_VERIFY_HPP

#include <string>
#include <vector>

namespace boson {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string note;  // e.g. documented source discrepancies
    double millis = 0;
};

struct RunReport {
    std::vector<CheckResult> checks;
    bool overall = true;
};

/// Runs the fixture suite. scope is "all" or one of: series-core,
/// combinatorics, normal-order, counting, diagrams, numerics.
/// Throws std::invalid_argument on an unknown scope.
RunReport run_verify(const std::string& scope);

}  // namespace boson

#endif
