#pragma once

#include <functional>
#include <string>
#include <vector>

namespace crossnest::checks {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

using Suite = std::function<std::vector<CheckResult>()>;

/// Named verification suites, in a fixed presentation order.
const std::vector<std::pair<std::string, Suite>>& suites();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
/// "all" runs every suite.
std::vector<CheckResult> run_suite(const std::string& name);

// Individual suites.
std::vector<CheckResult> suite_bell();
std::vector<CheckResult> suite_cor31();
std::vector<CheckResult> suite_thm11();
std::vector<CheckResult> suite_lem21();
std::vector<CheckResult> suite_lem44();
std::vector<CheckResult> suite_thm45();
std::vector<CheckResult> suite_thm46();
std::vector<CheckResult> suite_cor47();
std::vector<CheckResult> suite_lem43();
std::vector<CheckResult> suite_prop51();
std::vector<CheckResult> suite_thm52();
std::vector<CheckResult> suite_fractions();
std::vector<CheckResult> suite_noncompat();

struct TableReport {
    std::vector<std::vector<long long>> printed;   // rows n = 1..6
    std::vector<std::vector<long long>> computed;  // formula values
    std::vector<std::vector<long long>> brute;     // exhaustive values
};

/// The two embedded 6x6 class-count tables next to freshly computed values.
TableReport crossing_table_report();
TableReport nesting_table_report();

/// The one fixture cell where the embedded crossing table disagrees with
/// both computation routes: (n, k, printed, computed).
struct TableAnomaly {
    int n, k;
    long long printed, computed;
};
TableAnomaly crossing_table_anomaly();

}  // namespace crossnest::checks
