#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weave/runner.hpp"

namespace weave {

/// {"totals":{...},"scenarios":[{"feature","name","status","steps":[...]}]}
/// Keys are emitted in a fixed order.
std::string write_json(const RunReport& report);

/// Inverse of write_json. Throws ConfigError on malformed input.
RunReport read_json_report(std::string_view json_text);

struct JUnitCase {
    std::string name;
    std::string classname;  // feature path
    double time_s = 0.0;
    std::optional<std::string> failure;
    bool skipped = false;
};

struct JUnitDocument {
    std::string suite_name;
    int tests = 0;
    int failures = 0;
    int skipped = 0;
    std::vector<JUnitCase> cases;
};

JUnitDocument to_junit(const RunReport& report, std::string suite_name = "scenario-weave");

/// One testsuite, one testcase per scenario. Characters that XML 1.0 cannot
/// carry are replaced by U+FFFD.
std::string write_junit(const RunReport& report);
std::string write_junit(const JUnitDocument& doc);

/// Scenario header plus one line per step; inlined steps are indented one
/// extra level per nested call.
std::string write_pretty(const RunReport& report);

}  // namespace weave
