#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weave/expander.hpp"
#include "weave/step_match.hpp"

namespace weave {

namespace action {
struct Pass {
    bool operator==(const Pass&) const = default;
};
struct Fail {
    std::string message;
    bool operator==(const Fail&) const = default;
};
struct Record {
    std::string key;
    bool operator==(const Record&) const = default;
};
struct Sleep {
    int ms = 0;
    bool operator==(const Sleep&) const = default;
};
struct SetVar {
    std::string name;
    std::string value;
    bool operator==(const SetVar&) const = default;
};
}  // namespace action

using StepAction = std::variant<action::Pass, action::Fail, action::Record, action::Sleep, action::SetVar>;

/// A step pattern bound to a scripted action. Stands in for host-language glue.
struct StepBinding {
    StepPattern pattern;
    StepAction action;

    /// Throws PatternError when the pattern does not compile.
    static StepBinding make(std::string_view pattern, StepAction action);
};

using Variables = std::map<std::string, std::string, std::less<>>;

/// Parses a bindings manifest: an array of {"pattern", "action", "arg"?}.
/// Throws ConfigError on schema violations and PatternError on bad patterns.
std::vector<StepBinding> parse_bindings(std::string_view json_text);

/// Parses a JSON object of string to string. Throws ConfigError.
Variables parse_variables(std::string_view json_text);

/// Replaces every "{name}" whose name is a known variable. Single left to
/// right pass; unknown names stay verbatim.
std::string substitute_variables(std::string_view text, const Variables& vars);

enum class StepStatus { Passed, Failed, Skipped, Undefined };
enum class ScenarioStatus { Passed, Failed, Skipped };

std::string_view to_string(StepStatus status);
std::string_view to_string(ScenarioStatus status);

struct StepResult {
    StepKeyword keyword = StepKeyword::Given;
    std::string text;  // after variable substitution
    std::vector<CallFrame> call_chain;
    StepStatus status = StepStatus::Skipped;
    double duration_ms = 0.0;
    std::string error;  // set for failed and undefined steps
    bool operator==(const StepResult&) const = default;
};

struct ScenarioResult {
    CallFrame origin;
    ScenarioStatus status = ScenarioStatus::Passed;
    std::vector<StepResult> steps;
    bool operator==(const ScenarioResult&) const = default;
};

struct Totals {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool operator==(const Totals&) const = default;
};

struct RunReport {
    std::vector<ScenarioResult> scenarios;
    Totals totals;

    Totals recount() const;
    bool operator==(const RunReport&) const = default;
};

/// Receives execution events; the default implementation ignores them.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    virtual void on_step(std::size_t /*scenario*/, std::size_t /*step*/, std::string_view /*text*/) {}
    virtual void on_record(std::string_view /*key*/, const std::vector<StepArgumentValue>& /*args*/) {}
};

/// Executes scenarios one after another on the calling thread. Each step runs
/// at most once; after the first failed or undefined step the rest of the
/// scenario is skipped. Variables are reset to `vars` at each scenario start.
RunReport run(std::span<const ExpandedScenario> expanded, std::span<const StepBinding> bindings,
              const Variables& vars, RunObserver* observer = nullptr);

}  // namespace weave
