#include "weave/runner.hpp"

#include <chrono>
#include <thread>

#include "json.hpp"

#include "weave/errors.hpp"

namespace weave {

namespace {

using json = nlohmann::json;

std::string arg_string(const json& entry, std::size_t index, const std::string& fallback) {
    if (!entry.contains("arg")) return fallback;
    const auto& arg = entry.at("arg");
    if (!arg.is_string()) throw ConfigError("binding #" + std::to_string(index) + ": \"arg\" must be a string");
    return arg.get<std::string>();
}

StepAction parse_action(const json& entry, std::size_t index) {
    if (!entry.contains("action") || !entry.at("action").is_string()) {
        throw ConfigError("binding #" + std::to_string(index) + ": \"action\" must be a string");
    }
    const auto name = entry.at("action").get<std::string>();
    if (name == "pass") return action::Pass{};
    if (name == "fail") return action::Fail{arg_string(entry, index, "step failed")};
    if (name == "record") return action::Record{arg_string(entry, index, entry.at("pattern").get<std::string>())};
    if (name == "sleep") {
        if (!entry.contains("arg") || !entry.at("arg").is_number_integer() || entry.at("arg").get<int>() < 0) {
            throw ConfigError("binding #" + std::to_string(index) + ": sleep needs a non-negative integer \"arg\"");
        }
        return action::Sleep{entry.at("arg").get<int>()};
    }
    if (name == "set_var") {
        if (!entry.contains("arg")) throw ConfigError("binding #" + std::to_string(index) + ": set_var needs \"arg\"");
        const auto& arg = entry.at("arg");
        if (arg.is_object() && arg.contains("name") && arg.contains("value") && arg.at("name").is_string() &&
            arg.at("value").is_string()) {
            return action::SetVar{arg.at("name").get<std::string>(), arg.at("value").get<std::string>()};
        }
        if (arg.is_string()) {
            auto text = arg.get<std::string>();
            auto eq = text.find('=');
            if (eq != std::string::npos && eq != 0) return action::SetVar{text.substr(0, eq), text.substr(eq + 1)};
        }
        throw ConfigError("binding #" + std::to_string(index) +
                          ": set_var \"arg\" must be \"name=value\" or {\"name\":..,\"value\":..}");
    }
    throw ConfigError("binding #" + std::to_string(index) + ": unknown action \"" + name + "\"");
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

StepBinding StepBinding::make(std::string_view pattern, StepAction action) {
    return StepBinding{StepPattern::compile(pattern), std::move(action)};
}

std::vector<StepBinding> parse_bindings(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("bindings manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("bindings manifest must be a JSON array");

    std::vector<StepBinding> bindings;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        if (!entry.is_object() || !entry.contains("pattern") || !entry.at("pattern").is_string()) {
            throw ConfigError("binding #" + std::to_string(i) + ": \"pattern\" must be a string");
        }
        bindings.push_back(StepBinding::make(entry.at("pattern").get<std::string>(), parse_action(entry, i)));
    }
    return bindings;
}

Variables parse_variables(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("variables file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("variables file must be a JSON object");
    Variables vars;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) throw ConfigError("variable \"" + key + "\" must be a string");
        vars.emplace(key, value.get<std::string>());
    }
    return vars;
}

std::string substitute_variables(std::string_view text, const Variables& vars) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('{', pos);
        if (open == std::string_view::npos) break;
        std::size_t close = text.find('}', open + 1);
        if (close == std::string_view::npos) break;
        std::string_view name = text.substr(open + 1, close - open - 1);
        // A nested '{' means this brace does not start a placeholder.
        if (name.find('{') != std::string_view::npos) {
            out.append(text.substr(pos, open + 1 - pos));
            pos = open + 1;
            continue;
        }
        out.append(text.substr(pos, open - pos));
        auto it = vars.find(name);
        if (it != vars.end()) {
            out.append(it->second);
        } else {
            out.append(text.substr(open, close - open + 1));
        }
        pos = close + 1;
    }
    out.append(text.substr(std::min(pos, text.size())));
    return out;
}

std::string_view to_string(StepStatus status) {
    switch (status) {
        case StepStatus::Passed: return "passed";
        case StepStatus::Failed: return "failed";
        case StepStatus::Skipped: return "skipped";
        case StepStatus::Undefined: return "undefined";
    }
    return "skipped";
}

std::string_view to_string(ScenarioStatus status) {
    switch (status) {
        case ScenarioStatus::Passed: return "passed";
        case ScenarioStatus::Failed: return "failed";
        case ScenarioStatus::Skipped: return "skipped";
    }
    return "skipped";
}

Totals RunReport::recount() const {
    Totals t;
    for (const auto& s : scenarios) {
        switch (s.status) {
            case ScenarioStatus::Passed: ++t.passed; break;
            case ScenarioStatus::Failed: ++t.failed; break;
            case ScenarioStatus::Skipped: ++t.skipped; break;
        }
    }
    return t;
}

RunReport run(std::span<const ExpandedScenario> expanded, std::span<const StepBinding> bindings,
              const Variables& vars, RunObserver* observer) {
    RunObserver ignore;
    RunObserver& events = observer != nullptr ? *observer : ignore;

    RunReport report;
    for (std::size_t si = 0; si < expanded.size(); ++si) {
        const auto& scenario = expanded[si];
        Variables scope = vars;
        ScenarioResult result{scenario.origin, ScenarioStatus::Passed, {}};
        bool halted = false;

        for (std::size_t step_index = 0; step_index < scenario.steps.size(); ++step_index) {
            const auto& expanded_step = scenario.steps[step_index];
            StepResult step{expanded_step.step.keyword, substitute_variables(expanded_step.step.text, scope),
                            expanded_step.call_chain, StepStatus::Skipped, 0.0, {}};
            if (halted) {
                result.steps.push_back(std::move(step));
                continue;
            }

            events.on_step(si, step_index, step.text);
            const auto started = std::chrono::steady_clock::now();

            const StepBinding* bound = nullptr;
            std::vector<StepArgumentValue> args;
            std::string ambiguity;
            for (const auto& binding : bindings) {
                auto captured = binding.pattern.match(step.text);
                if (!captured) continue;
                if (bound != nullptr) {
                    ambiguity = "ambiguous step: matches '" + bound->pattern.source() + "' and '" +
                                binding.pattern.source() + "'";
                    break;
                }
                bound = &binding;
                args = std::move(*captured);
            }

            if (bound == nullptr) {
                step.status = StepStatus::Undefined;
                step.error = "undefined step: " + step.text;
            } else if (!ambiguity.empty()) {
                step.status = StepStatus::Failed;
                step.error = ambiguity;
            } else {
                step.status = StepStatus::Passed;
                std::visit(
                    [&](const auto& act) {
                        using T = std::decay_t<decltype(act)>;
                        if constexpr (std::is_same_v<T, action::Fail>) {
                            step.status = StepStatus::Failed;
                            step.error = act.message;
                        } else if constexpr (std::is_same_v<T, action::Record>) {
                            events.on_record(act.key, args);
                        } else if constexpr (std::is_same_v<T, action::Sleep>) {
                            std::this_thread::sleep_for(std::chrono::milliseconds(act.ms));
                        } else if constexpr (std::is_same_v<T, action::SetVar>) {
                            scope[act.name] = act.value;
                        }
                    },
                    bound->action);
            }
            step.duration_ms = elapsed_ms(started);
            if (step.status != StepStatus::Passed) {
                halted = true;
                result.status = ScenarioStatus::Failed;
            }
            result.steps.push_back(std::move(step));
        }
        report.scenarios.push_back(std::move(result));
    }
    report.totals = report.recount();
    return report;
}

}  // namespace weave
