#include "weave/reports.hpp"

#include <cstdio>

#include "json.hpp"
#include "weave/errors.hpp"

namespace weave {

namespace {

using ojson = nlohmann::ordered_json;

StepKeyword keyword_from(const std::string& text) {
    for (auto k : {StepKeyword::Given, StepKeyword::When, StepKeyword::Then, StepKeyword::And, StepKeyword::But}) {
        if (keyword_text(k) == text) return k;
    }
    throw ConfigError("unknown step keyword \"" + text + "\" in report");
}

StepStatus step_status_from(const std::string& text) {
    for (auto s : {StepStatus::Passed, StepStatus::Failed, StepStatus::Skipped, StepStatus::Undefined}) {
        if (to_string(s) == text) return s;
    }
    throw ConfigError("unknown step status \"" + text + "\" in report");
}

ScenarioStatus scenario_status_from(const std::string& text) {
    for (auto s : {ScenarioStatus::Passed, ScenarioStatus::Failed, ScenarioStatus::Skipped}) {
        if (to_string(s) == text) return s;
    }
    throw ConfigError("unknown scenario status \"" + text + "\" in report");
}

// Appends the code point, or U+FFFD when XML 1.0 cannot carry it.
void append_xml_char(std::string& out, char32_t cp, std::string_view original) {
    bool allowed = cp == 0x9 || cp == 0xA || cp == 0xD || (cp >= 0x20 && cp <= 0xD7FF) ||
                   (cp >= 0xE000 && cp <= 0xFFFD) || (cp >= 0x10000 && cp <= 0x10FFFF);
    if (allowed) {
        out.append(original);
    } else {
        out.append("\xEF\xBF\xBD");
    }
}

/// Escapes markup characters and replaces invalid UTF-8 or disallowed code
/// points. Whitespace other than ' ' is written as a character reference so
/// attribute values survive normalization.
std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char lead = static_cast<unsigned char>(s[i]);
        switch (lead) {
            case '&': out += "&amp;"; ++i; continue;
            case '<': out += "&lt;"; ++i; continue;
            case '>': out += "&gt;"; ++i; continue;
            case '"': out += "&quot;"; ++i; continue;
            case '\'': out += "&apos;"; ++i; continue;
            case '\n': out += "&#10;"; ++i; continue;
            case '\r': out += "&#13;"; ++i; continue;
            case '\t': out += "&#9;"; ++i; continue;
            default: break;
        }
        std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > s.size()) {
            out.append("\xEF\xBF\xBD");
            ++i;
            continue;
        }
        char32_t cp = len == 1 ? lead : len == 2 ? (lead & 0x1F) : len == 3 ? (lead & 0x0F) : (lead & 0x07);
        bool valid = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cont = static_cast<unsigned char>(s[i + k]);
            if ((cont & 0xC0) != 0x80) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        // Reject overlong forms and surrogates.
        static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
        if (!valid || cp < kMinForLength[len] || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.append("\xEF\xBF\xBD");
            ++i;
            continue;
        }
        append_xml_char(out, cp, s.substr(i, len));
        i += len;
    }
    return out;
}

std::string format_seconds(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    return buf;
}

std::string describe_chain(const std::vector<CallFrame>& chain) {
    std::vector<std::string> parts;
    for (const auto& frame : chain) parts.push_back(frame.feature + " (" + frame.scenario + ")");
    return join_call_path(parts);
}

}  // namespace

std::string write_json(const RunReport& report) {
    ojson doc;
    doc["totals"] = ojson{{"passed", report.totals.passed},
                          {"failed", report.totals.failed},
                          {"skipped", report.totals.skipped}};
    doc["scenarios"] = ojson::array();
    for (const auto& scenario : report.scenarios) {
        ojson s;
        s["feature"] = scenario.origin.feature;
        s["name"] = scenario.origin.scenario;
        s["status"] = to_string(scenario.status);
        s["steps"] = ojson::array();
        for (const auto& step : scenario.steps) {
            ojson j;
            j["keyword"] = keyword_text(step.keyword);
            j["text"] = step.text;
            j["status"] = to_string(step.status);
            j["duration_ms"] = step.duration_ms;
            j["call_chain"] = ojson::array();
            for (const auto& frame : step.call_chain) {
                j["call_chain"].push_back(ojson{{"feature", frame.feature}, {"scenario", frame.scenario}});
            }
            if (!step.error.empty()) j["error"] = step.error;
            s["steps"].push_back(std::move(j));
        }
        doc["scenarios"].push_back(std::move(s));
    }
    return doc.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

RunReport read_json_report(std::string_view json_text) {
    RunReport report;
    try {
        auto doc = ojson::parse(json_text);
        const auto& totals = doc.at("totals");
        report.totals = Totals{totals.at("passed").get<int>(), totals.at("failed").get<int>(),
                               totals.at("skipped").get<int>()};
        for (const auto& s : doc.at("scenarios")) {
            ScenarioResult scenario;
            scenario.origin = CallFrame{s.at("feature").get<std::string>(), s.at("name").get<std::string>()};
            scenario.status = scenario_status_from(s.at("status").get<std::string>());
            for (const auto& j : s.at("steps")) {
                StepResult step;
                step.keyword = keyword_from(j.at("keyword").get<std::string>());
                step.text = j.at("text").get<std::string>();
                step.status = step_status_from(j.at("status").get<std::string>());
                step.duration_ms = j.at("duration_ms").get<double>();
                for (const auto& frame : j.at("call_chain")) {
                    step.call_chain.push_back(
                        CallFrame{frame.at("feature").get<std::string>(), frame.at("scenario").get<std::string>()});
                }
                if (j.contains("error")) step.error = j.at("error").get<std::string>();
                scenario.steps.push_back(std::move(step));
            }
            report.scenarios.push_back(std::move(scenario));
        }
    } catch (const ojson::exception& e) {
        throw ConfigError(std::string("malformed JSON report: ") + e.what());
    }
    return report;
}

JUnitDocument to_junit(const RunReport& report, std::string suite_name) {
    JUnitDocument doc;
    doc.suite_name = std::move(suite_name);
    for (const auto& scenario : report.scenarios) {
        JUnitCase c;
        c.name = scenario.origin.scenario;
        c.classname = scenario.origin.feature;
        double total_ms = 0.0;
        for (const auto& step : scenario.steps) total_ms += step.duration_ms;
        c.time_s = total_ms / 1000.0;
        c.skipped = scenario.status == ScenarioStatus::Skipped;
        if (scenario.status == ScenarioStatus::Failed) {
            std::string message = "scenario failed";
            for (const auto& step : scenario.steps) {
                if (step.status != StepStatus::Failed && step.status != StepStatus::Undefined) continue;
                message = std::string(to_string(step.status)) + " step '" + std::string(keyword_text(step.keyword)) +
                          " " + step.text + "': " + step.error + " [call chain: " + describe_chain(step.call_chain) +
                          "]";
                break;
            }
            c.failure = message;
        }
        doc.cases.push_back(std::move(c));
    }
    doc.tests = static_cast<int>(doc.cases.size());
    for (const auto& c : doc.cases) {
        if (c.failure) ++doc.failures;
        if (c.skipped) ++doc.skipped;
    }
    return doc;
}

std::string write_junit(const JUnitDocument& doc) {
    double total = 0.0;
    for (const auto& c : doc.cases) total += c.time_s;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuite name=\"" + xml_escape(doc.suite_name) + "\" tests=\"" + std::to_string(doc.tests) +
           "\" failures=\"" + std::to_string(doc.failures) + "\" skipped=\"" + std::to_string(doc.skipped) +
           "\" time=\"" + format_seconds(total) + "\">\n";
    for (const auto& c : doc.cases) {
        out += "  <testcase name=\"" + xml_escape(c.name) + "\" classname=\"" + xml_escape(c.classname) +
               "\" time=\"" + format_seconds(c.time_s) + "\"";
        if (!c.failure && !c.skipped) {
            out += "/>\n";
            continue;
        }
        out += ">\n";
        if (c.failure) {
            out += "    <failure message=\"" + xml_escape(*c.failure) + "\">" + xml_escape(*c.failure) + "</failure>\n";
        }
        if (c.skipped) out += "    <skipped/>\n";
        out += "  </testcase>\n";
    }
    out += "</testsuite>\n";
    return out;
}

std::string write_junit(const RunReport& report) { return write_junit(to_junit(report)); }

std::string write_pretty(const RunReport& report) {
    auto glyph = [](StepStatus status) -> std::string_view {
        switch (status) {
            case StepStatus::Passed: return "✓";
            case StepStatus::Failed: return "✗";
            case StepStatus::Skipped: return "-";
            case StepStatus::Undefined: return "?";
        }
        return "?";
    };

    std::string out;
    for (const auto& scenario : report.scenarios) {
        out += "Scenario: " + scenario.origin.scenario + " (" + scenario.origin.feature + ") " +
               std::string(to_string(scenario.status)) + "\n";
        for (const auto& step : scenario.steps) {
            std::size_t depth = step.call_chain.empty() ? 0 : step.call_chain.size() - 1;
            out.append(2 + 2 * depth, ' ');
            out += glyph(step.status);
            out += ' ';
            out += keyword_text(step.keyword);
            out += ' ';
            out += step.text;
            if (!step.error.empty()) out += "  -- " + step.error;
            out += '\n';
        }
    }
    return out;
}

}  // namespace weave
