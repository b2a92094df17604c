#include "weave/expander.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <system_error>

#include "weave/errors.hpp"
#include "weave/tag_expr.hpp"
#include "weave/text.hpp"

namespace weave {

namespace {

constexpr std::string_view kCallPrefix = "I call feature file ";

bool is_identifier(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
    });
}

std::optional<std::vector<std::string>> quoted_strings(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (text::is_space(s[i])) {
            ++i;
            continue;
        }
        if (s[i] != '"') return std::nullopt;
        std::size_t close = s.find('"', i + 1);
        if (close == std::string_view::npos || close == i + 1) return std::nullopt;
        // Adjacent quoted strings need whitespace between them.
        if (close + 1 < s.size() && !text::is_space(s[close + 1])) return std::nullopt;
        out.emplace_back(s.substr(i + 1, close - i - 1));
        i = close + 1;
    }
    return out;
}

std::string identity_of(const std::string& path) {
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    return ec ? path : canonical.generic_string();
}

class Expander {
public:
    Expander(const ReuseRegistry& reg, const Workspace& ws, int max_depth)
        : reg_(reg), ws_(ws), max_depth_(max_depth) {}

    ExpandedScenario run(const Scenario& scenario, const FeatureAst& owner) {
        ExpandedScenario out;
        out.origin = CallFrame{owner.source_path, scenario.name};
        out.effective_tags = effective_tags(owner, scenario);

        std::vector<CallFrame> chain{out.origin};
        active_.push_back({identity_of(owner.source_path), owner.source_path});
        if (owner.background) {
            for (const auto& step : owner.background->steps) emit(step, chain, out.steps);
        }
        for (const auto& step : scenario.steps) emit(step, chain, out.steps);
        active_.pop_back();
        return out;
    }

private:
    struct ActiveFile {
        std::string identity;
        std::string display;
    };

    std::vector<std::string> active_display(const std::string& tail) const {
        std::vector<std::string> path;
        for (const auto& f : active_) path.push_back(f.display);
        path.push_back(tail);
        return path;
    }

    void emit(const Step& step, const std::vector<CallFrame>& chain, std::vector<ExpandedStep>& out) {
        auto call = match_call_step(step.text);
        if (!call) {
            out.push_back(ExpandedStep{step, chain});
            return;
        }

        std::string target = resolve_call(reg_, *call);
        std::string identity = identity_of(target);
        bool on_chain = std::any_of(active_.begin(), active_.end(),
                                    [&](const ActiveFile& f) { return f.identity == identity; });
        if (on_chain) throw CycleError(active_display(target));
        if (static_cast<int>(chain.size()) + 1 > max_depth_) {
            throw DepthExceeded(active_display(target), max_depth_);
        }

        const FeatureAst& callee = load(target);
        if (callee.scenarios.empty()) {
            throw ResolveError(ResolveError::Kind::EmptyFeature,
                               "called feature file " + target + " has no scenarios");
        }

        active_.push_back({identity, target});
        for (const auto& scenario : callee.scenarios) {
            std::vector<CallFrame> inner = chain;
            inner.push_back(CallFrame{callee.source_path, scenario.name});
            if (callee.background) {
                for (const auto& s : callee.background->steps) emit(s, inner, out);
            }
            for (const auto& s : scenario.steps) emit(s, inner, out);
        }
        active_.pop_back();
    }

    const FeatureAst& load(const std::string& path) {
        if (const FeatureAst* known = ws_.find(path)) return *known;
        auto it = loaded_.find(path);
        if (it == loaded_.end()) {
            it = loaded_.emplace(path, parse_feature(text::read_file(path), path)).first;
        }
        return it->second;
    }

    const ReuseRegistry& reg_;
    const Workspace& ws_;
    int max_depth_;
    std::vector<ActiveFile> active_;
    std::map<std::string, FeatureAst> loaded_;
};

}  // namespace

std::optional<CallRef> match_call_step(std::string_view step_text) {
    std::string_view trimmed = text::trim(step_text);
    if (!trimmed.starts_with(kCallPrefix)) return std::nullopt;
    std::string_view rest = text::trim(trimmed.substr(kCallPrefix.size()));
    if (is_identifier(rest)) return EnumForm{std::string(rest)};

    auto strings = quoted_strings(rest);
    if (!strings) return std::nullopt;
    if (strings->size() == 1) return FixedFolderForm{(*strings)[0]};
    if (strings->size() == 2) return FolderFileForm{(*strings)[0], (*strings)[1]};
    return std::nullopt;
}

std::vector<Tag> effective_tags(const FeatureAst& feature, const Scenario& scenario) {
    std::vector<Tag> tags;
    for (const auto* source : {&feature.tags, &scenario.tags}) {
        for (const auto& tag : *source) {
            if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
        }
    }
    return tags;
}

ExpandedScenario expand(const Scenario& scenario, const FeatureAst& owner, const ReuseRegistry& reg,
                        const Workspace& ws, int max_depth) {
    if (max_depth < 1) throw ConfigError("max call depth must be at least 1");
    return Expander(reg, ws, max_depth).run(scenario, owner);
}

std::vector<ScenarioRef> filter_scenarios(const Workspace& ws, std::string_view tag_expr) {
    const auto expr = TagExpression::parse(tag_expr);
    std::vector<ScenarioRef> selected;
    for (const auto& loaded : ws.all_features) {
        for (const auto& scenario : loaded.ast.scenarios) {
            auto tags = effective_tags(loaded.ast, scenario);
            if (expr.evaluate(tags)) selected.push_back({&loaded.ast, &scenario});
        }
    }
    return selected;
}

}  // namespace weave
