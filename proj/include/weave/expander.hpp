#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weave/gherkin.hpp"
#include "weave/registry.hpp"
#include "weave/workspace.hpp"

namespace weave {

inline constexpr int kDefaultMaxDepth = 16;

/// One level of provenance: which scenario of which file a step came from.
struct CallFrame {
    std::string feature;
    std::string scenario;
    bool operator==(const CallFrame&) const = default;
};

struct ExpandedStep {
    Step step;
    std::vector<CallFrame> call_chain;  // outermost caller first
    bool operator==(const ExpandedStep&) const = default;
};

struct ExpandedScenario {
    CallFrame origin;
    std::vector<ExpandedStep> steps;
    std::vector<Tag> effective_tags;
    bool operator==(const ExpandedScenario&) const = default;
};

/// Recognizes the built-in call steps:
///   I call feature file COMMON_LOGIN          -> EnumForm
///   I call feature file "folder" "file"       -> FolderFileForm
///   I call feature file "file"                -> FixedFolderForm
std::optional<CallRef> match_call_step(std::string_view text);

/// Feature tags followed by scenario tags, duplicates removed.
std::vector<Tag> effective_tags(const FeatureAst& feature, const Scenario& scenario);

/// Inlines every call step of `scenario`, recursively. The owner's Background
/// is prepended once; each callee scenario contributes its file's Background
/// followed by its own steps, in document order.
///
/// A call chain of length n means n-1 nested calls; chains longer than
/// max_depth raise DepthExceeded. A feature file that recurs on the active
/// chain raises CycleError. Callee files outside the workspace are read from
/// disk.
ExpandedScenario expand(const Scenario& scenario, const FeatureAst& owner, const ReuseRegistry& reg,
                        const Workspace& ws, int max_depth = kDefaultMaxDepth);

struct ScenarioRef {
    const FeatureAst* feature;
    const Scenario* scenario;
};

/// Scenarios whose effective tags satisfy tag_expr, in workspace order.
std::vector<ScenarioRef> filter_scenarios(const Workspace& ws, std::string_view tag_expr);

}  // namespace weave
