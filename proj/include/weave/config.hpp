#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weave/expander.hpp"
#include "weave/runner.hpp"
#include "weave/workspace.hpp"

namespace weave {

inline constexpr std::string_view kConfigFileName = "scenario-weave.json";

struct ToolConfig {
    std::string features_root = "./features/";
    std::vector<std::string> reusable_dir_markers = kDefaultMarkers;
    std::optional<std::string> fixed_reusable_dir;
    std::string glue_output_dir = "generated/";
    int max_call_depth = kDefaultMaxDepth;
    Variables variables;
    std::optional<std::string> enum_template_path;
    std::optional<std::string> stepdef_template_path;

    /// Throws ConfigError.
    void validate() const;
};

/// Unknown keys and wrongly typed values are errors. Relative paths are
/// resolved against base_dir when it is non-empty.
ToolConfig parse_config(std::string_view json_text, const std::string& base_dir = {});

ToolConfig load_config(const std::string& path);

}  // namespace weave
