#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weave/registry.hpp"

namespace weave {

/// Text templates for generated glue. Placeholders are {{ENUM_NAME}},
/// {{CONSTANT_LIST}}, {{STEP_TEXT}} and {{DISPATCH_BODY}}.
struct GlueTemplate {
    std::string enum_template;
    std::string stepdef_template;
    std::string output_dir = "generated";
    std::string file_extension = ".java";
    std::string comment_prefix = "// ";

    /// JVM-style glue: an enum per reusable directory and one
    /// "I call feature file {Enum}" step definition per enum.
    static GlueTemplate defaults(std::string output_dir = "generated");
};

inline constexpr std::string_view kGeneratedMarker = "GENERATED — do not edit";

struct GeneratedFile {
    std::string path;
    std::string content;
    std::vector<std::string> source_constants;
    bool operator==(const GeneratedFile&) const = default;
};

/// Throws TemplateError when a required placeholder is missing or an unknown
/// one is present.
void validate_template(const GlueTemplate& tpl);

std::vector<GeneratedFile> render_enums(const ReuseRegistry& reg, const GlueTemplate& tpl);
std::vector<GeneratedFile> render_stepdefs(const ReuseRegistry& reg, const GlueTemplate& tpl);

struct NoChange {};
using RegenerationResult = std::variant<std::vector<GeneratedFile>, NoChange>;

/// NoChange iff both workspaces expose the same (folder, file) pairs;
/// otherwise the enum files followed by the step definition files of ws_after.
RegenerationResult regenerate_if_changed(const Workspace& ws_before, const Workspace& ws_after,
                                         const GlueTemplate& tpl);

}  // namespace weave
