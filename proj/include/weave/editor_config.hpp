#pragma once

#include <string>
#include <vector>

namespace weave {

struct CustomParameter {
    std::string parameter;
    std::string value;
};

/// Settings for the cucumberautocomplete editor extension.
struct EditorSettings {
    std::vector<std::string> steps_globs;
    std::string syncfeatures_glob = "**/*.feature";
    std::vector<CustomParameter> custom_parameters{{"{string}", "\".*\""}, {"{int}", ".*"}};
    bool steps_invariants = true;
    bool skip_doc_strings_format = true;
    bool smart_snippets = true;
    bool on_type_format = true;
    bool quick_suggestions_comments = true;
    bool quick_suggestions_strings = true;
    bool quick_suggestions_other = true;
    std::string gherkin_definition_part = "(Given|When|Then|But|And)\\(";

    /// Steps glob pointing at the generated glue, e.g. "generated/**/*.java".
    static EditorSettings for_glue_dir(const std::string& glue_output_dir, const std::string& file_extension = ".java");
};

/// Strict JSON in the key order and layout of the extension's documented
/// example settings file.
std::string emit_settings(const EditorSettings& cfg);

}  // namespace weave
