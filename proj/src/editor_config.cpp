#include "weave/editor_config.hpp"

#include "json.hpp"

namespace weave {

namespace {

std::string quoted(const std::string& value) { return nlohmann::json(value).dump(); }

const char* boolean(bool value) { return value ? "true" : "false"; }

}  // namespace

EditorSettings EditorSettings::for_glue_dir(const std::string& glue_output_dir, const std::string& file_extension) {
    std::string dir = glue_output_dir;
    while (dir.size() > 1 && dir.back() == '/') dir.pop_back();
    if (dir == ".") dir.clear();
    EditorSettings settings;
    settings.steps_globs.push_back((dir.empty() ? std::string() : dir + "/") + "**/*" + file_extension);
    return settings;
}

std::string emit_settings(const EditorSettings& cfg) {
    std::string out = "{\n";
    out += "    \"cucumberauto-complete.stepsInvariants\": " + std::string(boolean(cfg.steps_invariants)) + ",\n";
    out += "    \"cucumberauto-complete.steps\": [\n";
    for (std::size_t i = 0; i < cfg.steps_globs.size(); ++i) {
        out += "        " + quoted(cfg.steps_globs[i]);
        out += i + 1 < cfg.steps_globs.size() ? ",\n" : "\n";
    }
    out += "    ],\n";
    out += "    \"cucumberauto-complete.syncfeatures\": " + quoted(cfg.syncfeatures_glob) + ",\n";
    out += "    \"cucumberauto-complete.customParameters\": [\n";
    for (std::size_t i = 0; i < cfg.custom_parameters.size(); ++i) {
        // The reference layout opens the first entry with "{ ".
        out += i == 0 ? "        { \n" : "        {\n";
        out += "            \"parameter\": " + quoted(cfg.custom_parameters[i].parameter) + ",\n";
        out += "            \"value\": " + quoted(cfg.custom_parameters[i].value) + "\n";
        out += i + 1 < cfg.custom_parameters.size() ? "        },\n" : "        }\n";
    }
    out += "    ],\n";
    out += "    \"cucumberauto-complete.skipDocStringsFormat\": " + std::string(boolean(cfg.skip_doc_strings_format)) + ",\n";
    out += "    \"cucumberauto-complete.smartSnippets\": " + std::string(boolean(cfg.smart_snippets)) + ",\n";
    out += "    \"cucumberauto-complete.onTypeFormat\": " + std::string(boolean(cfg.on_type_format)) + ",\n";
    out += "    \"editor.quickSuggestions\": {\n";
    out += "    \"comments\": " + std::string(boolean(cfg.quick_suggestions_comments)) + ",\n";
    out += "    \"strings\": " + std::string(boolean(cfg.quick_suggestions_strings)) + ",\n";
    out += "    \"other\": " + std::string(boolean(cfg.quick_suggestions_other)) + "\n";
    out += "    },\n";
    out += "    \"cucumberauto-complete.gherkinDefinitionPart\": " + quoted(cfg.gherkin_definition_part) + "\n";
    out += "}\n";
    return out;
}

}  // namespace weave
