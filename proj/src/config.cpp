#include "weave/config.hpp"

#include <filesystem>
#include <set>

#include "json.hpp"
#include "weave/errors.hpp"
#include "weave/text.hpp"

namespace weave {

namespace {

using json = nlohmann::json;

const std::set<std::string> kKnownKeys{
    "features_root",  "reusable_dir_markers", "fixed_reusable_dir",  "glue_output_dir",
    "max_call_depth", "variables",            "enum_template_path", "stepdef_template_path",
};

std::string string_key(const json& doc, const std::string& key) {
    if (!doc.at(key).is_string()) throw ConfigError("config key \"" + key + "\" must be a string");
    return doc.at(key).get<std::string>();
}

std::string rebase(const std::string& base_dir, const std::string& path) {
    if (base_dir.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(base_dir) / path).generic_string();
}

}  // namespace

void ToolConfig::validate() const {
    if (features_root.empty()) throw ConfigError("features_root must not be empty");
    if (max_call_depth < 1) throw ConfigError("max_call_depth must be at least 1");
    if (reusable_dir_markers.empty()) throw ConfigError("reusable_dir_markers must not be empty");
    for (const auto& marker : reusable_dir_markers) {
        if (marker.empty()) throw ConfigError("reusable_dir_markers entries must not be empty");
    }
    if (glue_output_dir.empty()) throw ConfigError("glue_output_dir must not be empty");
}

ToolConfig parse_config(std::string_view json_text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!kKnownKeys.contains(key)) throw ConfigError("unknown config key \"" + key + "\"");
    }

    ToolConfig cfg;
    if (doc.contains("features_root")) cfg.features_root = rebase(base_dir, string_key(doc, "features_root"));
    if (doc.contains("reusable_dir_markers")) {
        const auto& markers = doc.at("reusable_dir_markers");
        if (!markers.is_array()) throw ConfigError("config key \"reusable_dir_markers\" must be an array of strings");
        cfg.reusable_dir_markers.clear();
        for (const auto& m : markers) {
            if (!m.is_string()) throw ConfigError("config key \"reusable_dir_markers\" must be an array of strings");
            cfg.reusable_dir_markers.push_back(m.get<std::string>());
        }
    }
    if (doc.contains("fixed_reusable_dir") && !doc.at("fixed_reusable_dir").is_null()) {
        cfg.fixed_reusable_dir = rebase(base_dir, string_key(doc, "fixed_reusable_dir"));
    }
    if (doc.contains("glue_output_dir")) cfg.glue_output_dir = rebase(base_dir, string_key(doc, "glue_output_dir"));
    if (doc.contains("max_call_depth")) {
        if (!doc.at("max_call_depth").is_number_integer()) {
            throw ConfigError("config key \"max_call_depth\" must be an integer");
        }
        cfg.max_call_depth = doc.at("max_call_depth").get<int>();
    }
    if (doc.contains("variables")) {
        const auto& vars = doc.at("variables");
        if (!vars.is_object()) throw ConfigError("config key \"variables\" must be an object of strings");
        for (const auto& [name, value] : vars.items()) {
            if (!value.is_string()) throw ConfigError("variable \"" + name + "\" must be a string");
            cfg.variables[name] = value.get<std::string>();
        }
    }
    if (doc.contains("enum_template_path")) {
        cfg.enum_template_path = rebase(base_dir, string_key(doc, "enum_template_path"));
    }
    if (doc.contains("stepdef_template_path")) {
        cfg.stepdef_template_path = rebase(base_dir, string_key(doc, "stepdef_template_path"));
    }
    cfg.validate();
    return cfg;
}

ToolConfig load_config(const std::string& path) {
    std::string source;
    try {
        source = text::read_file(path);
    } catch (const IoError&) {
        throw ConfigError("cannot read config file " + path);
    }
    return parse_config(source, std::filesystem::path(path).parent_path().generic_string());
}

}  // namespace weave
