#include "weave/codegen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "weave/errors.hpp"

namespace weave {

namespace {

const std::set<std::string, std::less<>> kKnownPlaceholders{"ENUM_NAME", "CONSTANT_LIST", "STEP_TEXT",
                                                            "DISPATCH_BODY"};

struct Placeholder {
    std::size_t begin;
    std::size_t end;  // one past "}}"
    std::string_view name;
};

std::vector<Placeholder> find_placeholders(std::string_view tpl) {
    std::vector<Placeholder> found;
    std::size_t pos = 0;
    while ((pos = tpl.find("{{", pos)) != std::string_view::npos) {
        std::size_t close = tpl.find("}}", pos + 2);
        if (close == std::string_view::npos) break;
        found.push_back({pos, close + 2, tpl.substr(pos + 2, close - pos - 2)});
        pos = close + 2;
    }
    return found;
}

void check_template(std::string_view which, std::string_view tpl, std::initializer_list<std::string_view> required) {
    auto placeholders = find_placeholders(tpl);
    for (const auto& p : placeholders) {
        if (!kKnownPlaceholders.contains(p.name)) {
            throw TemplateError(std::string(which) + " template uses unknown placeholder {{" + std::string(p.name) + "}}");
        }
    }
    for (auto name : required) {
        bool present = std::any_of(placeholders.begin(), placeholders.end(),
                                   [&](const Placeholder& p) { return p.name == name; });
        if (!present) {
            throw TemplateError(std::string(which) + " template is missing placeholder {{" + std::string(name) + "}}");
        }
    }
}

std::string substitute(std::string_view tpl, const std::map<std::string_view, std::string>& values) {
    std::string out;
    std::size_t pos = 0;
    for (const auto& p : find_placeholders(tpl)) {
        out.append(tpl.substr(pos, p.begin - pos));
        out.append(values.at(p.name));
        pos = p.end;
    }
    out.append(tpl.substr(pos));
    if (out.empty() || out.back() != '\n') out += '\n';
    return out;
}

struct EnumGroup {
    std::string folder;
    std::string enum_name;
    std::vector<std::string> identifiers;
};

std::vector<EnumGroup> group_by_folder(const ReuseRegistry& reg) {
    std::vector<EnumGroup> groups;
    std::map<std::string, std::string> folder_of_enum;
    for (const auto& constant : reg.constants) {
        if (groups.empty() || groups.back().folder != constant.folder) {
            std::string enum_name = pascal_case(constant.folder);
            auto [it, inserted] = folder_of_enum.emplace(enum_name, constant.folder);
            if (!inserted) throw CollisionError(enum_name, it->second, constant.folder);
            groups.push_back({constant.folder, enum_name, {}});
        }
        groups.back().identifiers.push_back(constant.identifier);
    }
    return groups;
}

std::string output_path(const GlueTemplate& tpl, const std::string& stem) {
    return normalize_path(tpl.output_dir, stem + tpl.file_extension);
}

std::string with_marker(const GlueTemplate& tpl, std::string body) {
    return tpl.comment_prefix + std::string(kGeneratedMarker) + "\n" + body;
}

}  // namespace

GlueTemplate GlueTemplate::defaults(std::string output_dir) {
    GlueTemplate tpl;
    tpl.enum_template =
        "public enum {{ENUM_NAME}} {\n"
        "{{CONSTANT_LIST}}\n"
        "};\n";
    tpl.stepdef_template =
        "@And(\"{{STEP_TEXT}}\")\n"
        "public void callFeature{{ENUM_NAME}}Object({{ENUM_NAME}} enumObject) {\n"
        "{{DISPATCH_BODY}}\n"
        "};\n";
    tpl.output_dir = std::move(output_dir);
    return tpl;
}

void validate_template(const GlueTemplate& tpl) {
    check_template("enum", tpl.enum_template, {"ENUM_NAME", "CONSTANT_LIST"});
    check_template("step definition", tpl.stepdef_template, {"ENUM_NAME", "STEP_TEXT", "DISPATCH_BODY"});
}

std::vector<GeneratedFile> render_enums(const ReuseRegistry& reg, const GlueTemplate& tpl) {
    validate_template(tpl);
    std::vector<GeneratedFile> files;
    for (const auto& group : group_by_folder(reg)) {
        std::string list;
        for (std::size_t i = 0; i < group.identifiers.size(); ++i) {
            list += "    " + group.identifiers[i];
            if (i + 1 != group.identifiers.size()) list += ",\n";
        }
        std::map<std::string_view, std::string> values{
            {"ENUM_NAME", group.enum_name}, {"CONSTANT_LIST", list}, {"STEP_TEXT", ""}, {"DISPATCH_BODY", ""}};
        files.push_back({output_path(tpl, group.enum_name), with_marker(tpl, substitute(tpl.enum_template, values)),
                         group.identifiers});
    }
    return files;
}

std::vector<GeneratedFile> render_stepdefs(const ReuseRegistry& reg, const GlueTemplate& tpl) {
    validate_template(tpl);
    std::vector<GeneratedFile> files;
    for (const auto& group : group_by_folder(reg)) {
        std::map<std::string_view, std::string> values{
            {"ENUM_NAME", group.enum_name},
            {"CONSTANT_LIST", ""},
            {"STEP_TEXT", "I call feature file {" + group.enum_name + "}"},
            {"DISPATCH_BODY", "    CALL_RUNTIME(enumObject);"},
        };
        files.push_back({output_path(tpl, "CallFeature" + group.enum_name + "Steps"),
                         with_marker(tpl, substitute(tpl.stepdef_template, values)), group.identifiers});
    }
    return files;
}

RegenerationResult regenerate_if_changed(const Workspace& ws_before, const Workspace& ws_after,
                                         const GlueTemplate& tpl) {
    auto pairs = [](const Workspace& ws) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& dir : ws.reusable_dirs) {
            for (const auto& file : dir.feature_files) out.emplace(dir.dir_name, file);
        }
        return out;
    };
    if (pairs(ws_before) == pairs(ws_after)) return NoChange{};

    auto reg = build_registry(ws_after);
    auto files = render_enums(reg, tpl);
    auto stepdefs = render_stepdefs(reg, tpl);
    files.insert(files.end(), std::make_move_iterator(stepdefs.begin()), std::make_move_iterator(stepdefs.end()));
    return files;
}

}  // namespace weave
