#include "weave/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <system_error>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "weave/ci_prepare.hpp"
#include "weave/codegen.hpp"
#include "weave/config.hpp"
#include "weave/editor_config.hpp"
#include "weave/errors.hpp"
#include "weave/expander.hpp"
#include "weave/registry.hpp"
#include "weave/reports.hpp"
#include "weave/runner.hpp"
#include "weave/text.hpp"

namespace fs = std::filesystem;

namespace weave::cli {

namespace {

constexpr std::string_view kManifestName = ".scenario-weave-manifest.json";

/// Thrown when a command would clobber an existing file without --force.
class RefusedOverwrite : public Error {
public:
    using Error::Error;
};

struct GlobalOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> features_root;
    std::optional<std::string> markers;
    std::optional<std::string> fixed_dir;
    std::optional<std::string> glue_dir;
    std::optional<int> max_depth;
    std::vector<std::string> vars;
    std::optional<std::string> enum_template;
    std::optional<std::string> stepdef_template;
};

struct RunOptions {
    std::string tags;
    std::string bindings_path;
    std::optional<std::string> vars_path;
    std::vector<std::string> formats{"json", "junit", "pretty"};
    std::string json_out = "target/report.json";
    std::string junit_out = "target/test-results.xml";
    std::string pretty_out = "target/pretty.txt";
};

struct CiOptions {
    std::string template_path;
    std::string feature_path;
    std::string tags;
    bool in_place = false;
    bool force = false;
    std::optional<std::string> output;
    std::string path_token = std::string(kDefaultPathToken);
    std::string tag_token = std::string(kDefaultTagToken);
};

struct EditorOptions {
    std::string dir = ".";
    bool force = false;
    std::vector<std::string> steps_globs;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        auto part = text::trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!part.empty()) parts.emplace_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

ToolConfig resolve_config(const GlobalOptions& g) {
    ToolConfig cfg;
    if (g.config_path) {
        cfg = load_config(*g.config_path);
    } else {
        std::error_code ec;
        if (fs::is_regular_file(std::string(kConfigFileName), ec)) cfg = load_config(std::string(kConfigFileName));
    }
    if (g.features_root) cfg.features_root = *g.features_root;
    if (g.markers) cfg.reusable_dir_markers = split_commas(*g.markers);
    if (g.fixed_dir) cfg.fixed_reusable_dir = *g.fixed_dir;
    if (g.glue_dir) cfg.glue_output_dir = *g.glue_dir;
    if (g.max_depth) cfg.max_call_depth = *g.max_depth;
    if (g.enum_template) cfg.enum_template_path = *g.enum_template;
    if (g.stepdef_template) cfg.stepdef_template_path = *g.stepdef_template;
    for (const auto& assignment : g.vars) {
        auto eq = assignment.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--var expects name=value, got '" + assignment + "'");
        cfg.variables[assignment.substr(0, eq)] = assignment.substr(eq + 1);
    }
    cfg.validate();
    return cfg;
}

std::string read_config_file(const std::string& path, const std::string& what) {
    try {
        return text::read_file(path);
    } catch (const IoError&) {
        throw ConfigError("cannot read " + what + " " + path);
    }
}

Workspace load_workspace(const ToolConfig& cfg) {
    try {
        return scan_workspace(cfg.features_root, cfg.reusable_dir_markers);
    } catch (const IoError& e) {
        throw ConfigError(e.what());
    }
}

ReuseRegistry load_registry(const ToolConfig& cfg, const Workspace& ws) {
    try {
        return build_registry(ws, cfg.fixed_reusable_dir);
    } catch (const IoError& e) {
        throw ConfigError(e.what());
    }
}

GlueTemplate load_templates(const ToolConfig& cfg) {
    GlueTemplate tpl = GlueTemplate::defaults(cfg.glue_output_dir);
    if (cfg.enum_template_path) tpl.enum_template = read_config_file(*cfg.enum_template_path, "enum template");
    if (cfg.stepdef_template_path) {
        tpl.stepdef_template = read_config_file(*cfg.stepdef_template_path, "step definition template");
    }
    validate_template(tpl);
    return tpl;
}

int cmd_scan(const ToolConfig& cfg, std::ostream& out) {
    auto ws = load_workspace(cfg);
    auto reg = load_registry(cfg, ws);
    out << ws.all_features.size() << " features under " << ws.features_root << "\n";
    out << ws.reusable_dirs.size() << " reusable directories\n";
    for (const auto& dir : ws.reusable_dirs) {
        out << "  " << dir.dir_name << " (marker \"" << dir.matched_marker << "\"): " << dir.feature_files.size()
            << " feature files\n";
    }
    out << reg.constants.size() << " constants\n";
    for (const auto& constant : reg.constants) {
        out << "  " << constant.identifier << " -> " << constant.target_path << "\n";
    }
    return kOk;
}

struct Manifest {
    std::vector<ReusableDir> reusable;
    std::vector<std::string> generated;
};

Manifest read_manifest(const std::string& path) {
    Manifest manifest;
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) return manifest;
    try {
        auto doc = nlohmann::json::parse(text::read_file(path));
        for (const auto& dir : doc.at("reusable")) {
            manifest.reusable.push_back(ReusableDir{dir.at("dir").get<std::string>(), "",
                                                    dir.at("files").get<std::vector<std::string>>()});
        }
        manifest.generated = doc.at("generated").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        // Unreadable manifest: treat as a fresh output directory.
        return Manifest{};
    }
    return manifest;
}

std::string manifest_json(const Workspace& ws, const std::vector<GeneratedFile>& files) {
    nlohmann::ordered_json doc;
    doc["reusable"] = nlohmann::ordered_json::array();
    for (const auto& dir : ws.reusable_dirs) {
        doc["reusable"].push_back({{"dir", dir.dir_name}, {"files", dir.feature_files}});
    }
    doc["generated"] = nlohmann::ordered_json::array();
    for (const auto& f : files) doc["generated"].push_back(f.path);
    return doc.dump(2) + "\n";
}

bool on_disk_matches(const GeneratedFile& file) {
    std::error_code ec;
    if (!fs::is_regular_file(file.path, ec)) return false;
    return text::read_file(file.path) == file.content;
}

int cmd_generate(const ToolConfig& cfg, std::ostream& out, std::ostream& err) {
    auto ws = load_workspace(cfg);
    auto reg = load_registry(cfg, ws);
    auto tpl = load_templates(cfg);
    const std::string manifest_path = normalize_path(cfg.glue_output_dir, std::string(kManifestName));
    Manifest previous = read_manifest(manifest_path);

    Workspace before;
    before.features_root = ws.features_root;
    before.reusable_dirs = previous.reusable;

    std::vector<GeneratedFile> files;
    auto result = regenerate_if_changed(before, ws, tpl);
    if (auto* fresh = std::get_if<std::vector<GeneratedFile>>(&result)) {
        files = std::move(*fresh);
    } else {
        files = render_enums(reg, tpl);
        auto stepdefs = render_stepdefs(reg, tpl);
        files.insert(files.end(), stepdefs.begin(), stepdefs.end());
        std::vector<std::string> paths;
        for (const auto& f : files) paths.push_back(f.path);
        bool up_to_date = paths == previous.generated && std::all_of(files.begin(), files.end(), on_disk_matches);
        if (up_to_date) {
            out << "NoChange\n";
            return kOk;
        }
    }

    std::set<std::string> current;
    for (const auto& f : files) {
        text::write_file_atomic(f.path, f.content);
        current.insert(f.path);
        out << "wrote " << f.path << "\n";
    }
    for (const auto& stale : previous.generated) {
        if (current.contains(stale)) continue;
        std::error_code ec;
        if (!fs::is_regular_file(stale, ec)) continue;
        auto content = text::read_file(stale);
        if (content.find(kGeneratedMarker) == std::string::npos) continue;
        fs::remove(stale, ec);
        err << "removed stale " << stale << "\n";
    }
    text::write_file_atomic(manifest_path, manifest_json(ws, files));
    out << files.size() << " files written\n";
    return kOk;
}

void write_output(const std::string& path, const std::string& content) { text::write_file_atomic(path, content); }

std::vector<ExpandedScenario> expand_selected(const ToolConfig& cfg, const std::string& tags) {
    auto ws = load_workspace(cfg);
    auto reg = load_registry(cfg, ws);
    auto selected = filter_scenarios(ws, tags);

    std::vector<ExpandedScenario> expanded;
    expanded.reserve(selected.size());
    for (const auto& ref : selected) {
        try {
            expanded.push_back(expand(*ref.scenario, *ref.feature, reg, ws, cfg.max_call_depth));
        } catch (const ExpansionError& e) {
            throw ExpansionError(ref.feature->source_path + ": scenario '" + ref.scenario->name + "': " + e.what());
        }
    }
    return expanded;
}

// Flattened steps, indented one level per nested call.
int cmd_expand(const ToolConfig& cfg, const std::string& tags, std::ostream& out) {
    for (const auto& scenario : expand_selected(cfg, tags)) {
        out << "Scenario: " << scenario.origin.scenario << " (" << scenario.origin.feature << ")\n";
        for (const auto& step : scenario.steps) {
            out << std::string(2 * step.call_chain.size(), ' ') << keyword_text(step.step.keyword) << ' '
                << step.step.text << "\n";
        }
    }
    return kOk;
}

int cmd_run(const ToolConfig& cfg, const RunOptions& opts, std::ostream& out, std::ostream& err) {
    auto bindings = parse_bindings(read_config_file(opts.bindings_path, "bindings manifest"));
    Variables vars = cfg.variables;
    if (opts.vars_path) {
        for (auto& [name, value] : parse_variables(read_config_file(*opts.vars_path, "variables file"))) {
            vars[name] = value;
        }
    }
    for (const auto& format : opts.formats) {
        if (format != "json" && format != "junit" && format != "pretty") {
            throw ConfigError("unknown report format '" + format + "'");
        }
    }

    auto expanded = expand_selected(cfg, opts.tags);
    auto report = run(expanded, bindings, vars);

    auto wants = [&](std::string_view f) { return std::find(opts.formats.begin(), opts.formats.end(), f) != opts.formats.end(); };
    if (wants("json")) write_output(opts.json_out, write_json(report));
    if (wants("junit")) write_output(opts.junit_out, write_junit(report));
    if (wants("pretty")) write_output(opts.pretty_out, write_pretty(report));

    err << report.scenarios.size() << " scenarios: " << report.totals.passed << " passed, " << report.totals.failed
        << " failed, " << report.totals.skipped << " skipped\n";
    (void)out;
    return report.totals.failed == 0 ? kOk : kTestsFailed;
}

void refuse_if_exists(const std::string& path, bool force) {
    std::error_code ec;
    if (!force && fs::exists(path, ec)) {
        throw RefusedOverwrite(path + " already exists; pass --force to overwrite");
    }
}

int cmd_ci_prepare(const CiOptions& opts, std::ostream& out, std::ostream& err) {
    RunnerTemplate tpl{read_config_file(opts.template_path, "runner template"), opts.path_token, opts.tag_token};
    PrepareResult result;
    try {
        result = prepare(tpl, opts.feature_path, opts.tags);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    for (const auto& notice : result.notices) {
        err << "warning: token " << notice.token << " not found in " << opts.template_path << "\n";
    }
    if (opts.in_place) {
        write_output(opts.template_path, result.text);
    } else if (opts.output) {
        refuse_if_exists(*opts.output, opts.force);
        write_output(*opts.output, result.text);
    } else {
        out << result.text;
    }
    return kOk;
}

int cmd_editor_init(const ToolConfig& cfg, const EditorOptions& opts, std::ostream& out) {
    const std::string target = normalize_path(opts.dir, ".vscode/settings.json");
    refuse_if_exists(target, opts.force);

    EditorSettings settings;
    if (!opts.steps_globs.empty()) {
        settings.steps_globs = opts.steps_globs;
    } else {
        std::error_code ec;
        fs::path glue = fs::weakly_canonical(cfg.glue_output_dir, ec);
        fs::path base = fs::weakly_canonical(opts.dir, ec);
        std::string relative = ec ? cfg.glue_output_dir : glue.lexically_proximate(base).generic_string();
        settings = EditorSettings::for_glue_dir(relative, GlueTemplate::defaults().file_extension);
    }
    write_output(target, emit_settings(settings));
    out << "wrote " << target << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scenario composition toolkit for Gherkin feature files", "scenario-weave"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config_path, "Config file (default: ./scenario-weave.json if present)");
    app.add_option("--features", g.features_root, "Features root directory");
    app.add_option("--markers", g.markers, "Comma-separated reusable directory markers");
    app.add_option("--fixed-dir", g.fixed_dir, "Directory backing the I call feature file \"name\" form");
    app.add_option("--glue-dir", g.glue_dir, "Output directory for generated glue");
    app.add_option("--max-depth", g.max_depth, "Maximum call nesting depth");
    app.add_option("--var", g.vars, "Variable assignment name=value (repeatable)");
    app.add_option("--enum-template", g.enum_template, "Enum template file");
    app.add_option("--stepdef-template", g.stepdef_template, "Step definition template file");

    auto* scan = app.add_subcommand("scan", "List feature files, reusable directories and derived constants");
    auto* generate = app.add_subcommand("generate", "Write enum and step definition glue for reusable features");

    std::string expand_tags;
    auto* expand_cmd = app.add_subcommand("expand", "Print selected scenarios with every call step inlined");
    expand_cmd->add_option("--tags", expand_tags, "Tag expression (empty selects everything)");

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Filter, expand and execute scenarios with scripted bindings");
    run_cmd->add_option("--tags", run_opts.tags, "Tag expression (empty selects everything)");
    run_cmd->add_option("--bindings", run_opts.bindings_path, "Bindings manifest (JSON)")->required();
    run_cmd->add_option("--vars", run_opts.vars_path, "Variables file (JSON object)");
    run_cmd->add_option("--format", run_opts.formats, "Reports to write: json, junit, pretty")->delimiter(',');
    run_cmd->add_option("--json-out", run_opts.json_out, "JSON report path");
    run_cmd->add_option("--junit-out", run_opts.junit_out, "JUnit XML report path");
    run_cmd->add_option("--pretty-out", run_opts.pretty_out, "Pretty text report path");

    CiOptions ci_opts;
    auto* ci = app.add_subcommand("ci-prepare", "Substitute feature path and tags into a runner template");
    ci->add_option("--template", ci_opts.template_path, "Runner template file")->required();
    ci->add_option("--features", ci_opts.feature_path, "Feature path to substitute")->required();
    ci->add_option("--tags", ci_opts.tags, "Tag expression to substitute")->required();
    ci->add_flag("--in-place", ci_opts.in_place, "Rewrite the template file itself");
    ci->add_option("--output", ci_opts.output, "Write the result here instead of standard output");
    ci->add_flag("--force", ci_opts.force, "Overwrite an existing --output file");
    ci->add_option("--path-token", ci_opts.path_token, "Feature path placeholder, quotes included");
    ci->add_option("--tag-token", ci_opts.tag_token, "Tag placeholder, quotes included");

    EditorOptions editor_opts;
    auto* editor = app.add_subcommand("editor-init", "Write .vscode/settings.json for step autocompletion");
    editor->add_option("--dir", editor_opts.dir, "Project directory that receives .vscode/settings.json");
    editor->add_flag("--force", editor_opts.force, "Overwrite an existing settings file");
    editor->add_option("--steps-glob", editor_opts.steps_globs, "Glob of step definition sources (repeatable)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (ci->parsed()) return cmd_ci_prepare(ci_opts, out, err);
        ToolConfig cfg = resolve_config(g);
        if (scan->parsed()) return cmd_scan(cfg, out);
        if (generate->parsed()) return cmd_generate(cfg, out, err);
        if (expand_cmd->parsed()) return cmd_expand(cfg, expand_tags, out);
        if (run_cmd->parsed()) return cmd_run(cfg, run_opts, out, err);
        if (editor->parsed()) return cmd_editor_init(cfg, editor_opts, out);
    } catch (const RefusedOverwrite& e) {
        err << "error: " << e.what() << "\n";
        return kRefusedOverwrite;
    } catch (const ExpansionError& e) {
        err << "error: " << e.what() << "\n";
        return kExpansionError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const CollisionError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const TemplateError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        // ConfigError, IoError, PatternError, TagExprParseError
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace weave::cli
