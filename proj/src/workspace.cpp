#include "weave/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <system_error>

#include "weave/errors.hpp"
#include "weave/text.hpp"

namespace fs = std::filesystem;

namespace weave {

namespace {

bool is_hidden(const fs::path& p) {
    auto name = p.filename().string();
    return !name.empty() && name.front() == '.';
}

bool is_feature_file(const fs::directory_entry& entry) {
    std::error_code ec;
    return entry.is_regular_file(ec) && !entry.is_symlink(ec) && entry.path().extension() == ".feature" &&
           !is_hidden(entry.path());
}

}  // namespace

std::string normalize_path(const std::string& base, const std::string& relative) {
    fs::path joined = relative.empty() ? fs::path(base) : fs::path(base) / relative;
    auto normal = joined.lexically_normal().generic_string();
    if (normal.size() > 1 && normal.back() == '/') normal.pop_back();
    return normal;
}

const FeatureAst* Workspace::find(const std::string& path) const {
    auto it = std::lower_bound(all_features.begin(), all_features.end(), path,
                               [](const LoadedFeature& f, const std::string& p) { return f.path < p; });
    if (it == all_features.end() || it->path != path) return nullptr;
    return &it->ast;
}

Workspace scan_workspace(const std::string& features_root, const std::vector<std::string>& markers) {
    std::error_code ec;
    if (!fs::is_directory(features_root, ec)) {
        throw IoError("features root '" + features_root + "' does not exist or is not a directory");
    }
    if (markers.empty()) throw ConfigError("at least one reusable directory marker is required");

    Workspace ws;
    ws.features_root = normalize_path(features_root);

    std::vector<fs::directory_entry> subdirs;
    for (const auto& entry : fs::directory_iterator(features_root)) {
        if (entry.is_symlink(ec) || !entry.is_directory(ec) || is_hidden(entry.path())) continue;
        subdirs.push_back(entry);
    }
    std::sort(subdirs.begin(), subdirs.end(),
              [](const auto& a, const auto& b) { return a.path().filename() < b.path().filename(); });

    for (const auto& dir : subdirs) {
        const std::string name = dir.path().filename().string();
        auto marker = std::find_if(markers.begin(), markers.end(),
                                   [&](const std::string& m) { return name.find(m) != std::string::npos; });
        if (marker == markers.end()) continue;
        ReusableDir reusable{name, *marker, {}};
        for (const auto& file : fs::directory_iterator(dir.path())) {
            if (is_feature_file(file)) reusable.feature_files.push_back(file.path().filename().string());
        }
        std::sort(reusable.feature_files.begin(), reusable.feature_files.end());
        ws.reusable_dirs.push_back(std::move(reusable));
    }

    std::vector<std::string> relative_paths;
    auto it = fs::recursive_directory_iterator(features_root, fs::directory_options::none);
    for (; it != fs::recursive_directory_iterator(); ++it) {
        const auto& entry = *it;
        if (is_hidden(entry.path()) || entry.is_symlink(ec)) {
            if (entry.is_directory(ec)) it.disable_recursion_pending();
            continue;
        }
        if (is_feature_file(entry)) {
            relative_paths.push_back(entry.path().lexically_relative(features_root).generic_string());
        }
    }
    std::sort(relative_paths.begin(), relative_paths.end());

    for (const auto& rel : relative_paths) {
        std::string path = normalize_path(features_root, rel);
        std::string source = text::read_file(path);
        ws.all_features.push_back(LoadedFeature{path, parse_feature(source, path)});
    }
    // Relative-path order and normalized-path order agree, but find() relies on the latter.
    std::sort(ws.all_features.begin(), ws.all_features.end(),
              [](const auto& a, const auto& b) { return a.path < b.path; });
    return ws;
}

}  // namespace weave
