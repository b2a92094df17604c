#pragma once

#include <string>
#include <vector>

#include "weave/gherkin.hpp"

namespace weave {

inline const std::vector<std::string> kDefaultMarkers{"reusable", "common"};

/// An immediate subdirectory of the features root whose name contains a marker.
struct ReusableDir {
    std::string dir_name;
    std::string matched_marker;
    std::vector<std::string> feature_files;  // file names, sorted
    bool operator==(const ReusableDir&) const = default;
};

struct LoadedFeature {
    std::string path;  // features_root joined with the relative path, normalized
    FeatureAst ast;
    bool operator==(const LoadedFeature&) const = default;
};

struct Workspace {
    std::string features_root;
    std::vector<LoadedFeature> all_features;  // sorted by path
    std::vector<ReusableDir> reusable_dirs;   // sorted by dir_name

    const FeatureAst* find(const std::string& path) const;
    bool operator==(const Workspace&) const = default;
};

/// Joins and lexically normalizes, using '/' separators.
std::string normalize_path(const std::string& base, const std::string& relative = {});

/// Walks features_root. Reusable directories are depth-1 subdirectories whose
/// name contains a marker (case-sensitive); feature loading is recursive.
/// Hidden entries are skipped and symlinks are not followed.
/// Throws IoError when the root is missing, ParseError for bad feature files.
Workspace scan_workspace(const std::string& features_root,
                         const std::vector<std::string>& markers = kDefaultMarkers);

}  // namespace weave
