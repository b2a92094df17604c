#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weave/workspace.hpp"

namespace weave {

/// Identity of one reusable feature file.
struct ReuseConstant {
    std::string folder;
    std::string file_stem;
    std::string identifier;
    std::string target_path;
    bool operator==(const ReuseConstant&) const = default;
};

/// Upper-cases folder + "_" + stem, maps every character outside [A-Z0-9]
/// to '_' (one per code point) and prefixes "F_" when the result would start
/// with a digit.
std::string derive_identifier(std::string_view folder, std::string_view file_stem);

/// "reusable_auth" -> "ReusableAuth". Used for enum type names.
std::string pascal_case(std::string_view dir_name);

struct ReuseRegistry {
    std::string features_root;
    std::vector<ReuseConstant> constants;  // ordered by (folder, file)
    std::map<std::string, ReuseConstant, std::less<>> by_identifier;
    std::optional<std::string> fixed_dir;
};

/// Throws CollisionError when two files derive one identifier, IoError when
/// fixed_dir is given but is not a directory.
ReuseRegistry build_registry(const Workspace& ws, const std::optional<std::string>& fixed_dir = std::nullopt);

// Call references, one per syntactic form of the call step.
struct EnumForm {
    std::string identifier;
    bool operator==(const EnumForm&) const = default;
};
struct FolderFileForm {
    std::string folder;
    std::string file;
    bool operator==(const FolderFileForm&) const = default;
};
struct FixedFolderForm {
    std::string file;
    bool operator==(const FixedFolderForm&) const = default;
};
using CallRef = std::variant<EnumForm, FolderFileForm, FixedFolderForm>;

std::string describe(const CallRef& call);

/// Maps a call reference to a feature file path. Throws ResolveError.
std::string resolve_call(const ReuseRegistry& reg, const CallRef& call);

}  // namespace weave
