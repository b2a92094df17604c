#include "weave/registry.hpp"

#include <cctype>
#include <filesystem>
#include <system_error>

#include "weave/errors.hpp"

namespace fs = std::filesystem;

namespace weave {

namespace {

bool is_ascii_alnum(char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9');
}

bool is_continuation_byte(char ch) { return (static_cast<unsigned char>(ch) & 0xC0) == 0x80; }

std::string with_feature_extension(const std::string& file) {
    if (file.ends_with(".feature")) return file;
    return file + ".feature";
}

std::string existing_file_or_throw(const std::string& path, const std::string& what) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw ResolveError(ResolveError::Kind::FileNotFound, what + " resolves to missing file " + path);
    }
    return path;
}

}  // namespace

std::string derive_identifier(std::string_view folder, std::string_view file_stem) {
    std::string joined;
    joined.reserve(folder.size() + file_stem.size() + 1);
    joined.append(folder).append("_").append(file_stem);

    std::string id;
    for (char ch : joined) {
        if (is_continuation_byte(ch)) continue;
        if (ch >= 'a' && ch <= 'z') {
            id += static_cast<char>(ch - 'a' + 'A');
        } else if ((ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9')) {
            id += ch;
        } else {
            id += '_';
        }
    }
    if (!id.empty() && id.front() >= '0' && id.front() <= '9') id.insert(0, "F_");
    return id;
}

std::string pascal_case(std::string_view dir_name) {
    std::string out;
    bool boundary = true;
    for (char ch : dir_name) {
        if (!is_ascii_alnum(ch)) {
            boundary = true;
            continue;
        }
        if (boundary && ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
        out += ch;
        boundary = false;
    }
    if (out.empty() || (out.front() >= '0' && out.front() <= '9')) out.insert(0, "F");
    return out;
}

ReuseRegistry build_registry(const Workspace& ws, const std::optional<std::string>& fixed_dir) {
    ReuseRegistry reg;
    reg.features_root = ws.features_root;
    if (fixed_dir) {
        std::error_code ec;
        if (!fs::is_directory(*fixed_dir, ec)) {
            throw IoError("fixed reusable directory '" + *fixed_dir + "' does not exist");
        }
        reg.fixed_dir = normalize_path(*fixed_dir);
    }

    // reusable_dirs and their files are already sorted, so constants come out
    // in (folder, file) order.
    for (const auto& dir : ws.reusable_dirs) {
        for (const auto& file : dir.feature_files) {
            std::string stem = file.substr(0, file.size() - std::string_view(".feature").size());
            ReuseConstant constant{dir.dir_name, stem, derive_identifier(dir.dir_name, stem),
                                   normalize_path(ws.features_root, dir.dir_name + "/" + file)};
            auto [it, inserted] = reg.by_identifier.emplace(constant.identifier, constant);
            if (!inserted) throw CollisionError(constant.identifier, it->second.target_path, constant.target_path);
            reg.constants.push_back(std::move(constant));
        }
    }
    return reg;
}

std::string describe(const CallRef& call) {
    struct Visitor {
        std::string operator()(const EnumForm& c) const { return c.identifier; }
        std::string operator()(const FolderFileForm& c) const { return "\"" + c.folder + "\" \"" + c.file + "\""; }
        std::string operator()(const FixedFolderForm& c) const { return "\"" + c.file + "\""; }
    };
    return std::visit(Visitor{}, call);
}

std::string resolve_call(const ReuseRegistry& reg, const CallRef& call) {
    if (const auto* e = std::get_if<EnumForm>(&call)) {
        auto it = reg.by_identifier.find(e->identifier);
        if (it == reg.by_identifier.end()) {
            throw ResolveError(ResolveError::Kind::UnknownIdentifier,
                               "unknown reusable feature identifier " + e->identifier);
        }
        return existing_file_or_throw(it->second.target_path, e->identifier);
    }
    if (const auto* f = std::get_if<FolderFileForm>(&call)) {
        return existing_file_or_throw(normalize_path(reg.features_root, f->folder + "/" + with_feature_extension(f->file)),
                                      describe(call));
    }
    const auto& fixed = std::get<FixedFolderForm>(call);
    if (!reg.fixed_dir) {
        throw ResolveError(ResolveError::Kind::FixedDirUnset,
                           "call " + describe(call) + " needs fixed_reusable_dir, which is not configured");
    }
    return existing_file_or_throw(normalize_path(*reg.fixed_dir, with_feature_extension(fixed.file)), describe(call));
}

}  // namespace weave
