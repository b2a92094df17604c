#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace weave::test {

namespace fs = std::filesystem;

/// Absolute path of a file under tests/fixtures.
std::string fixture(std::string_view relative);

std::string read(const fs::path& path);
void write(const fs::path& path, std::string_view content);

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    std::string str(std::string_view relative = {}) const;

private:
    fs::path path_;
};

/// Changes the working directory for the lifetime of the object.
class ScopedCwd {
public:
    explicit ScopedCwd(const fs::path& dir);
    ~ScopedCwd();
    ScopedCwd(const ScopedCwd&) = delete;
    ScopedCwd& operator=(const ScopedCwd&) = delete;

private:
    fs::path previous_;
};

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

/// Runs the CLI in-process.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace weave::test
