#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace weave::text {

constexpr bool is_space(char ch) noexcept {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
}

std::string_view trim(std::string_view s) noexcept;

/// Splits on '\n', dropping one trailing '\r' per line. Keeps empty segments,
/// so "a\n" yields {"a", ""}.
std::vector<std::string_view> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view separator);

/// Leftmost, non-overlapping, single pass.
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

/// Number of code points, counting invalid bytes as one each.
std::size_t utf8_length(std::string_view s) noexcept;

std::string read_file(const std::string& path);

/// Writes through a sibling temp file and renames over the target.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace weave::text
