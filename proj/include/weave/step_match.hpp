#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weave {

/// A captured argument: {string} yields text, {int} yields a number.
using StepArgumentValue = std::variant<std::string, std::int64_t>;

std::string to_string(const StepArgumentValue& value);

/// Compiled cucumber expression restricted to literals, {string} and {int}.
/// "\{" and "\\" escape literal braces and backslashes.
class StepPattern {
public:
    /// Throws PatternError for unknown parameter types or unbalanced braces.
    static StepPattern compile(std::string_view pattern);

    /// Anchored at both ends.
    std::optional<std::vector<StepArgumentValue>> match(std::string_view text) const;

    const std::string& source() const noexcept { return source_; }

private:
    enum class SegmentKind { Literal, String, Int };
    struct Segment {
        SegmentKind kind;
        std::string literal;
    };

    bool match_from(std::string_view text, std::size_t seg, std::vector<StepArgumentValue>& out) const;

    std::string source_;
    std::vector<Segment> segments_;
};

/// Compiles and matches in one go.
std::optional<std::vector<StepArgumentValue>> match_step(std::string_view text, std::string_view pattern);

}  // namespace weave
