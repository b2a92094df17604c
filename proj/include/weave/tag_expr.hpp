#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "weave/gherkin.hpp"

namespace weave {

/// Boolean formula over tags: literals, "and", "or", "not" and parentheses.
/// Precedence from loosest: or, and, not. The empty expression matches
/// everything.
class TagExpression {
public:
    /// Throws TagExprParseError carrying a 0-based character offset.
    static TagExpression parse(std::string_view text);

    bool evaluate(std::span<const Tag> tags) const;

    /// Fully parenthesized form, for diagnostics.
    std::string to_string() const;

    struct Node;

private:
    explicit TagExpression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;  // null for the empty expression
};

}  // namespace weave
