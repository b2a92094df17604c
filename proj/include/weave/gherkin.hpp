#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weave {

enum class StepKeyword { Given, When, Then, And, But };

std::string_view keyword_text(StepKeyword keyword);

struct DataTable {
    std::vector<std::vector<std::string>> rows;
    bool operator==(const DataTable&) const = default;
};

struct DocString {
    std::string content_type;  // text after the opening delimiter, usually empty
    std::string content;
    bool operator==(const DocString&) const = default;
};

using StepArgument = std::variant<DataTable, DocString>;

struct Step {
    StepKeyword keyword = StepKeyword::Given;
    std::string text;
    std::optional<StepArgument> argument;
    bool operator==(const Step&) const = default;
};

/// Tag text including the leading "@".
struct Tag {
    std::string value;
    bool operator==(const Tag&) const = default;
    auto operator<=>(const Tag&) const = default;
};

bool is_valid_tag(std::string_view value);

struct Background {
    std::vector<Step> steps;
    bool operator==(const Background&) const = default;
};

struct Scenario {
    std::vector<Tag> tags;
    std::string name;
    std::vector<Step> steps;
    bool operator==(const Scenario&) const = default;
};

struct FeatureAst {
    std::vector<Tag> tags;
    std::string name;
    std::string description;  // lines joined by '\n', each trimmed
    std::optional<Background> background;
    std::vector<Scenario> scenarios;
    std::string source_path;
    bool operator==(const FeatureAst&) const = default;
};

/// Parses a feature file. English keywords only; Scenario Outline, Examples and
/// Rule blocks are rejected. Comments are dropped. Throws ParseError.
FeatureAst parse_feature(std::string_view source, std::string_view source_path = {});

/// Canonical Gherkin text. Re-parses to an equal AST for any AST that
/// satisfies validate_feature().
std::string serialize_feature(const FeatureAst& ast);

/// Checks the structural invariants the serializer relies on. Returns the
/// first violation, or nothing when the AST is valid.
std::optional<std::string> validate_feature(const FeatureAst& ast);

}  // namespace weave
