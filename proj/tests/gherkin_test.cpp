#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "weave/errors.hpp"
#include "weave/gherkin.hpp"

using namespace weave;
using namespace weave::test;
using ::testing::HasSubstr;

namespace {

ParseError parse_error(std::string_view source) {
    try {
        parse_feature(source, "x.feature");
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a ParseError for:\n" << source;
    return ParseError("", 0, 0, "");
}

}  // namespace

TEST(Gherkin, ParsesMultiSiteBlogFeature) {
    auto ast = parse_feature(read(fixture("multi_site_blog.feature")), "multi_site_blog.feature");
    EXPECT_EQ(ast.name, "Multiple Site Support");
    EXPECT_EQ(ast.tags, (std::vector<Tag>{{"@blog_management"}, {"@access_control"}}));
    EXPECT_EQ(ast.description,
              "Only blog owners can post to a blog, except administrators, who can post to all blogs.");
    ASSERT_TRUE(ast.background);
    ASSERT_EQ(ast.background->steps.size(), 4u);
    EXPECT_EQ(ast.background->steps[1].keyword, StepKeyword::And);
    EXPECT_EQ(ast.background->steps[1].text, "a blog named \"{Admin_Blog}\" owned by \"{Admin_Name}\"");
    ASSERT_EQ(ast.scenarios.size(), 3u);
    EXPECT_EQ(ast.scenarios[0].name, "{User_Name} posts to their own blog");
    EXPECT_EQ(ast.scenarios[0].tags, (std::vector<Tag>{{"@user_posting"}}));
    EXPECT_EQ(ast.scenarios[2].steps[2].text, "I should see \"{Success_Message}\"");
    EXPECT_EQ(ast.source_path, "multi_site_blog.feature");
}

TEST(Gherkin, SerializedFormIsCanonical) {
    auto ast = parse_feature(
        "@t\nFeature: F\n  desc\n\n  Background:\n    Given b\n\n  @s\n  Scenario: S\n    When x\n"
        "      | a | bb |\n      | ccc | d |\n    Then y\n      \"\"\"json\n      {}\n      \"\"\"\n");
    EXPECT_EQ(serialize_feature(ast),
              "@t\nFeature: F\n  desc\n\n  Background:\n    Given b\n\n  @s\n  Scenario: S\n    When x\n"
              "      | a   | bb |\n      | ccc | d  |\n    Then y\n      \"\"\"json\n      {}\n      \"\"\"\n");
}

TEST(Gherkin, DocStringIndentAndEscapes) {
    auto ast = parse_feature(
        "Feature: F\n  Scenario: S\n    Given doc\n      ```\n        indented\n      \\`\\`\\`\n      ```\n");
    const auto& doc = std::get<DocString>(*ast.scenarios[0].steps[0].argument);
    EXPECT_EQ(doc.content, "  indented\n```");
}

TEST(Gherkin, TableEscapes) {
    auto ast = parse_feature("Feature: F\n  Scenario: S\n    Given t\n      | a\\|b | c\\\\ | d\\ne |\n");
    const auto& table = std::get<DataTable>(*ast.scenarios[0].steps[0].argument);
    EXPECT_EQ(table.rows[0], (std::vector<std::string>{"a|b", "c\\", "d\ne"}));
}

TEST(Gherkin, CommentsAndCrLfAreIgnored) {
    auto ast = parse_feature("\xEF\xBB\xBF# top\r\nFeature: F\r\n  # note\r\n  Scenario: S\r\n    Given x\r\n");
    EXPECT_EQ(ast.name, "F");
    EXPECT_EQ(ast.scenarios[0].steps[0].text, "x");
}

TEST(Gherkin, RejectsUnsupportedBlocks) {
    EXPECT_THAT(parse_error("Feature: F\n  Scenario Outline: S\n    Given <x>\n").what(), HasSubstr("x.feature:2"));
    parse_error("Feature: F\n  Scenario: S\n    Given x\n  Examples:\n    | x |\n");
    parse_error("Feature: F\n  Rule: R\n  Scenario: S\n    Given x\n");
    parse_error("Feature: F\n  Example: S\n    Given x\n");
    parse_error("# language: fr\nFonctionnalité: F\n");
}

TEST(Gherkin, RejectsStructuralErrors) {
    EXPECT_EQ(parse_error("Scenario: S\n  Given x\n").line(), 1u);
    parse_error("Feature: F\n  Given x\n");
    parse_error("Feature: F\n  Scenario: S\n");
    parse_error("Feature: F\n  Background:\n  Scenario: S\n    Given x\n");
    parse_error("Feature: F\n  @t\n  Background:\n    Given b\n");
    parse_error("Feature: F\n  Scenario: S\n    Given x\n  @dangling\n");
    parse_error("Feature: F\n  Scenario: S\n    Given x\n      | a | b |\n      | c |\n");
    parse_error("Feature: F\n  Scenario: S\n    Given x\n      \"\"\"\n      never closed\n");
    auto e = parse_error("Feature: F\n  Scenario: S\n    Given x\n    Whenever y\n");
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 5u);
}

TEST(Gherkin, ValidateCatchesUnserializableAsts) {
    FeatureAst ast;
    ast.name = "F";
    EXPECT_FALSE(validate_feature(ast));
    ast.scenarios.push_back(Scenario{{}, "S", {}});
    EXPECT_TRUE(validate_feature(ast));
    ast.scenarios[0].steps.push_back(Step{StepKeyword::Given, "x\ny", std::nullopt});
    EXPECT_TRUE(validate_feature(ast));
    ast.scenarios[0].steps[0].text = "x";
    ast.tags.push_back(Tag{"no at sign"});
    EXPECT_TRUE(validate_feature(ast));
}

TEST(GherkinProperty, RandomAstsRoundTrip) {
    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
        auto ast = random_feature(rng);
        ASSERT_FALSE(validate_feature(ast)) << *validate_feature(ast);
        auto text = serialize_feature(ast);
        auto parsed = parse_feature(text, ast.source_path);
        ASSERT_EQ(parsed, ast) << text;
    }
}

TEST(GherkinProperty, SerializationIsIdempotent) {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        auto once = serialize_feature(random_feature(rng));
        auto twice = serialize_feature(parse_feature(once, "generated.feature"));
        ASSERT_EQ(once, twice);
    }
}
