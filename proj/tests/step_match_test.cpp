#include <gtest/gtest.h>

#include "weave/errors.hpp"
#include "weave/step_match.hpp"

using namespace weave;

using Args = std::vector<StepArgumentValue>;

TEST(StepMatch, Literals) {
    EXPECT_EQ(match_step("I start the testcase", "I start the testcase"), Args{});
    EXPECT_FALSE(match_step("I start the testcase Nth", "I start the testcase"));
    EXPECT_FALSE(match_step("I start", "I start the testcase"));
}

TEST(StepMatch, StringAndInt) {
    EXPECT_EQ(match_step("I try to post to \"Jo's blog\"", "I try to post to {string}"), (Args{std::string("Jo's blog")}));
    EXPECT_EQ(match_step("I buy 12 mugs and -3 lamps", "I buy {int} mugs and {int} lamps"),
              (Args{std::int64_t{12}, std::int64_t{-3}}));
    EXPECT_EQ(match_step("a \"x\" b \"y\"", "a {string} b {string}"), (Args{std::string("x"), std::string("y")}));
    EXPECT_EQ(match_step("n=\"\"", "n={string}"), (Args{std::string()}));
    EXPECT_FALSE(match_step("I buy many mugs", "I buy {int} mugs"));
    EXPECT_FALSE(match_step("post to Jo", "post to {string}"));
}

TEST(StepMatch, Backtracks) {
    EXPECT_EQ(match_step("12345", "{int}5"), (Args{std::int64_t{1234}}));
    // Like cucumber, {string} never spans a double quote.
    EXPECT_FALSE(match_step("say \"a\" and \"b\"", "say {string}"));
}

TEST(StepMatch, Escapes) {
    EXPECT_EQ(match_step("use {int} literally", "use \\{int} literally"), Args{});
    EXPECT_EQ(match_step("back\\slash", "back\\\\slash"), Args{});
}

TEST(StepMatch, PatternErrors) {
    EXPECT_THROW(StepPattern::compile("I have {float} things"), PatternError);
    EXPECT_THROW(StepPattern::compile("I have {word"), PatternError);
    EXPECT_THROW(StepPattern::compile("I have } things"), PatternError);
    EXPECT_EQ(StepPattern::compile("a {int}").source(), "a {int}");
}

TEST(StepMatch, ArgumentToString) {
    EXPECT_EQ(to_string(StepArgumentValue{std::int64_t{-7}}), "-7");
    EXPECT_EQ(to_string(StepArgumentValue{std::string("x")}), "x");
}
