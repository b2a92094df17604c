#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "weave/errors.hpp"
#include "weave/runner.hpp"

using namespace weave;
using ::testing::HasSubstr;

namespace {

ExpandedScenario scenario(const std::string& name, std::vector<std::string> steps) {
    ExpandedScenario e;
    e.origin = CallFrame{"f.feature", name};
    for (auto& s : steps) e.steps.push_back(ExpandedStep{Step{StepKeyword::Given, s, std::nullopt}, {e.origin}});
    return e;
}

struct Recorder : RunObserver {
    std::vector<std::string> steps;
    std::vector<std::pair<std::string, std::vector<StepArgumentValue>>> records;
    void on_step(std::size_t, std::size_t, std::string_view text) override { steps.emplace_back(text); }
    void on_record(std::string_view key, const std::vector<StepArgumentValue>& args) override {
        records.emplace_back(std::string(key), args);
    }
};

}  // namespace

TEST(Runner, PassingScenario) {
    std::vector<StepBinding> b{StepBinding::make("a", action::Pass{}), StepBinding::make("b {int}", action::Record{"k"})};
    std::vector<ExpandedScenario> s{scenario("S", {"a", "b 5"})};
    Recorder rec;
    auto report = run(s, b, {}, &rec);
    ASSERT_EQ(report.scenarios.size(), 1u);
    EXPECT_EQ(report.scenarios[0].status, ScenarioStatus::Passed);
    EXPECT_EQ(report.totals, (Totals{1, 0, 0}));
    EXPECT_EQ(rec.steps, (std::vector<std::string>{"a", "b 5"}));
    ASSERT_EQ(rec.records.size(), 1u);
    EXPECT_EQ(rec.records[0].second, (std::vector<StepArgumentValue>{std::int64_t{5}}));
}

TEST(Runner, FailureSkipsTheRest) {
    std::vector<StepBinding> b{StepBinding::make("a", action::Pass{}), StepBinding::make("boom", action::Fail{"bad"})};
    std::vector<ExpandedScenario> s{scenario("S", {"a", "boom", "a"}), scenario("T", {"a"})};
    Recorder rec;
    auto report = run(s, b, {}, &rec);
    EXPECT_EQ(report.scenarios[0].status, ScenarioStatus::Failed);
    EXPECT_EQ(report.scenarios[0].steps[1].error, "bad");
    EXPECT_EQ(report.scenarios[0].steps[2].status, StepStatus::Skipped);
    EXPECT_EQ(report.scenarios[1].status, ScenarioStatus::Passed);
    EXPECT_EQ(rec.steps, (std::vector<std::string>{"a", "boom", "a"}));
    EXPECT_EQ(report.totals, (Totals{1, 1, 0}));
}

TEST(Runner, UndefinedAndAmbiguous) {
    std::vector<StepBinding> b{StepBinding::make("x {int}", action::Pass{}), StepBinding::make("x 1", action::Pass{})};
    std::vector<ExpandedScenario> s{scenario("U", {"nothing"}), scenario("A", {"x 1"})};
    auto report = run(s, b, {});
    EXPECT_EQ(report.scenarios[0].steps[0].status, StepStatus::Undefined);
    EXPECT_EQ(report.scenarios[0].status, ScenarioStatus::Failed);
    EXPECT_EQ(report.scenarios[1].steps[0].status, StepStatus::Failed);
    EXPECT_THAT(report.scenarios[1].steps[0].error, HasSubstr("ambiguous"));
}

TEST(Runner, VariablesAndSetVarScope) {
    std::vector<StepBinding> b{StepBinding::make("set", action::SetVar{"item", "lamp"}),
                               StepBinding::make("buy {string}", action::Record{"buy"})};
    std::vector<ExpandedScenario> s{scenario("S", {"buy \"{item}\"", "set", "buy \"{item}\""}),
                                    scenario("T", {"buy \"{item}\""})};
    Recorder rec;
    auto report = run(s, b, Variables{{"item", "mug"}}, &rec);
    ASSERT_EQ(rec.records.size(), 3u);
    EXPECT_EQ(rec.records[0].second[0], StepArgumentValue{std::string("mug")});
    EXPECT_EQ(rec.records[1].second[0], StepArgumentValue{std::string("lamp")});
    EXPECT_EQ(rec.records[2].second[0], StepArgumentValue{std::string("mug")});
    EXPECT_EQ(report.scenarios[0].steps[2].text, "buy \"lamp\"");
}

TEST(Runner, SubstituteVariables) {
    Variables v{{"a", "{b}"}, {"b", "x"}};
    EXPECT_EQ(substitute_variables("{a} {b} {c} {", v), "{b} x {c} {");
    EXPECT_EQ(substitute_variables("{{a}}", v), "{{b}}");
}

TEST(Runner, ParseBindings) {
    auto b = parse_bindings(R"([{"pattern":"a","action":"pass"},
                               {"pattern":"b","action":"fail"},
                               {"pattern":"c {int}","action":"record"},
                               {"pattern":"d","action":"sleep","arg":0},
                               {"pattern":"e","action":"set_var","arg":"x=y=z"},
                               {"pattern":"f","action":"set_var","arg":{"name":"n","value":"v"}}])");
    ASSERT_EQ(b.size(), 6u);
    EXPECT_EQ(b[1].action, StepAction(action::Fail{"step failed"}));
    EXPECT_EQ(b[2].action, StepAction(action::Record{"c {int}"}));
    EXPECT_EQ(b[4].action, StepAction(action::SetVar{"x", "y=z"}));
    EXPECT_EQ(b[5].action, StepAction(action::SetVar{"n", "v"}));
    EXPECT_THROW(parse_bindings("{}"), ConfigError);
    EXPECT_THROW(parse_bindings(R"([{"pattern":"a","action":"explode"}])"), ConfigError);
    EXPECT_THROW(parse_bindings(R"([{"pattern":"a","action":"sleep","arg":-1}])"), ConfigError);
    EXPECT_THROW(parse_bindings(R"([{"pattern":"a {float}","action":"pass"}])"), PatternError);
    EXPECT_THROW(parse_bindings("not json"), ConfigError);
}

TEST(Runner, ParseVariables) {
    EXPECT_EQ(parse_variables(R"({"a":"1"})"), (Variables{{"a", "1"}}));
    EXPECT_THROW(parse_variables(R"({"a":1})"), ConfigError);
    EXPECT_THROW(parse_variables("[]"), ConfigError);
}

TEST(Runner, Recount) {
    RunReport r;
    r.scenarios.resize(4);
    r.scenarios[1].status = ScenarioStatus::Failed;
    r.scenarios[2].status = ScenarioStatus::Skipped;
    EXPECT_EQ(r.recount(), (Totals{2, 1, 1}));
}
