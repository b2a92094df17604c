#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "weave/config.hpp"
#include "weave/errors.hpp"

using namespace weave;
using namespace weave::test;

TEST(Config, Defaults) {
    auto cfg = parse_config("{}");
    EXPECT_EQ(cfg.features_root, "./features/");
    EXPECT_EQ(cfg.reusable_dir_markers, (std::vector<std::string>{"reusable", "common"}));
    EXPECT_FALSE(cfg.fixed_reusable_dir);
    EXPECT_EQ(cfg.glue_output_dir, "generated/");
    EXPECT_EQ(cfg.max_call_depth, 16);
    EXPECT_TRUE(cfg.variables.empty());
}

TEST(Config, AllKeys) {
    auto cfg = parse_config(R"({
        "features_root": "qa/features",
        "reusable_dir_markers": ["shared"],
        "fixed_reusable_dir": "qa/features/shared",
        "glue_output_dir": "/abs/glue",
        "max_call_depth": 4,
        "variables": {"first": "mug"},
        "enum_template_path": "tpl/enum.txt",
        "stepdef_template_path": "tpl/steps.txt"
    })", "/proj");
    EXPECT_EQ(cfg.features_root, "/proj/qa/features");
    EXPECT_EQ(cfg.reusable_dir_markers, (std::vector<std::string>{"shared"}));
    EXPECT_EQ(cfg.fixed_reusable_dir, "/proj/qa/features/shared");
    EXPECT_EQ(cfg.glue_output_dir, "/abs/glue");
    EXPECT_EQ(cfg.max_call_depth, 4);
    EXPECT_EQ(cfg.variables.at("first"), "mug");
    EXPECT_EQ(cfg.enum_template_path, "/proj/tpl/enum.txt");
}

TEST(Config, Rejects) {
    EXPECT_THROW(parse_config("[]"), ConfigError);
    EXPECT_THROW(parse_config("{"), ConfigError);
    EXPECT_THROW(parse_config(R"({"feature_root": "x"})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"max_call_depth": 0})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"max_call_depth": "3"})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"reusable_dir_markers": []})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"reusable_dir_markers": [""]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"variables": {"a": 1}})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"features_root": ""})"), ConfigError);
    EXPECT_THROW(load_config("/no/such/scenario-weave.json"), ConfigError);
}

TEST(Config, LoadResolvesAgainstFileDirectory) {
    TempDir tmp;
    write(tmp.path() / "scenario-weave.json", R"({"features_root": "feat"})");
    EXPECT_EQ(load_config(tmp.str("scenario-weave.json")).features_root, tmp.str("feat"));
}
