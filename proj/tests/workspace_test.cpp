#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "weave/errors.hpp"
#include "weave/workspace.hpp"

using namespace weave;
using namespace weave::test;

namespace {
constexpr const char* kMinimal = "Feature: x\n  Scenario: s\n    Given x\n";
}

TEST(Workspace, ScansEcommerceFixture) {
    auto root = fixture("ecommerce/features");
    auto ws = scan_workspace(root);
    ASSERT_EQ(ws.all_features.size(), 4u);
    EXPECT_EQ(ws.all_features[0].path, normalize_path(root, "checkout/feature_x.feature"));
    EXPECT_EQ(ws.all_features[0].ast.source_path, ws.all_features[0].path);
    ASSERT_EQ(ws.reusable_dirs.size(), 2u);
    EXPECT_EQ(ws.reusable_dirs[0], (ReusableDir{"common", "common", {"checkout.feature", "login.feature"}}));
    EXPECT_EQ(ws.reusable_dirs[1], (ReusableDir{"reusable_auth", "reusable", {"mfa.feature"}}));
}

TEST(Workspace, MarkerMatchingRules) {
    TempDir tmp;
    write(tmp.path() / "my_common_steps/a.feature", kMinimal);
    write(tmp.path() / "Common/b.feature", kMinimal);             // case-sensitive: not reusable
    write(tmp.path() / "reusable_common/c.feature", kMinimal);    // both markers: first wins
    write(tmp.path() / "suite/common/d.feature", kMinimal);       // depth 2: not reusable
    write(tmp.path() / ".hidden_common/e.feature", kMinimal);     // hidden: skipped
    write(tmp.path() / "reusable_empty/readme.txt", "no features");
    auto ws = scan_workspace(tmp.str());
    ASSERT_EQ(ws.reusable_dirs.size(), 3u);
    EXPECT_EQ(ws.reusable_dirs[0].dir_name, "my_common_steps");
    EXPECT_EQ(ws.reusable_dirs[0].matched_marker, "common");
    EXPECT_EQ(ws.reusable_dirs[1].dir_name, "reusable_common");
    EXPECT_EQ(ws.reusable_dirs[1].matched_marker, "reusable");
    EXPECT_TRUE(ws.reusable_dirs[2].feature_files.empty());
    EXPECT_EQ(ws.all_features.size(), 4u);
    EXPECT_EQ(ws.find(normalize_path(tmp.str(), ".hidden_common/e.feature")), nullptr);
    EXPECT_NE(ws.find(normalize_path(tmp.str(), "suite/common/d.feature")), nullptr);
}

TEST(Workspace, CustomMarkers) {
    TempDir tmp;
    write(tmp.path() / "shared/a.feature", kMinimal);
    write(tmp.path() / "common/b.feature", kMinimal);
    auto ws = scan_workspace(tmp.str(), {"shared"});
    ASSERT_EQ(ws.reusable_dirs.size(), 1u);
    EXPECT_EQ(ws.reusable_dirs[0].dir_name, "shared");
}

TEST(Workspace, SymlinkedDirectoriesAreNotFollowed) {
    TempDir tmp;
    write(tmp.path() / "outside/a.feature", kMinimal);
    fs::create_directories(tmp.path() / "root");
    fs::create_directory_symlink(tmp.path() / "outside", tmp.path() / "root/common");
    auto ws = scan_workspace(tmp.str("root"));
    EXPECT_TRUE(ws.reusable_dirs.empty());
    EXPECT_TRUE(ws.all_features.empty());
}

TEST(Workspace, Errors) {
    EXPECT_THROW(scan_workspace("/definitely/not/here"), IoError);
    TempDir tmp;
    write(tmp.path() / "bad.feature", "Scenario: no feature\n");
    EXPECT_THROW(scan_workspace(tmp.str()), ParseError);
}

TEST(Workspace, NormalizePath) {
    EXPECT_EQ(normalize_path("./features/", "common/../common/x.feature"), "features/common/x.feature");
    EXPECT_EQ(normalize_path("features/"), "features");
    EXPECT_EQ(normalize_path("/a/b/", "c"), "/a/b/c");
}
