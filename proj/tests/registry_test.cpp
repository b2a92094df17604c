#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "weave/errors.hpp"
#include "weave/registry.hpp"

using namespace weave;
using namespace weave::test;
using ::testing::HasSubstr;

TEST(Registry, DeriveIdentifier) {
    EXPECT_EQ(derive_identifier("common", "login"), "COMMON_LOGIN");
    EXPECT_EQ(derive_identifier("reusable_auth", "mfa"), "REUSABLE_AUTH_MFA");
    EXPECT_EQ(derive_identifier("my-common", "log in.v2"), "MY_COMMON_LOG_IN_V2");
    EXPECT_EQ(derive_identifier("1common", "x"), "F_1COMMON_X");
    EXPECT_EQ(derive_identifier("common", "Ünï"), "COMMON__N_");
}

TEST(Registry, PascalCase) {
    EXPECT_EQ(pascal_case("reusable_auth"), "ReusableAuth");
    EXPECT_EQ(pascal_case("common"), "Common");
    EXPECT_EQ(pascal_case("my-common steps"), "MyCommonSteps");
    EXPECT_EQ(pascal_case("1common"), "F1common");
}

TEST(RegistryProperty, IdentifierMatchesOracle) {
    const std::vector<std::string> folders{"common", "reusable_auth", "a-b", "9x", "Ünï", "x.y", "MiXeD"};
    const std::vector<std::string> files{"login.feature", "a b.feature", "1.feature", "ç.feature", "x.feature.feature"};
    for (const auto& folder : folders) {
        for (const auto& file : files) {
            std::string stem = file.substr(0, file.size() - 8);
            EXPECT_EQ(derive_identifier(folder, stem), oracle_identifier(folder, file)) << folder << "/" << file;
        }
    }
}

TEST(Registry, BuildsFromEcommerce) {
    auto root = fixture("ecommerce/features");
    auto reg = build_registry(scan_workspace(root));
    ASSERT_EQ(reg.constants.size(), 3u);
    EXPECT_EQ(reg.constants[0].identifier, "COMMON_CHECKOUT");
    EXPECT_EQ(reg.constants[1].identifier, "COMMON_LOGIN");
    EXPECT_EQ(reg.constants[2], (ReuseConstant{"reusable_auth", "mfa", "REUSABLE_AUTH_MFA",
                                              normalize_path(root, "reusable_auth/mfa.feature")}));
    EXPECT_EQ(reg.by_identifier.at("COMMON_LOGIN").target_path, normalize_path(root, "common/login.feature"));
}

TEST(Registry, CollisionReportsBothPaths) {
    auto root = fixture("collision/features");
    try {
        build_registry(scan_workspace(root));
        FAIL() << "expected CollisionError";
    } catch (const CollisionError& e) {
        EXPECT_EQ(e.identifier(), "REUSABLE_A_B");
        EXPECT_THAT(e.first_path(), HasSubstr("a-b.feature"));
        EXPECT_THAT(e.second_path(), HasSubstr("a_b.feature"));
    }
}

TEST(Registry, ResolveCallForms) {
    auto root = fixture("ecommerce/features");
    auto reg = build_registry(scan_workspace(root), fixture("ecommerce/features/common"));
    EXPECT_EQ(resolve_call(reg, EnumForm{"COMMON_LOGIN"}), normalize_path(root, "common/login.feature"));
    EXPECT_EQ(resolve_call(reg, FolderFileForm{"common", "login"}), normalize_path(root, "common/login.feature"));
    EXPECT_EQ(resolve_call(reg, FolderFileForm{"common", "login.feature"}), normalize_path(root, "common/login.feature"));
    EXPECT_EQ(resolve_call(reg, FixedFolderForm{"checkout"}), normalize_path(root, "common/checkout.feature"));
}

TEST(Registry, ResolveErrors) {
    auto reg = build_registry(scan_workspace(fixture("ecommerce/features")));
    auto kind_of = [&](const CallRef& call) {
        try {
            resolve_call(reg, call);
        } catch (const ResolveError& e) {
            return e.kind();
        }
        ADD_FAILURE() << "expected ResolveError for " << describe(call);
        return ResolveError::Kind::EmptyFeature;
    };
    EXPECT_EQ(kind_of(EnumForm{"COMMON_NOPE"}), ResolveError::Kind::UnknownIdentifier);
    EXPECT_EQ(kind_of(FolderFileForm{"common", "nope"}), ResolveError::Kind::FileNotFound);
    EXPECT_EQ(kind_of(FixedFolderForm{"login"}), ResolveError::Kind::FixedDirUnset);
    EXPECT_THROW(build_registry(scan_workspace(fixture("ecommerce/features")), "/no/such/dir"), IoError);
}
