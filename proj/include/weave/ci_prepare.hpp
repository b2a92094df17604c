#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weave {

inline constexpr std::string_view kDefaultPathToken = "\"PathToFeatureFiles\"";
inline constexpr std::string_view kDefaultTagToken = "\"@ScenarioTag\"";

/// Runner source with literal placeholder tokens. Tokens include their quotes.
struct RunnerTemplate {
    std::string content;
    std::string path_token = std::string(kDefaultPathToken);
    std::string tag_token = std::string(kDefaultTagToken);
};

/// Non-fatal: a token never occurs in the template.
struct TokenAbsent {
    std::string token;
    bool operator==(const TokenAbsent&) const = default;
};

struct PrepareResult {
    std::string text;
    std::vector<TokenAbsent> notices;
};

/// Same effect as running, in order,
///   sed "s|<path_token>|\"<feature_path>\"|g"
///   sed "s|<tag_token>|\"<tags>\"|g"
/// over the template. Throws Error when the tokens are empty or equal, or when
/// feature_path/tags contain an unescaped double quote.
PrepareResult prepare(const RunnerTemplate& tpl, std::string_view feature_path, std::string_view tags);

}  // namespace weave
