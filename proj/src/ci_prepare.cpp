#include "weave/ci_prepare.hpp"

#include "weave/errors.hpp"

namespace weave {

namespace {

bool has_unescaped_quote(std::string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;
            continue;
        }
        if (s[i] == '"') return true;
    }
    return false;
}

// One sed "s|token|replacement|g" pass. Returns false when token never occurs.
bool substitute_pass(std::string& text, std::string_view token, std::string_view replacement) {
    std::string out;
    out.reserve(text.size());
    bool hit = false;
    std::string_view rest(text);
    while (true) {
        std::size_t at = rest.find(token);
        if (at == std::string_view::npos) break;
        hit = true;
        out.append(rest.substr(0, at));
        out.append(replacement);
        rest.remove_prefix(at + token.size());
    }
    if (!hit) return false;
    out.append(rest);
    text = std::move(out);
    return true;
}

}  // namespace

PrepareResult prepare(const RunnerTemplate& tpl, std::string_view feature_path, std::string_view tags) {
    if (tpl.path_token.empty() || tpl.tag_token.empty()) throw Error("placeholder tokens must be non-empty");
    if (tpl.path_token == tpl.tag_token) throw Error("path and tag placeholder tokens must differ");
    if (has_unescaped_quote(feature_path)) throw Error("feature path contains an unescaped double quote");
    if (has_unescaped_quote(tags)) throw Error("tags contain an unescaped double quote");

    PrepareResult result{tpl.content, {}};
    const std::string path_value = "\"" + std::string(feature_path) + "\"";
    const std::string tag_value = "\"" + std::string(tags) + "\"";
    if (!substitute_pass(result.text, tpl.path_token, path_value)) result.notices.push_back({tpl.path_token});
    if (!substitute_pass(result.text, tpl.tag_token, tag_value)) result.notices.push_back({tpl.tag_token});
    return result;
}

}  // namespace weave
