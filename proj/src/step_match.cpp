#include "weave/step_match.hpp"

#include <charconv>

#include "weave/errors.hpp"

namespace weave {

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

}  // namespace

std::string to_string(const StepArgumentValue& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    return std::to_string(std::get<std::int64_t>(value));
}

StepPattern StepPattern::compile(std::string_view pattern) {
    StepPattern compiled;
    compiled.source_ = std::string(pattern);
    std::string literal;
    auto flush = [&] {
        if (literal.empty()) return;
        compiled.segments_.push_back({SegmentKind::Literal, std::move(literal)});
        literal.clear();
    };

    // A '}' closing an escaped '{' is literal too, so "\\{int}" reads as "{int}".
    int escaped_open = 0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        char ch = pattern[i];
        if (ch == '\\' && i + 1 < pattern.size()) {
            if (pattern[i + 1] == '{') ++escaped_open;
            literal += pattern[++i];
            continue;
        }
        if (ch == '}') {
            if (escaped_open == 0) throw PatternError("unmatched '}' in pattern '" + compiled.source_ + "'");
            --escaped_open;
            literal += ch;
            continue;
        }
        if (ch != '{') {
            literal += ch;
            continue;
        }
        std::size_t close = pattern.find('}', i + 1);
        if (close == std::string_view::npos) {
            throw PatternError("unterminated parameter in pattern '" + compiled.source_ + "'");
        }
        std::string_view name = pattern.substr(i + 1, close - i - 1);
        flush();
        if (name == "string") {
            compiled.segments_.push_back({SegmentKind::String, {}});
        } else if (name == "int") {
            compiled.segments_.push_back({SegmentKind::Int, {}});
        } else {
            throw PatternError("unknown parameter type {" + std::string(name) + "} in pattern '" +
                               compiled.source_ + "' (supported: {string}, {int})");
        }
        i = close;
    }
    flush();
    return compiled;
}

bool StepPattern::match_from(std::string_view text, std::size_t seg, std::vector<StepArgumentValue>& out) const {
    if (seg == segments_.size()) return text.empty();
    const Segment& segment = segments_[seg];

    switch (segment.kind) {
        case SegmentKind::Literal:
            return text.starts_with(segment.literal) &&
                   match_from(text.substr(segment.literal.size()), seg + 1, out);

        case SegmentKind::String: {
            if (text.empty() || text.front() != '"') return false;
            std::size_t close = text.find('"', 1);
            if (close == std::string_view::npos) return false;
            out.emplace_back(std::string(text.substr(1, close - 1)));
            if (match_from(text.substr(close + 1), seg + 1, out)) return true;
            out.pop_back();
            return false;
        }

        case SegmentKind::Int: {
            std::size_t digits_start = (!text.empty() && (text.front() == '-' || text.front() == '+')) ? 1 : 0;
            std::size_t end = digits_start;
            while (end < text.size() && is_digit(text[end])) ++end;
            // Longest run first, then shorter prefixes.
            for (; end > digits_start; --end) {
                std::int64_t value = 0;
                std::string_view number = text.substr(0, end);
                if (number.front() == '+') number.remove_prefix(1);
                auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
                if (ec != std::errc() || ptr != number.data() + number.size()) continue;
                out.emplace_back(value);
                if (match_from(text.substr(end), seg + 1, out)) return true;
                out.pop_back();
            }
            return false;
        }
    }
    return false;
}

std::optional<std::vector<StepArgumentValue>> StepPattern::match(std::string_view text) const {
    std::vector<StepArgumentValue> args;
    if (!match_from(text, 0, args)) return std::nullopt;
    return args;
}

std::optional<std::vector<StepArgumentValue>> match_step(std::string_view text, std::string_view pattern) {
    return StepPattern::compile(pattern).match(text);
}

}  // namespace weave
