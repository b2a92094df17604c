#include "weave/gherkin.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>

#include "weave/errors.hpp"
#include "weave/text.hpp"

namespace weave {

namespace {

constexpr std::array<std::pair<StepKeyword, std::string_view>, 5> kStepKeywords{{
    {StepKeyword::Given, "Given"},
    {StepKeyword::When, "When"},
    {StepKeyword::Then, "Then"},
    {StepKeyword::And, "And"},
    {StepKeyword::But, "But"},
}};

enum class LineKind {
    Blank,
    Comment,
    Tags,
    Feature,
    Background,
    Scenario,
    Unsupported,  // Scenario Outline, Examples, Rule, ...
    Step,
    TableRow,
    DocStringDelimiter,
    Other,
};

struct Classified {
    LineKind kind = LineKind::Other;
    std::string_view rest;  // text after the keyword, trimmed
    StepKeyword step = StepKeyword::Given;
};

bool starts_with_keyword_word(std::string_view line, std::string_view word) {
    if (!line.starts_with(word)) return false;
    if (line.size() == word.size()) return true;
    char next = line[word.size()];
    return next == ' ' || next == '\t';
}

Classified classify(std::string_view trimmed) {
    Classified c;
    if (trimmed.empty()) {
        c.kind = LineKind::Blank;
        return c;
    }
    if (trimmed.front() == '#') {
        c.kind = LineKind::Comment;
        return c;
    }
    if (trimmed.front() == '@') {
        c.kind = LineKind::Tags;
        return c;
    }
    if (trimmed.front() == '|') {
        c.kind = LineKind::TableRow;
        return c;
    }
    if (trimmed.starts_with("\"\"\"") || trimmed.starts_with("```")) {
        c.kind = LineKind::DocStringDelimiter;
        return c;
    }
    auto header = [&](std::string_view keyword, LineKind kind) {
        if (!trimmed.starts_with(keyword)) return false;
        c.kind = kind;
        c.rest = text::trim(trimmed.substr(keyword.size()));
        return true;
    };
    if (header("Feature:", LineKind::Feature) || header("Background:", LineKind::Background) ||
        header("Scenario Outline:", LineKind::Unsupported) ||
        header("Scenario Template:", LineKind::Unsupported) ||
        header("Scenario:", LineKind::Scenario) || header("Examples:", LineKind::Unsupported) ||
        header("Example:", LineKind::Unsupported) || header("Scenarios:", LineKind::Unsupported) ||
        header("Rule:", LineKind::Unsupported)) {
        return c;
    }
    for (const auto& [keyword, word] : kStepKeywords) {
        if (starts_with_keyword_word(trimmed, word)) {
            c.kind = LineKind::Step;
            c.step = keyword;
            c.rest = text::trim(trimmed.substr(word.size()));
            return c;
        }
    }
    return c;
}

std::vector<std::string> split_table_row(std::string_view trimmed, bool& well_formed) {
    std::vector<std::string> cells;
    well_formed = trimmed.size() >= 2 && trimmed.front() == '|' && trimmed.back() == '|';
    if (!well_formed) return cells;
    // Escapes: \| \\ \n ; a trailing backslash before the closing pipe is literal.
    std::string cell;
    for (std::size_t i = 1; i < trimmed.size(); ++i) {
        char ch = trimmed[i];
        if (ch == '\\' && i + 1 < trimmed.size()) {
            char next = trimmed[i + 1];
            if (next == '|' || next == '\\') {
                cell += next;
                ++i;
                continue;
            }
            if (next == 'n') {
                cell += '\n';
                ++i;
                continue;
            }
        }
        if (ch == '|') {
            cells.emplace_back(text::trim(cell));
            cell.clear();
            continue;
        }
        cell += ch;
    }
    if (!text::trim(cell).empty()) well_formed = false;
    return cells;
}

class FeatureParser {
public:
    FeatureParser(std::string_view source, std::string_view path) : path_(path) {
        if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
        lines_ = text::split_lines(source);
    }

    FeatureAst parse() {
        ast_.source_path = std::string(path_);
        for (line_no_ = 0; line_no_ < lines_.size(); ++line_no_) {
            handle_line(lines_[line_no_]);
        }
        if (!seen_feature_) fail(lines_.empty() ? 1 : lines_.size(), 1, "missing Feature keyword");
        if (!pending_tags_.empty()) fail(tags_line_, 1, "tags are not followed by a Scenario or Feature");
        close_block();
        return std::move(ast_);
    }

private:
    enum class Block { None, Header, Background, Scenario };

    [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) const {
        throw ParseError(std::string(path_), line, column, message);
    }

    [[noreturn]] void fail_here(std::string_view raw, const std::string& message) const {
        fail(line_no_ + 1, indent_of(raw) + 1, message);
    }

    static std::size_t indent_of(std::string_view raw) {
        std::size_t n = 0;
        while (n < raw.size() && (raw[n] == ' ' || raw[n] == '\t')) ++n;
        return n;
    }

    void close_block() {
        if (block_ == Block::Background && ast_.background && ast_.background->steps.empty()) {
            fail(block_line_, 1, "Background has no steps");
        }
        if (block_ == Block::Scenario && ast_.scenarios.back().steps.empty()) {
            fail(block_line_, 1, "Scenario has no steps");
        }
    }

    std::vector<Tag> parse_tags(std::string_view raw, std::string_view trimmed) {
        std::vector<Tag> tags;
        std::size_t base = indent_of(raw);
        std::size_t i = 0;
        while (i < trimmed.size()) {
            while (i < trimmed.size() && text::is_space(trimmed[i])) ++i;
            if (i >= trimmed.size()) break;
            std::size_t start = i;
            while (i < trimmed.size() && !text::is_space(trimmed[i])) ++i;
            std::string_view token = trimmed.substr(start, i - start);
            if (token.front() == '#') break;
            if (!is_valid_tag(token)) {
                fail(line_no_ + 1, base + start + 1, "invalid tag '" + std::string(token) + "'");
            }
            tags.push_back(Tag{std::string(token)});
        }
        return tags;
    }

    void handle_line(std::string_view raw) {
        std::string_view trimmed = text::trim(raw);
        Classified c = classify(trimmed);

        switch (c.kind) {
            case LineKind::Blank:
                return;
            case LineKind::Comment:
                if (!seen_feature_) {
                    std::string_view body = text::trim(trimmed.substr(1));
                    if (body.starts_with("language:")) {
                        fail_here(raw, "language directives are not supported (English keywords only)");
                    }
                }
                return;
            case LineKind::Tags: {
                if (pending_tags_.empty()) tags_line_ = line_no_ + 1;
                auto tags = parse_tags(raw, trimmed);
                pending_tags_.insert(pending_tags_.end(), tags.begin(), tags.end());
                last_step_ = nullptr;
                return;
            }
            case LineKind::Feature:
                if (seen_feature_) fail_here(raw, "a file may contain only one Feature");
                if (c.rest.empty()) fail_here(raw, "Feature name is empty");
                seen_feature_ = true;
                ast_.name = std::string(c.rest);
                ast_.tags = std::exchange(pending_tags_, {});
                block_ = Block::Header;
                block_line_ = line_no_ + 1;
                return;
            case LineKind::Unsupported:
                fail_here(raw, "unsupported keyword '" + std::string(trimmed.substr(0, trimmed.find(':') + 1)) +
                                   "' (Scenario Outline, Examples and Rule are not supported)");
            default:
                break;
        }

        if (!seen_feature_) fail_here(raw, "expected Feature keyword");

        switch (c.kind) {
            case LineKind::Background:
                if (!pending_tags_.empty()) fail_here(raw, "tags are not allowed on Background");
                if (ast_.background) fail_here(raw, "only one Background is allowed");
                if (!ast_.scenarios.empty()) fail_here(raw, "Background must precede every Scenario");
                close_block();
                ast_.background.emplace();
                block_ = Block::Background;
                block_line_ = line_no_ + 1;
                last_step_ = nullptr;
                return;
            case LineKind::Scenario: {
                close_block();
                Scenario scenario;
                scenario.name = std::string(c.rest);
                scenario.tags = std::exchange(pending_tags_, {});
                ast_.scenarios.push_back(std::move(scenario));
                block_ = Block::Scenario;
                block_line_ = line_no_ + 1;
                last_step_ = nullptr;
                return;
            }
            case LineKind::Step: {
                if (!pending_tags_.empty()) fail_here(raw, "tags must be followed by a Scenario");
                std::vector<Step>* target = nullptr;
                if (block_ == Block::Background) target = &ast_.background->steps;
                if (block_ == Block::Scenario) target = &ast_.scenarios.back().steps;
                if (target == nullptr) fail_here(raw, "step outside of a Scenario or Background");
                if (c.rest.empty()) fail_here(raw, "step text is empty");
                target->push_back(Step{c.step, std::string(c.rest), std::nullopt});
                last_step_ = &target->back();
                return;
            }
            case LineKind::TableRow:
                handle_table_row(raw, trimmed);
                return;
            case LineKind::DocStringDelimiter:
                handle_doc_string(raw, trimmed);
                return;
            case LineKind::Other:
                if (block_ == Block::Header && pending_tags_.empty()) {
                    if (!ast_.description.empty()) ast_.description += '\n';
                    ast_.description += trimmed;
                    return;
                }
                fail_here(raw, "unknown keyword at start of line: '" +
                                   std::string(trimmed.substr(0, std::min<std::size_t>(trimmed.size(), 24))) + "'");
            default:
                fail_here(raw, "unexpected line");
        }
    }

    void handle_table_row(std::string_view raw, std::string_view trimmed) {
        if (last_step_ == nullptr) fail_here(raw, "table row without a preceding step");
        bool well_formed = false;
        auto cells = split_table_row(trimmed, well_formed);
        if (!well_formed) fail_here(raw, "malformed table row");
        if (!last_step_->argument) last_step_->argument = DataTable{};
        auto* table = std::get_if<DataTable>(&*last_step_->argument);
        if (table == nullptr) fail_here(raw, "step already has a doc string argument");
        if (!table->rows.empty() && table->rows.front().size() != cells.size()) {
            fail_here(raw, "inconsistent cell count in table row");
        }
        table->rows.push_back(std::move(cells));
    }

    void handle_doc_string(std::string_view raw, std::string_view trimmed) {
        if (last_step_ == nullptr || last_step_->argument) {
            fail_here(raw, "doc string without a preceding step");
        }
        const std::string_view delimiter = trimmed.substr(0, 3);
        const std::size_t indent = indent_of(raw);
        const std::size_t open_line = line_no_ + 1;
        DocString doc;
        doc.content_type = std::string(text::trim(trimmed.substr(3)));

        std::string escaped_delimiter;
        for (char ch : delimiter) {
            escaped_delimiter += '\\';
            escaped_delimiter += ch;
        }

        std::vector<std::string> content;
        bool closed = false;
        for (++line_no_; line_no_ < lines_.size(); ++line_no_) {
            std::string_view line = lines_[line_no_];
            if (text::trim(line) == delimiter) {
                closed = true;
                break;
            }
            std::size_t strip = 0;
            while (strip < indent && strip < line.size() && (line[strip] == ' ' || line[strip] == '\t')) ++strip;
            content.push_back(text::replace_all(line.substr(strip), escaped_delimiter, delimiter));
        }
        if (!closed) fail(open_line, indent + 1, "unterminated doc string");
        doc.content = text::join(content, "\n");
        last_step_->argument = std::move(doc);
    }

    std::string_view path_;
    std::vector<std::string_view> lines_;
    std::size_t line_no_ = 0;
    FeatureAst ast_;
    bool seen_feature_ = false;
    Block block_ = Block::None;
    std::size_t block_line_ = 0;
    std::vector<Tag> pending_tags_;
    std::size_t tags_line_ = 0;
    Step* last_step_ = nullptr;
};

std::string escape_cell(std::string_view cell) {
    std::string out;
    for (char ch : cell) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '|': out += "\\|"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

void write_tags(std::string& out, const std::vector<Tag>& tags, std::string_view indent) {
    if (tags.empty()) return;
    out += indent;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i != 0) out += ' ';
        out += tags[i].value;
    }
    out += '\n';
}

void write_steps(std::string& out, const std::vector<Step>& steps) {
    for (const auto& step : steps) {
        out += "    ";
        out += keyword_text(step.keyword);
        out += ' ';
        out += step.text;
        out += '\n';
        if (!step.argument) continue;
        if (const auto* table = std::get_if<DataTable>(&*step.argument)) {
            std::vector<std::string> escaped_rows;
            std::vector<std::size_t> widths;
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : table->rows) {
                auto& escaped = cells.emplace_back();
                for (std::size_t i = 0; i < row.size(); ++i) {
                    escaped.push_back(escape_cell(row[i]));
                    if (widths.size() <= i) widths.push_back(0);
                    widths[i] = std::max(widths[i], text::utf8_length(escaped.back()));
                }
            }
            for (const auto& row : cells) {
                out += "      |";
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out += ' ';
                    out += row[i];
                    out.append(widths[i] - text::utf8_length(row[i]), ' ');
                    out += " |";
                }
                out += '\n';
            }
        } else {
            const auto& doc = std::get<DocString>(*step.argument);
            out += "      \"\"\"";
            out += doc.content_type;
            out += '\n';
            for (std::string_view line : text::split_lines(doc.content)) {
                if (!line.empty()) {
                    out += "      ";
                    out += text::replace_all(line, "\"\"\"", "\\\"\\\"\\\"");
                }
                out += '\n';
            }
            out += "      \"\"\"\n";
        }
    }
}

bool is_single_trimmed_line(std::string_view value) {
    return value.find('\n') == std::string_view::npos && value.find('\r') == std::string_view::npos &&
           text::trim(value) == value;
}

std::optional<std::string> validate_steps(const std::vector<Step>& steps, const std::string& where) {
    if (steps.empty()) return where + " has no steps";
    for (const auto& step : steps) {
        if (step.text.empty() || !is_single_trimmed_line(step.text)) {
            return where + ": step text must be a non-empty trimmed single line";
        }
        if (!step.argument) continue;
        if (const auto* table = std::get_if<DataTable>(&*step.argument)) {
            if (table->rows.empty() || table->rows.front().empty()) return where + ": empty data table";
            for (const auto& row : table->rows) {
                if (row.size() != table->rows.front().size()) return where + ": ragged data table";
                for (const auto& cell : row) {
                    if (cell.find('\r') != std::string::npos || text::trim(cell) != cell) {
                        return where + ": table cells must be trimmed";
                    }
                }
            }
        } else {
            const auto& doc = std::get<DocString>(*step.argument);
            if (!is_single_trimmed_line(doc.content_type)) return where + ": bad doc string content type";
            if (doc.content.find('\r') != std::string::npos ||
                doc.content.find("\\\"\\\"\\\"") != std::string::npos) {
                return where + ": doc string content cannot be serialized";
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view keyword_text(StepKeyword keyword) {
    for (const auto& [k, word] : kStepKeywords) {
        if (k == keyword) return word;
    }
    return "Given";
}

bool is_valid_tag(std::string_view value) {
    if (value.size() < 2 || value.front() != '@') return false;
    return std::none_of(value.begin(), value.end(), [](char ch) { return text::is_space(ch); });
}

FeatureAst parse_feature(std::string_view source, std::string_view source_path) {
    return FeatureParser(source, source_path).parse();
}

std::string serialize_feature(const FeatureAst& ast) {
    std::string out;
    write_tags(out, ast.tags, "");
    out += "Feature: ";
    out += ast.name;
    out += '\n';
    if (!ast.description.empty()) {
        for (std::string_view line : text::split_lines(ast.description)) {
            out += "  ";
            out += line;
            out += '\n';
        }
    }
    if (ast.background) {
        out += "\n  Background:\n";
        write_steps(out, ast.background->steps);
    }
    for (const auto& scenario : ast.scenarios) {
        out += '\n';
        write_tags(out, scenario.tags, "  ");
        out += "  Scenario:";
        if (!scenario.name.empty()) {
            out += ' ';
            out += scenario.name;
        }
        out += '\n';
        write_steps(out, scenario.steps);
    }
    return out;
}

std::optional<std::string> validate_feature(const FeatureAst& ast) {
    if (ast.name.empty() || !is_single_trimmed_line(ast.name)) return "feature name must be a non-empty trimmed line";
    for (const auto& tag : ast.tags) {
        if (!is_valid_tag(tag.value)) return "invalid feature tag '" + tag.value + "'";
    }
    if (!ast.description.empty()) {
        for (std::string_view line : text::split_lines(ast.description)) {
            if (line.empty() || text::trim(line) != line || classify(line).kind != LineKind::Other) {
                return "description line '" + std::string(line) + "' would not re-parse as description";
            }
        }
    }
    if (ast.background) {
        if (auto err = validate_steps(ast.background->steps, "Background")) return err;
    }
    for (const auto& scenario : ast.scenarios) {
        if (!is_single_trimmed_line(scenario.name)) return "scenario name must be a trimmed single line";
        for (const auto& tag : scenario.tags) {
            if (!is_valid_tag(tag.value)) return "invalid scenario tag '" + tag.value + "'";
        }
        if (auto err = validate_steps(scenario.steps, "Scenario '" + scenario.name + "'")) return err;
    }
    return std::nullopt;
}

}  // namespace weave
