#include "weave/tag_expr.hpp"

#include <algorithm>
#include <vector>

#include "weave/errors.hpp"
#include "weave/text.hpp"

namespace weave {

struct TagExpression::Node {
    enum class Op { Literal, Not, And, Or };
    Op op = Op::Literal;
    std::string tag;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using Node = TagExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
    enum class Kind { Tag, And, Or, Not, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        if (text::is_space(src[i])) {
            ++i;
            continue;
        }
        if (src[i] == '(' || src[i] == ')') {
            tokens.push_back({src[i] == '(' ? Token::Kind::LParen : Token::Kind::RParen, std::string(1, src[i]), i});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < src.size() && !text::is_space(src[i]) && src[i] != '(' && src[i] != ')') ++i;
        std::string word(src.substr(start, i - start));
        if (word == "and") {
            tokens.push_back({Token::Kind::And, word, start});
        } else if (word == "or") {
            tokens.push_back({Token::Kind::Or, word, start});
        } else if (word == "not") {
            tokens.push_back({Token::Kind::Not, word, start});
        } else if (is_valid_tag(word)) {
            tokens.push_back({Token::Kind::Tag, word, start});
        } else {
            throw TagExprParseError(start, "expected a tag starting with '@', got '" + word + "'");
        }
    }
    tokens.push_back({Token::Kind::End, "", src.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr parse() {
        NodePtr root = parse_or();
        if (peek().kind != Token::Kind::End) {
            throw TagExprParseError(peek().pos, "unexpected '" + peek().text + "'");
        }
        return root;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& next() { return tokens_[index_++]; }

    static NodePtr binary(Node::Op op, NodePtr lhs, NodePtr rhs) {
        auto node = std::make_shared<Node>();
        node->op = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    NodePtr parse_or() {
        NodePtr lhs = parse_and();
        while (peek().kind == Token::Kind::Or) {
            next();
            lhs = binary(Node::Op::Or, lhs, parse_and());
        }
        return lhs;
    }

    NodePtr parse_and() {
        NodePtr lhs = parse_not();
        while (peek().kind == Token::Kind::And) {
            next();
            lhs = binary(Node::Op::And, lhs, parse_not());
        }
        return lhs;
    }

    NodePtr parse_not() {
        if (peek().kind == Token::Kind::Not) {
            next();
            auto node = std::make_shared<Node>();
            node->op = Node::Op::Not;
            node->lhs = parse_not();
            return node;
        }
        return parse_primary();
    }

    NodePtr parse_primary() {
        const Token& tok = next();
        switch (tok.kind) {
            case Token::Kind::Tag: {
                auto node = std::make_shared<Node>();
                node->tag = tok.text;
                return node;
            }
            case Token::Kind::LParen: {
                NodePtr inner = parse_or();
                if (peek().kind != Token::Kind::RParen) {
                    throw TagExprParseError(peek().pos, "expected ')'");
                }
                next();
                return inner;
            }
            case Token::Kind::End:
                throw TagExprParseError(tok.pos, "unexpected end of expression");
            default:
                throw TagExprParseError(tok.pos, "unexpected '" + tok.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

bool eval(const Node& node, std::span<const Tag> tags) {
    switch (node.op) {
        case Node::Op::Literal:
            return std::any_of(tags.begin(), tags.end(), [&](const Tag& t) { return t.value == node.tag; });
        case Node::Op::Not:
            return !eval(*node.lhs, tags);
        case Node::Op::And:
            return eval(*node.lhs, tags) && eval(*node.rhs, tags);
        case Node::Op::Or:
            return eval(*node.lhs, tags) || eval(*node.rhs, tags);
    }
    return false;
}

std::string render(const Node& node) {
    switch (node.op) {
        case Node::Op::Literal: return node.tag;
        case Node::Op::Not: return "not " + render(*node.lhs);
        case Node::Op::And: return "(" + render(*node.lhs) + " and " + render(*node.rhs) + ")";
        case Node::Op::Or: return "(" + render(*node.lhs) + " or " + render(*node.rhs) + ")";
    }
    return {};
}

}  // namespace

TagExpression TagExpression::parse(std::string_view src) {
    if (text::trim(src).empty()) return TagExpression(nullptr);
    return TagExpression(Parser(tokenize(src)).parse());
}

bool TagExpression::evaluate(std::span<const Tag> tags) const { return root_ == nullptr || eval(*root_, tags); }

std::string TagExpression::to_string() const { return root_ ? render(*root_) : std::string(); }

}  // namespace weave
