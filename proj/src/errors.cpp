#include "weave/errors.hpp"

#include <utility>

namespace weave {

namespace {

std::string located(const std::string& path, std::size_t line, std::size_t column,
                    const std::string& message) {
    std::string where = path.empty() ? std::string("<input>") : path;
    return where + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::string path, std::size_t line, std::size_t column, std::string message)
    : Error(located(path, line, column, message)),
      path_(std::move(path)),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

CollisionError::CollisionError(std::string identifier, std::string first_path,
                               std::string second_path)
    : Error("identifier " + identifier + " is derived from both " + first_path + " and " +
            second_path),
      identifier_(std::move(identifier)),
      first_(std::move(first_path)),
      second_(std::move(second_path)) {}

TagExprParseError::TagExprParseError(std::size_t position, const std::string& message)
    : Error("tag expression, position " + std::to_string(position) + ": " + message),
      position_(position) {}

ResolveError::ResolveError(Kind kind, const std::string& message) : ExpansionError(message), kind_(kind) {}

CycleError::CycleError(std::vector<std::string> path)
    : ExpansionError("call cycle: " + join_call_path(path)), path_(std::move(path)) {}

DepthExceeded::DepthExceeded(std::vector<std::string> path, int max_depth)
    : ExpansionError("call depth exceeds " + std::to_string(max_depth) + ": " + join_call_path(path)),
      path_(std::move(path)),
      max_depth_(max_depth) {}

std::string join_call_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i != 0) out += " → ";
        out += path[i];
    }
    return out;
}

}  // namespace weave
