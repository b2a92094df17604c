#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weave {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, std::size_t column, std::string message);

    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string path_;
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Two reusable feature files derive the same identifier.
class CollisionError : public Error {
public:
    CollisionError(std::string identifier, std::string first_path, std::string second_path);

    const std::string& identifier() const noexcept { return identifier_; }
    const std::string& first_path() const noexcept { return first_; }
    const std::string& second_path() const noexcept { return second_; }

private:
    std::string identifier_;
    std::string first_;
    std::string second_;
};

class TemplateError : public Error {
public:
    using Error::Error;
};

/// A step pattern uses a parameter type outside {string} and {int}.
class PatternError : public Error {
public:
    using Error::Error;
};

class TagExprParseError : public Error {
public:
    TagExprParseError(std::size_t position, const std::string& message);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Base for everything that aborts scenario expansion.
class ExpansionError : public Error {
public:
    using Error::Error;
};

class ResolveError : public ExpansionError {
public:
    enum class Kind { UnknownIdentifier, FileNotFound, FixedDirUnset, EmptyFeature };

    ResolveError(Kind kind, const std::string& message);
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class CycleError : public ExpansionError {
public:
    explicit CycleError(std::vector<std::string> path);
    const std::vector<std::string>& path() const noexcept { return path_; }

private:
    std::vector<std::string> path_;
};

class DepthExceeded : public ExpansionError {
public:
    DepthExceeded(std::vector<std::string> path, int max_depth);
    const std::vector<std::string>& path() const noexcept { return path_; }
    int max_depth() const noexcept { return max_depth_; }

private:
    std::vector<std::string> path_;
    int max_depth_;
};

/// Joins a call path as "a → b → c".
std::string join_call_path(const std::vector<std::string>& path);

}  // namespace weave
