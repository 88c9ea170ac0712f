#pragma once

#include <stdexcept>
#include <string>

namespace ntau {

/// Thrown when a computation would exceed a configured size cap.
/// Caps are explicit configuration; exceeding one is an error, never
/// silent truncation.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Text-input parse failure with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A declared operation precondition does not hold; callers that can fall
/// back to a generic path catch this type specifically.
class PreconditionViolation : public std::invalid_argument {
public:
    explicit PreconditionViolation(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace ntau
