#pragma once

#include <stdexcept>
#include <string>

namespace klab {

/// Raised by text parsers; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Raised when a computation would exceed a configured size/memory cap.
/// Distinct from a time budget: budgets produce partial results, caps refuse up front.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace klab
