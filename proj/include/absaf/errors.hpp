#pragma once

#include <stdexcept>
#include <string>

namespace absaf {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input that is well-formed but violates a model invariant (empty ballot, unknown label, ...).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured search cap (nodes, extensions, combinations, subsets) was exceeded.
/// Never a silent truncation.
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wall-clock deadline passed during a solve.
class TimeoutError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace absaf
