#pragma once

#include <stdexcept>
#include <string>

namespace satlen {

/// Malformed user input: bad polynomial text, unknown variable, ring mismatch,
/// violated operation preconditions. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when polynomial text cannot be parsed. `column` is 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t column)
        : InputError(message + " (column " + std::to_string(column) + ")"), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// A computation hit a configured limit (degree cap, iteration cap,
/// oracle non-stabilization). Signals a bug or pathological input.
class ComputationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace satlen
