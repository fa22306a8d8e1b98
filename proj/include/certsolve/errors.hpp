#pragma once

#include <stdexcept>
#include <string>

namespace certsolve {

/// Operand outside an operation's domain (zero divisor, zero polynomial, unknown variable).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside what the algorithms here handle
/// (positive-dimensional system where a finite one is required, ...).
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interval division by an interval that contains zero. The caller decides
/// whether to split the box or raise the working precision.
class PossibleSingularity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Invariant violated inside an algorithm; never expected on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace certsolve
