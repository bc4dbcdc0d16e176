#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autonomy {

// Malformed input: bad syntax, arity mismatch, inconsistent shapes.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a polynomial expression or system file.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ValidationError(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Operation called outside its domain (e.g. restriction of a k > 1 system,
// dimension of the unit ideal).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public PreconditionError {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : PreconditionError("dimension mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}
};

// A Groebner run exceeded the configured number of reduction steps.
class StepLimitExceeded : public std::runtime_error {
public:
    explicit StepLimitExceeded(std::size_t limit)
        : std::runtime_error("Groebner basis computation exceeded " + std::to_string(limit) +
                             " reduction steps"),
          limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

}  // namespace autonomy
