#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgkit {

// Violated mathematical invariant on an input or constructed object.
struct InvariantError : std::domain_error {
    using std::domain_error::domain_error;
};

struct AssociativityViolation : InvariantError {
    AssociativityViolation(std::size_t i, std::size_t j, std::size_t k, const std::string& detail)
        : InvariantError("associativity fails on basis triple (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + "): " + detail),
          i(i), j(j), k(k) {}
    std::size_t i, j, k;
};

struct UnitViolation : InvariantError {
    using InvariantError::InvariantError;
};

struct NonNilpotent : InvariantError {
    using InvariantError::InvariantError;
};

struct UnsupportedRadical : InvariantError {
    using InvariantError::InvariantError;
};

struct NotChainMap : InvariantError {
    using InvariantError::InvariantError;
};

struct WindowTooSmall : InvariantError {
    using InvariantError::InvariantError;
};

struct NotProjectiveTerm : InvariantError {
    using InvariantError::InvariantError;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    std::size_t line;
};

struct UnknownCommand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dgkit
