#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbeam {

/// Syntax or identifier error produced by the expression parser.
/// Carries the byte offset into the source and the set of tokens that
/// would have been accepted at that point.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset, std::string expected)
        : std::runtime_error(message + " at offset " + std::to_string(offset)
                             + (expected.empty() ? "" : " (expected " + expected + ")")),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Domain error during expression evaluation (division by zero).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pivot fell below the singularity tolerance during factorization.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration; message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cbeam
