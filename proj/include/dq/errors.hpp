#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions (or index out of range).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Mixing h-truncation orders, or a bound on degree/truncation was exceeded.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input failed (engine/structure
/// mismatch, non-unitriangular operator, failed hypothesis, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::string expected)
      : Error(message + " at position " + std::to_string(position) +
              (expected.empty() ? std::string() : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace dq
