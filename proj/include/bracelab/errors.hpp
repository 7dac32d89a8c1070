#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bracelab {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class FactorialNotInvertible : public Error {
 public:
  using Error::Error;
};

class EnumerationBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition of a construction (prime bounds, nilpotency depth) does not hold.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotStronglyNilpotent : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

class NotNilpotent : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid data: wrong table dimensions, out-of-range entries.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bracelab
