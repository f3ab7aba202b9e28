#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treestat {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A label lies outside 1..m, or a label sequence does not start at the root,
// or two objects carry different arities.
class ArityViolation : public Error {
 public:
  using Error::Error;
};

// A candidate vertex set is not prefix-closed: some member's mother is absent.
class OrphanVertex : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed the hard count guard.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// An operation was asked of a generator model that does not support it
// (e.g. joint presence probabilities for count-based offspring laws).
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

// Mismatched depth caps, profile shapes, or trees exceeding a depth cap.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  using Error::Error;
};

// Parameter values outside their admissible range (z, alpha, weights, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace treestat
