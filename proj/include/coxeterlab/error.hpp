#pragma once

#include <stdexcept>
#include <string>

namespace coxeterlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram text or JSON. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Arguments outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit (scalar level cap, cycle-expansion cap,
/// search scale guard) would be exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A numeric operation was asked to evaluate a polynomial that still has
/// free dotted-edge variables.
class UnassignedVariableError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeterlab
