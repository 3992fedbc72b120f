#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hipp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: length mismatches, unknown ids, bad config values.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition
// (no complement exists, infeasible solution, illegal reduction step).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Text that cannot be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// A requested computation exceeds a configured size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hipp
