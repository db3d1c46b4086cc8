#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intcl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

/// Operation is only defined in characteristic zero.
class CharacteristicError : public Error {
 public:
  explicit CharacteristicError(const std::string& op)
      : Error(op + " requires characteristic 0") {}
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Gröbner computation exceeded a configured cap. Never a silent wrong answer.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace intcl
