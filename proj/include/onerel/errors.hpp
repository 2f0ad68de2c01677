#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onerel {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter index outside the ambient rank, or operands of different rank.
class RankError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised by the word-problem routines when the relator fails C'(1/6), where
// Dehn's algorithm would only give a one-sided answer.
class NotSmallCancellation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace onerel
