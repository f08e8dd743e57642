#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partialsat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula / literal-set / quantifier text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at " + std::to_string(line) + ":" +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A caller broke an operation's precondition (inconsistent literals, non-CNF
// input where CNF is required, assignment outside the allowed domain, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured cap or budget was exceeded. Never means "false".
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace partialsat
