#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filtra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different variable contexts.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// Checked exponent arithmetic left the representable range.
class ExponentOverflow : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain (zero/unit ideal where a
/// proper nonzero one is required, index out of range, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace filtra
