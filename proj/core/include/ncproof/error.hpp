// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncproof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("field mismatch") {}
};

/// A precondition of an operation does not hold for the given arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Expansion of a formula would exceed the configured term cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("expansion cap of " + std::to_string(cap) + " terms exceeded"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace ncproof
