#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symbool {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, or 0 when the input is a single
/// expression without line structure.
class ParseError : public Error {
 public:
  explicit ParseError(std::string const& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure would exceed its configured size bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A group-theoretic operation received a letter action that is not a
/// bijection.
class NotPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace symbool
