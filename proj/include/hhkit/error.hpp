#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A function or formula was evaluated outside the set where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The value exists but the first derivative does not (abs at 0, x^c at 0 with 0 < c < 1).
class DerivativeUndefined : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure stopped before reaching its target accuracy.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hhkit
