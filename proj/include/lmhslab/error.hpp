#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmhslab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or lengths that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An exact computation was asked for something that does not exist
/// (non-integral entry, non-nilpotent operator, ...).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lmhslab
