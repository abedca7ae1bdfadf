#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgenus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroOverZero : public Error {
 public:
  ZeroOverZero() : Error("numerator and denominator are both zero") {}
};

class DepthExceeded : public Error {
 public:
  explicit DepthExceeded(int depth)
      : Error("tower depth " + std::to_string(depth) + " exceeds the limit of 2") {}
};

class NotDominating : public Error {
 public:
  explicit NotDominating(const std::string& what) : Error("orbifold does not dominate O2A: " + what) {}
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails (a library bug, or a
/// counterexample to a mathematical fact the library relies on).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DivisionByZeroConstant : public ParseError {
 public:
  explicit DivisionByZeroConstant(std::size_t position)
      : ParseError("division by a vanishing constant", position) {}
};

class NonIntegerExponent : public ParseError {
 public:
  explicit NonIntegerExponent(std::size_t position)
      : ParseError("exponent is not an integer literal", position) {}
};

}  // namespace rgenus
