#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rgenus/ratmap.hpp"

namespace rgenus {

/// Syntax tree of a rational-function expression.
///
///   full   := expr ('.' expr)*          composition, outermost first
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | base ('^' int)?
///   base   := integer | 'z' | '(' full ')'
///
/// An exponent is an optionally signed integer, possibly in parentheses.
struct Expr {
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Compose };
  Kind kind = Kind::Number;
  std::size_t pos = 0;
  Rational value;   // Number
  long exponent = 0;  // Pow
  std::vector<std::shared_ptr<const Expr>> args;
};

/// Throws SyntaxError, or NonIntegerExponent for a non-integer exponent.
std::shared_ptr<const Expr> parse_tree(const std::string& src);

/// Canonical map of a tree. Throws DivisionByZeroConstant when a divisor
/// (or a base raised to a negative power) is the zero constant.
RationalMap lower(const Expr& e);

/// parse_tree followed by lower.
RationalMap parse_expr(const std::string& src);

}  // namespace rgenus
