#pragma once

#include <compare>
#include <string>

#include "rgenus/rational.hpp"
#include "rgenus/unipoly.hpp"

namespace rgenus {

/// A point of the projective line over Q, or a set of conjugate algebraic
/// points given by a squarefree monic polynomial without rational roots.
class Place {
 public:
  enum class Kind { Infinity = 0, Finite = 1, Algebraic = 2 };

  Place() = default;  // infinity
  static Place infinity() { return Place(); }
  static Place finite(const Rational& value);
  /// Checks degree >= 2 and squarefreeness; the caller guarantees there are
  /// no rational roots (they would have to be promoted to finite places).
  static Place algebraic(const UniPoly& minpoly);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_algebraic() const { return kind_ == Kind::Algebraic; }
  const Rational& value() const { return value_; }
  const UniPoly& minpoly() const { return minpoly_; }
  /// Number of points on the sphere this place stands for.
  int size() const { return is_algebraic() ? minpoly_.degree() : 1; }

  /// "inf", "p/q" style numbers, or "{minpoly in t}".
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_ && a.minpoly_ == b.minpoly_;
  }
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Kind kind_ = Kind::Infinity;
  Rational value_;
  UniPoly minpoly_;
};

}  // namespace rgenus
