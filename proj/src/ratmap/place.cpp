#include "rgenus/place.hpp"

#include "rgenus/errors.hpp"

namespace rgenus {

Place Place::finite(const Rational& value) {
  Place p;
  p.kind_ = Kind::Finite;
  p.value_ = value;
  return p;
}

Place Place::algebraic(const UniPoly& minpoly) {
  if (minpoly.degree() < 2) throw InvalidArgument("algebraic place needs a defining polynomial of degree >= 2");
  if (poly_gcd(minpoly, minpoly.derivative()).degree() > 0)
    throw InvalidArgument("algebraic place needs a squarefree defining polynomial");
  Place p;
  p.kind_ = Kind::Algebraic;
  p.minpoly_ = minpoly.monic();
  return p;
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::Infinity: return "inf";
    case Kind::Finite: return value_.to_string();
    case Kind::Algebraic: return "{" + minpoly_.to_string("t") + "}";
  }
  return {};
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ == Place::Kind::Finite) return a.value_ <=> b.value_;
  if (a.kind_ == Place::Kind::Algebraic) {
    if (poly_less(a.minpoly_, b.minpoly_)) return std::strong_ordering::less;
    if (poly_less(b.minpoly_, a.minpoly_)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace rgenus
