#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rgenus/place.hpp"
#include "rgenus/rational.hpp"
#include "rgenus/unipoly.hpp"

namespace rgenus {

/// A rational map P/Q of the projective line.
///
/// Canonical form: P and Q coprime, all coefficients integers with overall
/// content 1, and lc(Q) > 0. The degree is max(deg P, deg Q).
class RationalMap {
 public:
  /// The identity map z.
  RationalMap();

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_polynomial() const { return den_.degree() == 0; }

  std::string to_string() const;

  friend bool operator==(const RationalMap&, const RationalMap&) = default;
  friend RationalMap make_map(const UniPoly& num, const UniPoly& den);
  friend RationalMap compose(const RationalMap& outer, const RationalMap& inner);

 private:
  RationalMap(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalMap scaled(UniPoly num, UniPoly den);
  UniPoly num_, den_;
};

/// Canonical coprime form of num/den. Throws ZeroOverZero when both vanish
/// and DivisionByZero when only the denominator does.
RationalMap make_map(const UniPoly& num, const UniPoly& den);
RationalMap make_map(const UniPoly& poly);
RationalMap constant_map(const Rational& c);

/// outer(inner(z)).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);
/// Composition of a non-empty list, outermost first.
RationalMap compose_all(const std::vector<RationalMap>& parts);

RationalMap operator+(const RationalMap& a, const RationalMap& b);
RationalMap operator-(const RationalMap& a, const RationalMap& b);
RationalMap operator-(const RationalMap& a);
RationalMap operator*(const RationalMap& a, const RationalMap& b);
/// Throws DivisionByZero for the zero map as divisor.
RationalMap operator/(const RationalMap& a, const RationalMap& b);
RationalMap power(const RationalMap& a, int exponent);

/// z -> (a z + b) / (c z + d) with integer entries in canonical form.
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws InvalidArgument when ad - bc = 0.
  Mobius(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d);
  static Mobius from_rationals(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  static Mobius identity() { return Mobius(); }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }

  Mobius inverse() const;
  /// this(other(z)).
  Mobius after(const Mobius& other) const;
  RationalMap as_map() const;
  Place apply(const Place& p) const;

  std::string to_string() const;
  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  mpz_class a_, b_, c_, d_;
};

/// left ∘ A ∘ right.
RationalMap mobius_conjugate(const RationalMap& A, const Mobius& left, const Mobius& right);

/// Image of a finite point or infinity.
Place evaluate(const RationalMap& A, const Place& p);
/// Image of any place as a sorted list of places (an algebraic class may map
/// onto several places when its defining polynomial is reducible).
std::vector<Place> image_places(const RationalMap& A, const Place& p);

/// Multiplicity with which A takes its value at p. Throws InvalidArgument
/// when p is an algebraic class on which the local degree is not constant.
int local_degree(const RationalMap& A, const Place& p);

/// Preimage of v with local degrees, sorted by place. Sizes weighted by
/// Place::size sum to deg A times the size of v.
std::vector<std::pair<Place, int>> fiber(const RationalMap& A, const Place& v);

/// Critical values, sorted by place order. Degree-1 maps have none.
std::vector<Place> critical_values(const RationalMap& A);

struct PassportEntry {
  Place value;
  std::vector<int> partition;  // descending
  int nu() const;

  friend bool operator==(const PassportEntry&, const PassportEntry&) = default;
};

/// Branch data over every critical value in the canonical order: ν of the
/// fiber descending, then partition descending, then place order.
struct Passport {
  int degree = 0;
  std::vector<PassportEntry> entries;

  /// Sorted multiset of partitions, each conjugate point counted separately.
  std::vector<std::vector<int>> partition_multiset() const;
  std::string to_string() const;

  friend bool operator==(const Passport&, const Passport&) = default;
};

Passport passport(const RationalMap& A);

}  // namespace rgenus
