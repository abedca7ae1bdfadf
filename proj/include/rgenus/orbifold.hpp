#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgenus/place.hpp"
#include "rgenus/ratmap.hpp"
#include "rgenus/rational.hpp"

namespace rgenus {

/// Multiset of ramification indices > 1, sorted ascending.
using Signature = std::vector<int>;

/// The sphere with a ramification function ν, equal to 1 off a finite set.
///
/// Canonical form: entries sorted by place, ν >= 2, and all algebraic points
/// sharing a value of ν gathered into a single class. Two orbifolds are
/// therefore equal exactly when their ramification functions agree.
class Orbifold {
 public:
  Orbifold() = default;
  /// Entries with ν = 1 are dropped. Throws InvalidArgument on ν < 1 or on
  /// places that are not pairwise disjoint.
  explicit Orbifold(const std::vector<std::pair<Place, int>>& entries);

  const std::vector<std::pair<Place, int>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::vector<Place> support() const;

  /// ν at a place; throws InvalidArgument if ν is not constant on the
  /// points of an algebraic class.
  int nu(const Place& p) const;

  Signature signature() const;
  std::string to_string() const;

  friend bool operator==(const Orbifold&, const Orbifold&) = default;

 private:
  std::vector<std::pair<Place, int>> entries_;
};

Rational euler_char(const Signature& s);
Rational euler_char(const Orbifold& o);

/// ν_a divides ν_b everywhere.
bool leq(const Orbifold& a, const Orbifold& b);

/// Splits a list of places into pairwise disjoint pieces such that every
/// input place is a union of pieces. Output is sorted.
std::vector<Place> refine_places(const std::vector<Place>& places);

/// (O1, O2) for A: O2 takes the lcm of local degrees over each critical
/// value, O1 = ν2(A(z)) / deg_z A where that exceeds 1.
std::pair<Orbifold, Orbifold> ramification_orbifolds(const RationalMap& A);

struct CoveringFailure {
  Place place;
  int nu2 = 1;
  int nu1 = 1;
  int local_degree = 1;
};

struct CoveringResult {
  bool ok = true;
  std::optional<CoveringFailure> witness;
  explicit operator bool() const { return ok; }
};

/// Checks ν2(A(z)) = ν1(z) deg_z A at every point of the sphere.
CoveringResult is_covering(const RationalMap& A, const Orbifold& o1, const Orbifold& o2);

/// The o1 making A: o1 -> o2 a covering. Throws NotDominating when some
/// local degree over a point does not divide ν2 there.
Orbifold pullback_orbifold(const RationalMap& A, const Orbifold& o2);

/// χ(o1) = deg A · χ(o2).
bool rh_check(const RationalMap& A, const Orbifold& o1, const Orbifold& o2);

}  // namespace rgenus
