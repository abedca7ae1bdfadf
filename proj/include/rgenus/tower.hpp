#pragma once

#include <exception>
#include <utility>
#include <variant>
#include <vector>

#include "rgenus/rational.hpp"
#include "rgenus/unipoly.hpp"

namespace rgenus {

/// An element of a level of a tower Q = K0 ⊂ K1 ⊂ K2.
///
/// Level 0 values use `leaf`. A level-k value (k >= 1) is a polynomial in the
/// level-k generator whose coefficients are level-(k-1) values, reduced
/// modulo the level's defining polynomial. The representation is canonical
/// for a fixed context, so the zero element is the empty coefficient list.
struct TowerValue {
  Rational leaf;
  std::vector<TowerValue> coeffs;

  friend bool operator==(const TowerValue&, const TowerValue&) = default;
};

/// Polynomial with coefficients in one level of a tower, lowest degree first.
using TowerPoly = std::vector<TowerValue>;

/// Thrown from inside tower arithmetic when a zero divisor is met at `level`:
/// the defining polynomial of that level factors as factor * cofactor, with
/// the offending element vanishing on the roots of `factor`.
struct TowerSplit : std::exception {
  int level = 0;
  TowerPoly factor;
  TowerPoly cofactor;
  const char* what() const noexcept override { return "tower context split on a zero divisor"; }
};

/// A tower context: an ordered list of squarefree monic defining polynomials,
/// each over the previous level. Depth is capped at two.
class Tower {
 public:
  static constexpr int kMaxDepth = 2;

  Tower() = default;
  /// Depth-1 context Q[t]/(defining). The polynomial must be squarefree.
  static Tower over_rationals(const UniPoly& defining);

  /// Adds a level; `defining` has coefficients in the current top level and
  /// is made monic. Throws DepthExceeded beyond depth 2 and InvalidArgument
  /// when the polynomial is not squarefree on some branch.
  Tower extend(const TowerPoly& defining) const;

  int depth() const { return static_cast<int>(defining_.size()); }
  /// Defining polynomial of `level` (1-based), coefficients at level-1.
  const TowerPoly& defining(int level) const { return defining_.at(static_cast<std::size_t>(level - 1)); }
  /// Level-1 defining polynomial as a rational polynomial.
  UniPoly base_polynomial() const;

  /// Replaces the defining polynomial of `level` by `factor` and re-reduces
  /// every level above it.
  Tower refine(int level, const TowerPoly& factor) const;

  // Element arithmetic at a level (0 is Q).
  TowerValue zero() const { return {}; }
  TowerValue from_rational(const Rational& r, int level) const;
  TowerValue generator(int level) const;
  TowerValue add(const TowerValue& a, const TowerValue& b, int level) const;
  TowerValue sub(const TowerValue& a, const TowerValue& b, int level) const;
  TowerValue neg(const TowerValue& a, int level) const;
  TowerValue mul(const TowerValue& a, const TowerValue& b, int level) const;
  bool is_zero(const TowerValue& a, int level) const;
  /// Throws DivisionByZero when a is zero, TowerSplit on a zero divisor.
  TowerValue inverse(const TowerValue& a, int level) const;
  /// Canonical form of a value that may not be reduced in this context.
  TowerValue normalize(const TowerValue& a, int level) const;
  /// Embeds a rational polynomial in the level-1 generator as a level-1 value.
  TowerValue from_base_poly(const UniPoly& p) const;

  // Polynomials over a level.
  TowerPoly padd(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly psub(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pmul(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pscale(const TowerPoly& a, const TowerValue& s, int level) const;
  TowerPoly pderiv(const TowerPoly& a, int level) const;
  TowerPoly pmonic(const TowerPoly& a, int level) const;
  std::pair<TowerPoly, TowerPoly> pdivmod(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pexact_div(const TowerPoly& a, const TowerPoly& b, int level) const;
  /// Monic gcd over the level (may throw TowerSplit).
  TowerPoly pgcd(const TowerPoly& a, const TowerPoly& b, int level) const;
  TowerPoly pnormalize(const TowerPoly& a, int level) const;
  static int pdegree(const TowerPoly& a) { return static_cast<int>(a.size()) - 1; }

  friend bool operator==(const Tower&, const Tower&) = default;

 private:
  void pstrip(TowerPoly& a, int level) const;
  TowerValue reduce(TowerPoly p, int level) const;
  std::vector<TowerPoly> defining_;
};

/// Element bound to its tower context.
struct TowerElement {
  Tower context;
  int level = 0;
  TowerValue value;

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator*(const TowerElement& o) const;
  bool is_zero() const { return context.is_zero(value, level); }
  friend bool operator==(const TowerElement&, const TowerElement&) = default;
};

/// Result of an inversion that met a zero divisor: two refined contexts at
/// `level`; the triggering element vanishes on `vanishing` and is a unit on
/// `nonvanishing`. The product of their defining polynomials at `level` is
/// the original one.
struct Split {
  int level = 0;
  Tower vanishing;
  Tower nonvanishing;
};

/// Multiplicative inverse, or the split that makes it computable branchwise.
/// Throws DivisionByZero when x is zero on every branch.
std::variant<TowerElement, Split> tower_invert(const TowerElement& x);

/// Element `x` re-expressed in a refinement of its context.
TowerElement project(const TowerElement& x, const Tower& refined);

/// Runs fn(context) and, whenever it signals a split, re-runs it on both
/// refined contexts. Returns one (context, result) pair per final branch, in
/// a deterministic order (vanishing branch first).
template <class Fn>
auto for_each_branch(const Tower& context, Fn&& fn) -> std::vector<std::pair<Tower, decltype(fn(context))>> {
  using Result = decltype(fn(context));
  std::vector<std::pair<Tower, Result>> out;
  try {
    out.emplace_back(context, fn(context));
  } catch (const TowerSplit& s) {
    for (const auto* part : {&s.factor, &s.cofactor}) {
      auto sub = for_each_branch(context.refine(s.level, *part), fn);
      for (auto& entry : sub) out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace rgenus
