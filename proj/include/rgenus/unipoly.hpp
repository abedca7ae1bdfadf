#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rgenus/rational.hpp"

namespace rgenus {

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// Trailing zero coefficients are always stripped, so two polynomials are
/// equal exactly when their coefficient lists are equal. The zero polynomial
/// has an empty list and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// The polynomial z.
  static UniPoly z();
  /// z - root.
  static UniPoly linear(const Rational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient of an exact division; throws InvariantViolation on a remainder.
  UniPoly exact_div(const UniPoly& divisor) const;
  UniPoly rem(const UniPoly& divisor) const { return divmod(divisor).second; }

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned exponent) const;
  /// this(inner(z)).
  UniPoly compose(const UniPoly& inner) const;
  /// z^deg * this(1/z) padded to the given degree.
  UniPoly reversed(int as_degree) const;
  Rational eval(const Rational& x) const;

  /// Integer primitive part with positive leading coefficient and the
  /// rational factor s with this = s * primitive.
  std::pair<Rational, UniPoly> primitive() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void strip();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b);

/// Monic squarefree parts g_k with a = lc(a) * prod g_k^k, in increasing k.
/// Throws ZeroPolynomial for a = 0.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a);

/// Product of the distinct monic irreducible factors of a (a nonzero).
UniPoly squarefree_part(const UniPoly& a);

/// Rational roots with multiplicities, sorted ascending. Throws ZeroPolynomial.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& a);

/// Multiplicity of x as a root of a (0 when a(x) != 0). a must be nonzero.
int root_multiplicity(const UniPoly& a, const Rational& x);

/// Characteristic polynomial of multiplication by (alpha mod modulus) on
/// Q[z]/(modulus). Its roots are alpha(r) over the roots r of the modulus.
UniPoly residue_charpoly(const UniPoly& alpha, const UniPoly& modulus);

/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// Total order: degree first, then coefficients from the top down.
bool poly_less(const UniPoly& a, const UniPoly& b);

}  // namespace rgenus
