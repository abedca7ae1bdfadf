#include "rgenus/ratmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rgenus/errors.hpp"
#include "rgenus/tower.hpp"

namespace rgenus {

namespace {

UniPoly wronskian(const RationalMap& A) {
  return A.num().derivative() * A.den() - A.num() * A.den().derivative();
}

/// A(1/z), as a map whose local structure at 0 is that of A at infinity.
RationalMap flip(const RationalMap& A) {
  const int d = A.degree();
  return make_map(A.num().reversed(d), A.den().reversed(d));
}

/// Places for the roots of a nonzero squarefree polynomial: rational roots
/// become finite places, the rest (if any) one algebraic class.
std::vector<Place> root_places(const UniPoly& g) {
  std::vector<Place> out;
  if (g.degree() < 1) return out;
  UniPoly rest = g.monic();
  for (const auto& [r, k] : rational_roots(rest)) {
    out.push_back(Place::finite(r));
    rest = rest.exact_div(UniPoly::linear(r));
  }
  if (rest.degree() >= 1) out.push_back(Place::algebraic(rest));
  return out;
}

/// Places for the values of A on the roots of g, assuming Q is a unit mod g.
std::vector<Place> pushforward(const RationalMap& A, const UniPoly& g) {
  if (g.degree() < 1) return {};
  const UniPoly alpha = (A.num() * inverse_mod(A.den(), g)).rem(g);
  return root_places(squarefree_part(residue_charpoly(alpha, g)));
}

void sort_unique(std::vector<Place>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Adds the parts of a squarefree decomposition to a fiber list.
void add_parts(std::vector<std::pair<Place, int>>& out, const UniPoly& f) {
  for (const auto& [g, k] : squarefree_decomposition(f))
    for (auto& p : root_places(g)) out.emplace_back(std::move(p), k);
}

/// Σ h_j P^j Q^(m-j): vanishes exactly on the preimage of the roots of h.
UniPoly class_preimage(const RationalMap& A, const UniPoly& h) {
  const int m = h.degree();
  std::vector<UniPoly> pp{UniPoly::constant(1)}, qp{UniPoly::constant(1)};
  for (int i = 1; i <= m; ++i) {
    pp.push_back(pp.back() * A.num());
    qp.push_back(qp.back() * A.den());
  }
  UniPoly out;
  for (int j = 0; j <= m; ++j) {
    const Rational& c = h.coeffs()[static_cast<std::size_t>(j)];
    if (!c.is_zero()) out += c * (pp[static_cast<std::size_t>(j)] * qp[static_cast<std::size_t>(m - j)]);
  }
  return out;
}

/// Multiset of local degrees over every root of h, assuming it is the same
/// for each root on the branch; computed by Yun's algorithm over Q[w]/h.
std::vector<int> branch_partition(const RationalMap& A, const Tower& t) {
  constexpr int L = 1;
  const int d = A.degree();
  TowerPoly f;
  for (int i = 0; i <= d; ++i) f.push_back(t.from_base_poly(UniPoly{A.num().coeff(i), -A.den().coeff(i)}));
  f = t.pnormalize(f, L);
  std::vector<int> parts;
  TowerPoly fd = t.pderiv(f, L);
  TowerPoly a0 = t.pgcd(f, fd, L);
  TowerPoly b = t.pexact_div(f, a0, L);
  TowerPoly c = t.pexact_div(fd, a0, L);
  TowerPoly dd = t.psub(c, t.pderiv(b, L), L);
  for (int i = 1; Tower::pdegree(b) > 0; ++i) {
    TowerPoly a = t.pgcd(b, dd, L);
    for (int j = 0; j < Tower::pdegree(a); ++j) parts.push_back(i);
    b = t.pexact_div(b, a, L);
    c = t.pexact_div(dd, a, L);
    dd = t.psub(c, t.pderiv(b, L), L);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalMap

RationalMap::RationalMap() : num_(UniPoly::z()), den_(UniPoly::constant(1)) {}

RationalMap RationalMap::scaled(UniPoly num, UniPoly den) {
  mpz_class l = 1, g = 0;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) {
      mpz_class v = c.num() * (l / c.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  Rational s(l, g);
  if (den.leading().sign() < 0) s = -s;
  num *= s;
  den *= s;
  return RationalMap(std::move(num), std::move(den));
}

RationalMap make_map(const UniPoly& num, const UniPoly& den) {
  if (num.is_zero() && den.is_zero()) throw ZeroOverZero();
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalMap(UniPoly{}, UniPoly::constant(1));
  UniPoly g = poly_gcd(num, den);
  if (g.degree() == 0) return RationalMap::scaled(num, den);
  return RationalMap::scaled(num.exact_div(g), den.exact_div(g));
}

RationalMap make_map(const UniPoly& poly) { return make_map(poly, UniPoly::constant(1)); }
RationalMap constant_map(const Rational& c) { return make_map(UniPoly::constant(c)); }

std::string RationalMap::to_string() const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const int m = outer.degree();
  std::vector<UniPoly> rp{UniPoly::constant(1)}, sp{UniPoly::constant(1)};
  for (int i = 1; i <= m; ++i) {
    rp.push_back(rp.back() * inner.num());
    sp.push_back(sp.back() * inner.den());
  }
  UniPoly num, den;
  for (int i = 0; i <= m; ++i) {
    UniPoly term = rp[static_cast<std::size_t>(i)] * sp[static_cast<std::size_t>(m - i)];
    const Rational p = outer.num().coeff(i), q = outer.den().coeff(i);
    if (!p.is_zero()) num += p * term;
    if (!q.is_zero()) den += q * term;
  }
  // Composition of coprime pairs stays coprime unless something is constant.
  if (m == 0 || inner.degree() == 0) return make_map(num, den);
  return RationalMap::scaled(std::move(num), std::move(den));
}

RationalMap compose_all(const std::vector<RationalMap>& parts) {
  if (parts.empty()) throw InvalidArgument("empty composition");
  RationalMap out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = compose(*it, out);
  return out;
}

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
  return make_map(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) {
  return make_map(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalMap operator-(const RationalMap& a) { return make_map(-a.num(), a.den()); }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  return make_map(a.num() * b.num(), a.den() * b.den());
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  if (b.num().is_zero()) throw DivisionByZero();
  return make_map(a.num() * b.den(), a.den() * b.num());
}

RationalMap power(const RationalMap& a, int exponent) {
  const auto e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  if (exponent < 0) {
    if (a.num().is_zero()) throw DivisionByZero();
    return make_map(a.den().pow(e), a.num().pow(e));
  }
  return make_map(a.num().pow(e), a.den().pow(e));
}

// ---------------------------------------------------------------------------
// Mobius

Mobius::Mobius(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c == 0) throw InvalidArgument("degenerate Mobius transformation");
  mpz_class g = 0;
  for (const auto* x : {&a_, &b_, &c_, &d_}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_mpz_t());
  for (const auto* x : {&a_, &b_, &c_, &d_})
    if (*x != 0) {
      if (*x < 0) g = -g;
      break;
    }
  for (auto* x : {&a_, &b_, &c_, &d_}) mpz_divexact(x->get_mpz_t(), x->get_mpz_t(), g.get_mpz_t());
}

Mobius Mobius::from_rationals(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  mpz_class l = 1;
  for (const auto* x : {&a, &b, &c, &d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->den().get_mpz_t());
  auto scale = [&](const Rational& x) { return mpz_class(x.num() * (l / x.den())); };
  return Mobius(scale(a), scale(b), scale(c), scale(d));
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

Mobius Mobius::after(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

RationalMap Mobius::as_map() const {
  return make_map(UniPoly{Rational(b_), Rational(a_)}, UniPoly{Rational(d_), Rational(c_)});
}

Place Mobius::apply(const Place& p) const {
  if (p.is_infinity()) return c_ == 0 ? Place::infinity() : Place::finite(Rational(a_, c_));
  if (p.is_finite()) {
    Rational den = Rational(c_) * p.value() + Rational(d_);
    if (den.is_zero()) return Place::infinity();
    return Place::finite((Rational(a_) * p.value() + Rational(b_)) / den);
  }
  // Roots y = μ(r) satisfy g((d y - b)/(a - c y)) = 0.
  const UniPoly& g = p.minpoly();
  const int m = g.degree();
  const UniPoly top{Rational(mpz_class(-b_)), Rational(d_)}, bottom{Rational(a_), Rational(mpz_class(-c_))};
  UniPoly out;
  for (int i = 0; i <= m; ++i) {
    const Rational& c = g.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) out += c * (top.pow(static_cast<unsigned>(i)) * bottom.pow(static_cast<unsigned>(m - i)));
  }
  return Place::algebraic(out.monic());
}

std::string Mobius::to_string() const { return as_map().to_string(); }

RationalMap mobius_conjugate(const RationalMap& A, const Mobius& left, const Mobius& right) {
  return compose(compose(left.as_map(), A), right.as_map());
}

// ---------------------------------------------------------------------------
// Local structure

Place evaluate(const RationalMap& A, const Place& p) {
  const UniPoly &P = A.num(), &Q = A.den();
  if (p.is_infinity()) {
    if (P.degree() > Q.degree()) return Place::infinity();
    if (P.degree() < Q.degree()) return Place::finite(0);
    return Place::finite(P.leading() / Q.leading());
  }
  if (p.is_algebraic()) throw InvalidArgument("evaluate needs a rational point; use image_places");
  Rational q = Q.eval(p.value());
  if (q.is_zero()) return Place::infinity();
  return Place::finite(P.eval(p.value()) / q);
}

std::vector<Place> image_places(const RationalMap& A, const Place& p) {
  if (!p.is_algebraic()) return {evaluate(A, p)};
  std::vector<Place> out;
  UniPoly g = p.minpoly();
  UniPoly gq = poly_gcd(g, A.den());
  if (gq.degree() > 0) {
    out.push_back(Place::infinity());
    g = g.exact_div(gq);
  }
  for (auto& v : pushforward(A, g)) out.push_back(std::move(v));
  sort_unique(out);
  return out;
}

int local_degree(const RationalMap& A, const Place& p) {
  if (A.degree() < 1) throw InvalidArgument("local degree of a constant map");
  if (p.is_infinity()) return local_degree(flip(A), Place::finite(0));
  const UniPoly w = wronskian(A);
  if (p.is_finite()) return 1 + root_multiplicity(w, p.value());
  const UniPoly& g = p.minpoly();
  UniPoly r = w;
  int k = 0;
  for (;;) {
    auto [q, rem] = r.divmod(g);
    if (!rem.is_zero()) break;
    r = std::move(q);
    ++k;
  }
  if (poly_gcd(r, g).degree() > 0) throw InvalidArgument("local degree is not constant on this class");
  return 1 + k;
}

std::vector<std::pair<Place, int>> fiber(const RationalMap& A, const Place& v) {
  std::vector<std::pair<Place, int>> out;
  const UniPoly &P = A.num(), &Q = A.den();
  const int d = A.degree();
  if (d < 1) throw InvalidArgument("fiber of a constant map");
  if (v.is_algebraic()) {
    add_parts(out, class_preimage(A, v.minpoly()));
  } else {
    const UniPoly f = v.is_infinity() ? Q : P - v.value() * Q;
    add_parts(out, f);
    if (f.degree() < d) out.emplace_back(Place::infinity(), d - f.degree());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Place> critical_values(const RationalMap& A) {
  std::vector<Place> out;
  if (A.degree() < 2) return out;
  const UniPoly &P = A.num(), &Q = A.den();
  const UniPoly w = wronskian(A);
  if (w.degree() > 0) {
    UniPoly g = squarefree_part(w);
    std::vector<Rational> candidates{0, 1, -1};
    for (const auto& [r, k] : rational_roots(g)) {
      Place v = evaluate(A, Place::finite(r));
      if (v.is_finite()) candidates.push_back(v.value());
      out.push_back(std::move(v));
      g = g.exact_div(UniPoly::linear(r));
    }
    UniPoly gq = poly_gcd(g, Q);
    if (gq.degree() > 0) {
      out.push_back(Place::infinity());
      g = g.exact_div(gq);
    }
    // Peel off points over values we can name before taking a charpoly.
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      if (g.degree() < 1) break;
      UniPoly gc = poly_gcd(g, P - c * Q);
      if (gc.degree() > 0) {
        out.push_back(Place::finite(c));
        g = g.exact_div(gc);
      }
    }
    for (auto& v : pushforward(A, g)) out.push_back(std::move(v));
  }
  if (local_degree(A, Place::infinity()) > 1) out.push_back(evaluate(A, Place::infinity()));
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------
// Passport

int PassportEntry::nu() const {
  int l = 1;
  for (int k : partition) l = std::lcm(l, k);
  return l;
}

std::vector<std::vector<int>> Passport::partition_multiset() const {
  std::vector<std::vector<int>> out;
  for (const auto& e : entries)
    for (int i = 0; i < e.value.size(); ++i) out.push_back(e.partition);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Passport::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << "{";
    for (std::size_t j = 0; j < entries[i].partition.size(); ++j) os << (j ? "," : "") << entries[i].partition[j];
    os << "}_" << entries[i].value.to_string();
  }
  os << ")";
  return os.str();
}

Passport passport(const RationalMap& A) {
  Passport out;
  out.degree = A.degree();
  for (const auto& v : critical_values(A)) {
    if (!v.is_algebraic()) {
      std::vector<int> parts;
      for (const auto& [p, k] : fiber(A, v))
        for (int i = 0; i < p.size(); ++i) parts.push_back(k);
      std::sort(parts.rbegin(), parts.rend());
      out.entries.push_back({v, std::move(parts)});
      continue;
    }
    auto branches = for_each_branch(Tower::over_rationals(v.minpoly()),
                                    [&](const Tower& t) { return branch_partition(A, t); });
    // Merge branches with equal branch data so the output does not depend on
    // the order in which zero divisors were met.
    std::vector<std::pair<std::vector<int>, UniPoly>> merged;
    for (const auto& [t, parts] : branches) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first == parts; });
      if (it == merged.end()) merged.emplace_back(parts, t.base_polynomial());
      else it->second = it->second * t.base_polynomial();
    }
    for (auto& [parts, h] : merged) out.entries.push_back({Place::algebraic(h), std::move(parts)});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const PassportEntry& a, const PassportEntry& b) {
    if (a.nu() != b.nu()) return a.nu() > b.nu();
    if (a.partition != b.partition) return a.partition > b.partition;
    return a.value < b.value;
  });
  return out;
}

}  // namespace rgenus
