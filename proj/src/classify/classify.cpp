#include "rgenus/classify.hpp"

#include <algorithm>

#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

Signature signature_of(const Passport& p) {
  Signature s;
  for (const auto& e : p.entries)
    for (int i = 0; i < e.value.size(); ++i) s.push_back(e.nu());
  std::sort(s.begin(), s.end());
  return s;
}

Mobius mobius_of(const RationalMap& A) {
  return Mobius::from_rationals(A.num().coeff(1), A.num().coeff(0), A.den().coeff(1), A.den().coeff(0));
}

/// Sends a to 0 and b to infinity.
Mobius sending(const Place& a, const Place& b) {
  if (a.is_infinity()) return Mobius::from_rationals(0, 1, 1, -b.value());
  if (b.is_infinity()) return Mobius::from_rationals(1, -a.value(), 0, 1);
  return Mobius::from_rationals(1, -a.value(), 1, -b.value());
}

struct AnchorPoint {
  Place point, value;
  int local_degree;
};

/// Rational critical values with their partitions, and the rational points
/// above them. Both are preserved by equivalence over Q.
struct Anchors {
  Passport passport;
  std::vector<std::pair<Place, std::vector<int>>> values;
  std::vector<AnchorPoint> points;

  explicit Anchors(const RationalMap& A) : passport(rgenus::passport(A)) {
    for (const auto& e : passport.entries) {
      if (e.value.is_algebraic()) continue;
      values.emplace_back(e.value, e.partition);
      for (const auto& [z, k] : fiber(A, e.value))
        if (!z.is_algebraic()) points.push_back({z, e.value, k});
    }
  }
  bool enough() const { return values.size() >= 2 && points.size() >= 2; }
  const std::vector<int>& partition(const Place& v) const {
    for (const auto& [w, part] : values)
      if (w == v) return part;
    throw InvariantViolation("anchor value without a partition");
  }
};

std::vector<std::pair<int, Rational>> power_constraints(const UniPoly& x1, const UniPoly& x2) {
  std::vector<std::pair<int, Rational>> out;
  int prev = -1;
  for (int j = 0; j <= x1.degree(); ++j) {
    if (x1.coeff(j).is_zero()) continue;
    if (prev >= 0)
      out.emplace_back(j - prev, (x1.coeff(j) * x2.coeff(prev)) / (x1.coeff(prev) * x2.coeff(j)));
    prev = j;
  }
  return out;
}

bool same_support(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i).is_zero() != b.coeff(i).is_zero()) return false;
  return true;
}

int lowest(const UniPoly& p) {
  int i = 0;
  while (p.coeff(i).is_zero()) ++i;
  return i;
}

/// Rational (kappa, lambda) with B1(z) = kappa B2(lambda z); several lambdas
/// may pass the coefficient test, verification happens by the caller.
std::vector<std::pair<Rational, Rational>> scalings(const RationalMap& B1, const RationalMap& B2) {
  const UniPoly &n1 = B1.num(), &d1 = B1.den(), &n2 = B2.num(), &d2 = B2.den();
  if (!same_support(n1, n2) || !same_support(d1, d2)) return {};
  auto cons = power_constraints(n1, n2);
  for (auto& c : power_constraints(d1, d2)) cons.push_back(c);
  std::vector<Rational> lambdas;
  if (cons.empty()) {
    lambdas.push_back(1);
  } else {
    auto [k, r] = cons.front();
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[0] = -r;
    c[static_cast<std::size_t>(k)] = 1;
    for (const auto& [x, m] : rational_roots(UniPoly(c))) {
      bool ok = true;
      for (const auto& [e, s] : cons) ok = ok && x.pow(e) == s;
      if (ok) lambdas.push_back(x);
    }
  }
  std::vector<std::pair<Rational, Rational>> out;
  const int i = lowest(n1), k = lowest(d1);
  for (const auto& lambda : lambdas) {
    Rational kappa = (n1.coeff(i) / d1.coeff(k)) * (d2.coeff(k) / n2.coeff(i)) * lambda.pow(k - i);
    out.emplace_back(kappa, lambda);
  }
  return out;
}

std::optional<std::pair<Mobius, Mobius>> equivalent(const RationalMap& A1, const Anchors& a1, const RationalMap& A2,
                                                    const Anchors& a2) {
  if (a1.passport.partition_multiset() != a2.passport.partition_multiset()) return std::nullopt;
  if (a1.values.size() != a2.values.size() || a1.points.size() != a2.points.size()) return std::nullopt;
  if (!a1.enough()) throw Unsupported("too few rational anchors to decide equivalence");

  const Place &v0 = a1.values[0].first, &vi = a1.values[1].first;
  const AnchorPoint &p0 = a1.points[0], &pi = a1.points[1];
  const Mobius sv1 = sending(v0, vi), sp1 = sending(p0.point, pi.point);
  const RationalMap B1 = mobius_conjugate(A1, sv1, sp1.inverse());

  // Where a point lies relative to the two chosen values.
  auto slot = [](const Place& v, const Place& w0, const Place& wi) { return v == w0 ? 0 : v == wi ? 1 : 2; };

  for (const auto& [w0, part0] : a2.values) {
    if (part0 != a1.values[0].second) continue;
    for (const auto& [wi, parti] : a2.values) {
      if (wi == w0 || parti != a1.values[1].second) continue;
      const Mobius sv2 = sending(w0, wi);
      auto fits = [&](const AnchorPoint& q, const AnchorPoint& p) {
        return q.local_degree == p.local_degree && slot(q.value, w0, wi) == slot(p.value, v0, vi) &&
               a2.partition(q.value) == a1.partition(p.value);
      };
      for (const auto& q0 : a2.points) {
        if (!fits(q0, p0)) continue;
        for (const auto& qi : a2.points) {
          if (qi.point == q0.point || !fits(qi, pi)) continue;
          const Mobius sq2 = sending(q0.point, qi.point);
          const RationalMap B2 = mobius_conjugate(A2, sv2, sq2.inverse());
          for (const auto& [kappa, lambda] : scalings(B1, B2)) {
            Mobius left = sv1.inverse().after(Mobius::from_rationals(kappa, 0, 0, 1)).after(sv2);
            Mobius right = sq2.inverse().after(Mobius::from_rationals(lambda, 0, 0, 1)).after(sp1);
            if (mobius_conjugate(A2, left, right) == A1) return std::pair{left, right};
          }
        }
      }
    }
  }
  return std::nullopt;
}

void require_nonconstant(const RationalMap& A) {
  if (A.degree() < 1) throw InvalidArgument("constant map");
}

}  // namespace

std::string to_string(GenusClass g) {
  switch (g) {
    case GenusClass::Zero: return "zero";
    case GenusClass::One: return "one";
    case GenusClass::Higher: return "higher";
  }
  return "";
}

GenusClass genus_class(const RationalMap& A) {
  require_nonconstant(A);
  if (A.degree() == 1) return GenusClass::Zero;
  const int s = euler_char(signature_of(passport(A))).sign();
  return s > 0 ? GenusClass::Zero : s == 0 ? GenusClass::One : GenusClass::Higher;
}

int belyi_preimage_count(const RationalMap& A) {
  require_nonconstant(A);
  int count = 0;
  for (const Place& v : {Place::finite(0), Place::finite(1), Place::infinity()})
    for (const auto& [z, k] : fiber(A, v)) count += z.size();
  return count;
}

bool is_belyi(const RationalMap& A) {
  bool by_values = true;
  for (const auto& v : critical_values(A))
    by_values = by_values && (v.is_infinity() || (v.is_finite() && (v.value() == 0 || v.value() == 1)));
  const bool by_count = belyi_preimage_count(A) == A.degree() + 2;
  if (by_values != by_count) throw InvariantViolation("Belyi preimage count disagrees with critical values");
  return by_values;
}

std::optional<std::pair<Mobius, Mobius>> mu_equivalent(const RationalMap& A1, const RationalMap& A2) {
  require_nonconstant(A1);
  require_nonconstant(A2);
  if (A1.degree() != A2.degree()) return std::nullopt;
  if (A1.degree() == 1) return std::pair{mobius_of(A1).after(mobius_of(A2).inverse()), Mobius::identity()};
  return equivalent(A1, Anchors(A1), A2, Anchors(A2));
}

std::vector<CatalogMatch> catalog_match(const RationalMap& A) {
  if (genus_class(A) != GenusClass::Zero) throw InvalidArgument("catalog_match needs a genus zero map");
  const int d = A.degree();
  std::vector<CatalogEntry> candidates;
  for (const auto& e : catalog())
    if (e.map.degree() == d) candidates.push_back(e);
  candidates.push_back(family_entry("cyclic", d));
  if (d >= 2) candidates.push_back(family_entry("chebyshev", d));
  if (d % 2 == 0 && d >= 4) candidates.push_back(family_entry("dihedral_half", d / 2));

  std::vector<CatalogMatch> out;
  bool undecided = false;
  if (d == 1) {
    auto w = mu_equivalent(A, candidates.back().map);
    out.push_back({candidates.back(), w->first, w->second});
    return out;
  }
  const Anchors mine(A);
  for (const auto& e : candidates) {
    try {
      if (auto w = equivalent(A, mine, e.map, Anchors(e.map))) out.push_back({e, w->first, w->second});
    } catch (const Unsupported&) {
      undecided = true;
    }
  }
  if (out.empty()) {
    if (undecided) throw Unsupported("no catalog member could be matched over Q for " + A.to_string());
    throw NoMatch("no catalog member is equivalent to " + A.to_string());
  }
  return out;
}

bool verify_decomposition(const RationalMap& F, const std::vector<RationalMap>& parts) {
  if (parts.empty()) throw InvalidArgument("empty decomposition");
  return compose_all(parts) == F;
}

bool left_factor_constraint(const Signature& nu_theta, const Signature& nu_A) {
  Signature t = nu_theta, a = nu_A;
  std::sort(t.begin(), t.end());
  std::sort(a.begin(), a.end());
  if (euler_char(t).sign() <= 0 || t.size() < 2) throw InvalidArgument("left_factor_constraint needs a spherical signature");
  if (t == a) return true;
  auto sorted = [](Signature s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  if (t.size() == 2 && t[0] == t[1]) {
    const int n = t[0];
    return a.size() == 2 && a[0] == a[1] && a[0] >= 2 && n % a[0] == 0;
  }
  if (t == Signature{2, 3, 3}) return a == Signature{3, 3};
  if (t == Signature{2, 3, 4}) return a == Signature{2, 2, 3} || a == Signature{2, 2};
  if (t.size() == 3 && t[0] == 2 && t[1] == 2) {
    // {2, 2, n} with either 2 possibly being n itself when n = 2.
    const int n = t[2];
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Signature cand = d == 1 ? Signature{2, 2} : sorted({2, 2, d});
      if (a == cand) return true;
    }
  }
  return false;
}

}  // namespace rgenus
