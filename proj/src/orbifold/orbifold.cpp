#include "rgenus/orbifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

/// Pieces of p, each inside one support class of o or disjoint from all.
std::vector<Place> split_against(const Place& p, const Orbifold& o) {
  if (!p.is_algebraic()) return {p};
  std::vector<Place> out;
  UniPoly rest = p.minpoly();
  for (const auto& [q, nu] : o.entries()) {
    if (!q.is_algebraic()) continue;
    UniPoly c = poly_gcd(rest, q.minpoly());
    if (c.degree() < 1) continue;
    out.push_back(Place::algebraic(c));
    rest = rest.exact_div(c);
  }
  if (rest.degree() >= 1) out.push_back(Place::algebraic(rest));
  return out;
}

/// Values whose fibers can carry ramification of either kind.
std::vector<Place> check_values(const Orbifold& o2, const std::vector<Place>& critical) {
  std::vector<Place> v = o2.support();
  v.insert(v.end(), critical.begin(), critical.end());
  return refine_places(v);
}

Orbifold pullback_over(const RationalMap& A, const Orbifold& o2, const std::vector<Place>& critical) {
  std::vector<std::pair<Place, int>> out;
  for (const auto& v : check_values(o2, critical)) {
    const int nu2 = o2.nu(v);
    for (const auto& [z, k] : fiber(A, v)) {
      if (nu2 % k != 0)
        throw NotDominating("local degree " + std::to_string(k) + " over " + v.to_string() +
                            " does not divide " + std::to_string(nu2));
      if (nu2 / k > 1) out.emplace_back(z, nu2 / k);
    }
  }
  return Orbifold(out);
}

}  // namespace

Orbifold::Orbifold(const std::vector<std::pair<Place, int>>& entries) {
  std::map<int, UniPoly> classes;
  std::vector<Place> places;
  for (const auto& [p, nu] : entries) {
    if (nu < 1) throw InvalidArgument("ramification index must be positive");
    places.push_back(p);
    if (nu == 1) continue;
    if (p.is_algebraic()) {
      auto [it, fresh] = classes.try_emplace(nu, p.minpoly());
      if (!fresh) it->second = it->second * p.minpoly();
    } else {
      entries_.emplace_back(p, nu);
    }
  }
  // Disjointness: refinement of pairwise disjoint places keeps their count
  // of points.
  int points = 0, refined = 0;
  for (const auto& p : places) points += p.size();
  for (const auto& p : refine_places(places)) refined += p.size();
  if (points != refined) throw InvalidArgument("orbifold places overlap");
  for (const auto& [nu, h] : classes) entries_.emplace_back(Place::algebraic(h), nu);
  std::sort(entries_.begin(), entries_.end());
}

std::vector<Place> Orbifold::support() const {
  std::vector<Place> out;
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

int Orbifold::nu(const Place& p) const {
  for (const auto& [q, n] : entries_) {
    if (!p.is_algebraic() || !q.is_algebraic()) {
      if (p == q) return n;
      continue;
    }
    UniPoly c = poly_gcd(p.minpoly(), q.minpoly());
    if (c.degree() < 1) continue;
    if (c.degree() != p.minpoly().degree()) throw InvalidArgument("ramification is not constant on " + p.to_string());
    return n;
  }
  return 1;
}

Signature Orbifold::signature() const {
  Signature s;
  for (const auto& [p, n] : entries_)
    for (int i = 0; i < p.size(); ++i) s.push_back(n);
  std::sort(s.begin(), s.end());
  return s;
}

std::string Orbifold::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i)
    os << (i ? ", " : "") << "{" << entries_[i].second << "}_" << entries_[i].first.to_string();
  os << ")";
  return os.str();
}

Rational euler_char(const Signature& s) {
  Rational chi = 2;
  for (int n : s) chi += Rational(mpz_class(1), mpz_class(n)) - Rational(1);
  return chi;
}

Rational euler_char(const Orbifold& o) { return euler_char(o.signature()); }

bool leq(const Orbifold& a, const Orbifold& b) {
  std::vector<Place> all = a.support();
  for (auto& p : b.support()) all.push_back(std::move(p));
  for (const auto& p : refine_places(all))
    if (b.nu(p) % a.nu(p) != 0) return false;
  return true;
}

std::vector<Place> refine_places(const std::vector<Place>& places) {
  std::vector<Place> out;
  std::vector<UniPoly> pieces;
  for (const auto& p : places) {
    if (!p.is_algebraic()) {
      out.push_back(p);
      continue;
    }
    UniPoly rest = p.minpoly();
    std::vector<UniPoly> next;
    for (const auto& q : pieces) {
      UniPoly c = poly_gcd(rest, q);
      if (c.degree() < 1) {
        next.push_back(q);
        continue;
      }
      next.push_back(c);
      UniPoly other = q.exact_div(c);
      if (other.degree() >= 1) next.push_back(std::move(other));
      rest = rest.exact_div(c);
    }
    if (rest.degree() >= 1) next.push_back(rest.monic());
    pieces = std::move(next);
  }
  for (const auto& g : pieces) out.push_back(Place::algebraic(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Orbifold, Orbifold> ramification_orbifolds(const RationalMap& A) {
  std::vector<std::pair<Place, int>> o2;
  for (const auto& e : passport(A).entries)
    if (e.nu() > 1) o2.emplace_back(e.value, e.nu());
  Orbifold orb2(o2);
  return {pullback_over(A, orb2, orb2.support()), orb2};
}

CoveringResult is_covering(const RationalMap& A, const Orbifold& o1, const Orbifold& o2) {
  std::vector<Place> seen;
  std::vector<Place> values = check_values(o2, critical_values(A));
  // Declared points first, so the witness names them when they are at fault.
  std::stable_partition(values.begin(), values.end(), [&](const Place& v) { return o2.nu(v) > 1; });
  for (const auto& v : values) {
    const int nu2 = o2.nu(v);
    for (const auto& [z, k] : fiber(A, v)) {
      seen.push_back(z);
      for (const auto& piece : split_against(z, o1)) {
        const int nu1 = o1.nu(piece);
        if (nu2 != nu1 * k) return {false, CoveringFailure{piece, nu2, nu1, k}};
      }
    }
  }
  // Ramified source points outside the fibers above map to unramified,
  // non-critical values, where the condition fails.
  for (const auto& [p, nu1] : o1.entries()) {
    if (!p.is_algebraic()) {
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) return {false, CoveringFailure{p, 1, nu1, 1}};
      continue;
    }
    UniPoly rest = p.minpoly();
    for (const auto& z : seen)
      if (z.is_algebraic()) rest = rest.exact_div(poly_gcd(rest, z.minpoly()));
    if (rest.degree() >= 1) return {false, CoveringFailure{Place::algebraic(rest), 1, nu1, 1}};
  }
  return {};
}

Orbifold pullback_orbifold(const RationalMap& A, const Orbifold& o2) {
  return pullback_over(A, o2, critical_values(A));
}

bool rh_check(const RationalMap& A, const Orbifold& o1, const Orbifold& o2) {
  return euler_char(o1) == Rational(A.degree()) * euler_char(o2);
}

}  // namespace rgenus
