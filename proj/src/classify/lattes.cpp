#include <algorithm>
#include <map>
#include <set>

#include "rgenus/classify.hpp"
#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

const std::vector<Signature>& flat_signatures() {
  static const std::vector<Signature> s{{2, 2, 2, 2}, {2, 4, 4}, {3, 3, 3}, {2, 3, 6}};
  return s;
}

struct CaseRow {
  int id;
  Signature nu_a;
  int degree;
  Signature o1, o2;
};

const std::vector<CaseRow>& case_table() {
  static const std::vector<CaseRow> rows{
      {1, {2, 2}, 2, {2, 2, 2, 2}, {2, 2, 2, 2}},  {2, {2, 2}, 2, {2, 4, 4}, {2, 4, 4}},
      {3, {2, 2}, 2, {2, 2, 2, 2}, {2, 4, 4}},     {4, {2, 2}, 2, {3, 3, 3}, {2, 3, 6}},
      {5, {3, 3}, 3, {3, 3, 3}, {3, 3, 3}},        {6, {3, 3}, 3, {2, 2, 2, 2}, {2, 3, 6}},
      {7, {4, 4}, 4, {2, 2, 2, 2}, {2, 4, 4}},     {8, {2, 2, 2}, 4, {2, 2, 2, 2}, {2, 2, 2, 2}},
      {9, {2, 2, 2}, 4, {2, 2, 2, 2}, {2, 4, 4}},  {10, {2, 2, 3}, 6, {3, 3, 3}, {2, 3, 6}},
      {11, {2, 2, 3}, 3, {2, 3, 6}, {2, 3, 6}},    {12, {2, 2, 4}, 8, {2, 2, 2, 2}, {2, 4, 4}},
      {13, {2, 2, 4}, 4, {2, 2, 2, 2}, {2, 4, 4}}, {14, {2, 2, 4}, 4, {2, 4, 4}, {2, 4, 4}},
      {15, {2, 3, 3}, 4, {2, 3, 6}, {2, 3, 6}},    {16, {2, 3, 3}, 6, {2, 2, 2, 2}, {2, 3, 6}},
      {17, {2, 3, 3}, 12, {2, 2, 2, 2}, {2, 3, 6}},
  };
  return rows;
}

int points_in(const std::vector<Place>& places) {
  int n = 0;
  for (const auto& p : places) n += p.size();
  return n;
}

/// Assigns the values of sig to a subset of items so that each item takes
/// one value on all of its points. Items with forced == true must be used.
/// Calls emit(assignment, leftover values) for every way to do so.
struct Assigner {
  struct Item {
    Place place;
    int divides = 1;  // assigned value must be a multiple
    bool forced = true;
  };
  std::vector<Item> items;
  std::map<int, int> left;
  std::vector<std::pair<Place, int>> chosen;

  template <class Fn>
  void run(std::size_t i, const Fn& emit) {
    if (i == items.size()) {
      emit(chosen, left);
      return;
    }
    const Item& it = items[i];
    if (!it.forced) run(i + 1, emit);
    for (auto& [v, count] : left) {
      if (count < it.place.size() || v % it.divides != 0) continue;
      count -= it.place.size();
      chosen.emplace_back(it.place, v);
      run(i + 1, emit);
      chosen.pop_back();
      count += it.place.size();
    }
  }
};

std::map<int, int> counts(const Signature& s) {
  std::map<int, int> m;
  for (int v : s) ++m[v];
  return m;
}

/// H(A(x)) >= H(x)^d / K for every rational x, from a Sylvester solve of
/// U F + V G = s^(2d-1) and t^(2d-1) on the homogenized map; the gcd of
/// F(a, b) and G(a, b) divides the resultant.
Rational escape_constant(const RationalMap& A) {
  const int d = A.degree(), n = 2 * d;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 2)));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i <= d; ++i) {
      m[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j)] = A.num().coeff(i);
      m[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j + d)] = A.den().coeff(i);
    }
  m[0][static_cast<std::size_t>(n)] = 1;
  m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n + 1)] = 1;
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) ++r;
    if (r != c) {
      std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(c)]);
      det = -det;
    }
    auto& pivot_row = m[static_cast<std::size_t>(c)];
    const Rational pivot = pivot_row[static_cast<std::size_t>(c)];
    det *= pivot;
    for (auto& x : pivot_row) x /= pivot;
    for (int r2 = 0; r2 < n; ++r2) {
      auto& row = m[static_cast<std::size_t>(r2)];
      if (r2 == c || row[static_cast<std::size_t>(c)].is_zero()) continue;
      const Rational f = row[static_cast<std::size_t>(c)];
      for (int k = c; k < n + 2; ++k) row[static_cast<std::size_t>(k)] -= f * pivot_row[static_cast<std::size_t>(k)];
    }
  }
  Rational norm1 = 0, norm2 = 0;
  for (int r = 0; r < n; ++r) {
    norm1 += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)].abs();
    norm2 += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + 1)].abs();
  }
  return std::max(norm1, norm2) * det.abs();
}

std::size_t bits(const Rational& r) {
  return mpz_sizeinbase(r.num().get_mpz_t(), 2) + mpz_sizeinbase(r.den().get_mpz_t(), 2);
}

// Algebraic orbits are not covered by the height test; a class whose minimal
// polynomial outgrows this many bits is treated as escaping.
constexpr std::size_t kClassBitBudget = 1 << 14;

}  // namespace

Postcritical postcritical_set(const RationalMap& A, int cap) {
  if (A.degree() < 2) throw InvalidArgument("postcritical_set needs degree >= 2");
  if (cap < 1) throw InvalidArgument("cap must be positive");
  std::optional<Rational> K;
  auto escapes = [&](const Place& q) {
    if (q.is_infinity()) return false;
    if (q.is_algebraic()) {
      std::size_t total = 0;
      for (const auto& c : q.minpoly().coeffs()) total += bits(c);
      return total > kClassBitBudget;
    }
    mpz_class h = abs(q.value().num());
    if (q.value().den() > h) h = q.value().den();
    if (mpz_sizeinbase(h.get_mpz_t(), 2) < 64) return false;
    if (!K) K = escape_constant(A);
    mpz_class hp;
    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(A.degree() - 1));
    return Rational(hp) > *K;
  };

  std::vector<Place> set = refine_places(critical_values(A));
  if (points_in(set) > cap) return {false, {}};
  std::vector<Place> work = set;
  while (!work.empty()) {
    Place p = work.back();
    work.pop_back();
    for (const auto& q : image_places(A, p)) {
      if (escapes(q)) return {false, {}};
      std::vector<Place> grown = set;
      grown.push_back(q);
      grown = refine_places(grown);
      const int n = points_in(grown);
      if (n == points_in(set)) continue;
      if (n > cap) return {false, {}};
      set = std::move(grown);
      work.push_back(q);
    }
  }
  return {true, set};
}

std::vector<CoveringWitness> zero_chi_witnesses(const RationalMap& A) {
  if (A.degree() < 2) throw InvalidArgument("zero_chi_analysis needs degree >= 2");
  auto [o1a, o2a] = ramification_orbifolds(A);
  const Rational chi = euler_char(o2a);
  if (chi.sign() < 0) return {};
  if (chi.sign() == 0) {
    if (!is_covering(A, o1a, o2a) || euler_char(o1a).sign() != 0)
      throw InvariantViolation("forced pair is not a covering of flat orbifolds");
    return {CoveringWitness{o1a, o2a, 0}};
  }

  const Signature nu_a = o2a.signature();
  const int used = static_cast<int>(nu_a.size());
  std::vector<Place> free_points;
  for (long k = 0; static_cast<int>(free_points.size()) + used < 4; ++k) {
    Place p = Place::finite(k);
    if (o2a.nu(p) == 1) free_points.push_back(p);
  }

  std::map<int, CoveringWitness> found;
  for (const auto& sig : flat_signatures()) {
    if (static_cast<int>(sig.size()) < used) continue;
    Assigner as;
    for (const auto& [p, nu] : o2a.entries()) as.items.push_back({p, nu, true});
    as.left = counts(sig);
    as.run(0, [&](const std::vector<std::pair<Place, int>>& chosen, const std::map<int, int>& left) {
      std::vector<std::pair<Place, int>> e = chosen;
      std::size_t f = 0;
      for (const auto& [v, c] : left)
        for (int i = 0; i < c; ++i) e.emplace_back(free_points[f++], v);
      Orbifold o2(e);
      Orbifold o1 = pullback_orbifold(A, o2);
      const CaseRow* row = nullptr;
      for (const auto& r : case_table())
        if (r.nu_a == nu_a && r.degree == A.degree() && r.o1 == o1.signature() && r.o2 == o2.signature()) row = &r;
      if (!row)
        throw InvariantViolation("flat covering outside the case table: " + o1.to_string() + " -> " + o2.to_string());
      if (!is_covering(A, o1, o2) || euler_char(o1).sign() != 0)
        throw InvariantViolation("constructed witness is not a covering");
      found.try_emplace(row->id, CoveringWitness{o1, o2, row->id});
    });
  }
  std::vector<CoveringWitness> out;
  for (auto& [id, w] : found) out.push_back(std::move(w));
  return out;
}

std::optional<CoveringWitness> zero_chi_analysis(const RationalMap& A) {
  auto all = zero_chi_witnesses(A);
  if (all.empty()) return std::nullopt;
  return all.front();
}

LattesResult is_lattes(const RationalMap& A) {
  if (A.degree() < 2) throw InvalidArgument("is_lattes needs degree >= 2");
  auto [o1a, o2a] = ramification_orbifolds(A);
  const int chi = euler_char(o2a).sign();
  if (chi < 0) return {};
  if (chi == 0) {
    if (o1a == o2a) return {true, o2a};
    return {};
  }
  Postcritical pc = postcritical_set(A, 64);
  if (!pc.bounded) return {};
  std::optional<Orbifold> hit;
  for (const auto& sig : flat_signatures()) {
    if (hit) break;
    Assigner as;
    for (const auto& p : pc.places) {
      const int nu = o2a.nu(p);
      as.items.push_back({p, nu, nu > 1});
    }
    as.left = counts(sig);
    as.run(0, [&](const std::vector<std::pair<Place, int>>& chosen, const std::map<int, int>& left) {
      if (hit) return;
      for (const auto& [v, c] : left)
        if (c) return;
      Orbifold o(chosen);
      // The support has to be forward invariant.
      try {
        for (const auto& p : o.support())
          for (const auto& q : image_places(A, p))
            if (o.nu(q) == 1) return;
      } catch (const InvalidArgument&) {
        return;
      }
      if (is_covering(A, o, o)) hit = o;
    });
  }
  if (!hit) return {};
  return {true, hit};
}

}  // namespace rgenus
