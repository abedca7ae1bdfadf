// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "rgenus/cli.hpp"
#include "rgenus/errors.hpp"

using namespace rgenus;

namespace {

const UniPoly Z = UniPoly::z();
UniPoly C(long c) { return UniPoly::constant(c); }

// Collects the first few problems of a criterion.
struct Check {
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
  }
};

Signature family_signature(const std::string& family, int n) {
  if (family == "cyclic") return n == 1 ? Signature{} : Signature{n, n};
  Signature s{2, 2, n};
  std::sort(s.begin(), s.end());
  return s;
}

Signature fixed_signature(const std::string& name) {
  if (name.rfind("tetra", 0) == 0) return {2, 3, 3};
  if (name.rfind("octa", 0) == 0) return {2, 3, 4};
  return {2, 3, 5};
}

Signature signature_of(const RationalMap& A) { return ramification_orbifolds(A).second.signature(); }

void criterion1(Check& c) {
  for (const auto& e : catalog()) {
    c.expect(genus_class(e.map) == GenusClass::Zero, e.name() + " not genus zero");
    c.expect(signature_of(e.map) == fixed_signature(e.family), e.name() + " signature");
  }
  for (int n = 2; n <= 25; ++n)
    for (const char* f : {"cyclic", "dihedral_half", "chebyshev"}) {
      const RationalMap A = family_entry(f, n).map;
      const std::string name = std::string(f) + "(" + std::to_string(n) + ")";
      c.expect(genus_class(A) == GenusClass::Zero, name + " not genus zero");
      if (std::string(f) == "chebyshev" && n == 2) {
        // T_2 is z^2 up to Mobius maps on both sides, so it is branched over two points only.
        c.expect(signature_of(A) == Signature{2, 2}, name + " signature");
        c.notes.push_back("chebyshev(2) has signature {2,2}, being equivalent to z^2");
        continue;
      }
      c.expect(signature_of(A) == family_signature(f, n), name + " signature");
    }
}

void criterion2(Check& c) {
  for (const auto& e : catalog()) {
    const int d = e.map.degree();
    c.expect(is_belyi(e.map), e.name() + " not Belyi");
    c.expect(belyi_preimage_count(e.map) == d + 2, e.name() + " preimage count");
  }
  c.expect(belyi_preimage_count(catalog_entry("tetra_a").map) == 14, "tetra_a count is not 14");
}

void criterion3(Check& c) {
  auto galois = [&](const RationalMap& A, const std::string& name) {
    auto [o1, o2] = ramification_orbifolds(A);
    c.expect(o1.empty(), name + " has ramified source");
    c.expect(euler_char(o2) == Rational(mpz_class(2), mpz_class(A.degree())), name + " chi");
  };
  for (int n = 2; n <= 25; ++n) {
    galois(cyclic(n), "z^" + std::to_string(n));
    galois(dihedral_half(n), "1/2(z^n+z^-n) n=" + std::to_string(n));
  }
  for (const char* name : {"tetra_a", "octa_a", "icosa_a"}) galois(catalog_entry(name).map, name);
  c.expect(catalog_entry("tetra_a").map.degree() == 12 && catalog_entry("octa_a").map.degree() == 24 &&
               catalog_entry("icosa_a").map.degree() == 60,
           "Galois entry degrees");
}

void criterion4(Check& c) {
  const auto& ids = identity_suite();
  c.expect(ids.size() >= 20, "suite too small");
  std::set<std::string> names;
  for (const auto& r : check_identities(ids)) {
    names.insert(r.name);
    c.expect(r.ok, "identity " + r.name + (r.error.empty() ? "" : " (" + r.error + ")"));
  }
  for (const char* must : {"dee", "xlop", "ep", "epp", "prev", "prevv", "esz", "bs4", "egik", "xorr"})
    c.expect(names.count(must) == 1, std::string("missing identity ") + must);
  for (char k = 'a'; k <= 'h'; ++k)
    c.expect(names.count(std::string("icosa_") + k + " minus one") == 1, std::string("missing icosa_") + k);
  std::ostringstream out, err;
  c.expect(run_verify_identities(ids, false, true, out, err) == kOk, "verify-identities exit code");
}

void criterion5(Check& c) {
  struct Row {
    RationalMap map;
    std::vector<int> cases;
  };
  const std::vector<Row> reps{
      {cyclic(2), {1, 2, 3, 4}},
      {cyclic(3), {5, 6}},
      {cyclic(4), {7}},
      {dihedral_half(2), {8, 9}},
      {dihedral_half(3), {10}},
      {chebyshev(3), {11}},
      {dihedral_half(4), {12}},
      {chebyshev(4), {13, 14}},
      {catalog_entry("tetra_b").map, {15}},
      {catalog_entry("tetra_c").map, {16}},
      {catalog_entry("tetra_a").map, {17}},
  };
  std::set<int> seen;
  for (const auto& r : reps) {
    std::vector<int> got;
    for (const auto& w : zero_chi_witnesses(r.map)) {
      got.push_back(w.case_number);
      seen.insert(w.case_number);
      const std::string tag = r.map.to_string() + " case " + std::to_string(w.case_number);
      c.expect(bool(is_covering(r.map, w.o1, w.o2)), tag + " not a covering");
      c.expect(euler_char(w.o1) == 0 && euler_char(w.o2) == 0, tag + " chi");
    }
    c.expect(got == r.cases, r.map.to_string() + " case list");
  }
  c.expect(seen.size() == 17, "not every case realized");
  auto t3 = zero_chi_analysis(chebyshev(3));
  c.expect(t3 && t3->case_number == 11 && t3->o1.signature() == Signature{2, 3, 6} &&
               t3->o2.signature() == Signature{2, 3, 6},
           "T_3 case 11");
}

RationalMap random_map(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coef(-5, 5);
  for (;;) {
    std::vector<Rational> p, q;
    const int dp = deg(rng), dq = deg(rng);
    for (int i = 0; i <= dp; ++i) p.emplace_back(coef(rng));
    for (int i = 0; i <= dq; ++i) q.emplace_back(coef(rng));
    UniPoly P(p), Q(q);
    if (Q.is_zero()) continue;
    RationalMap A = make_map(P, Q);
    if (A.degree() >= 1) return A;
  }
}

void criterion6(Check& c) {
  const RationalMap doubling = make_map((Z * Z + C(1)).pow(2), 4 * Z * (Z * Z - C(1)));
  const RationalMap doubling2 = compose(doubling, doubling);
  LattesResult d = is_lattes(doubling);
  c.expect(d.flag && d.orbifold && d.orbifold->signature() == Signature{2, 2, 2, 2}, "doubling map not Lattes");
  if (d.orbifold) c.expect(bool(is_covering(doubling, *d.orbifold, *d.orbifold)), "doubling orbifold");
  if (genus_class(doubling) != GenusClass::One)
    c.notes.push_back("doubling map: critical values {-1,0,1}, closure genus zero; its square has genus one");
  c.expect(is_lattes(doubling2).flag && genus_class(doubling2) == GenusClass::One, "doubling squared");
  for (int n = 2; n <= 6; ++n) {
    c.expect(!is_lattes(cyclic(n)).flag, "z^" + std::to_string(n) + " Lattes");
    c.expect(!is_lattes(chebyshev(n)).flag, "T_" + std::to_string(n) + " Lattes");
  }
  std::mt19937 rng(2024);
  std::vector<RationalMap> corpus{doubling, doubling2, compose(doubling2, doubling)};
  for (int i = 0; i < 40; ++i) {
    RationalMap A = random_map(rng);
    if (A.degree() >= 2) corpus.push_back(A);
  }
  for (const auto& A : corpus) {
    LattesResult r = is_lattes(A);
    if (r.flag && A.degree() > 4) c.expect(genus_class(A) == GenusClass::One, A.to_string() + " Lattes, not genus one");
  }
}

void criterion7(Check& c) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mult(1, 3), extra(0, 2), where(-40, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMap A = random_map(rng);
    const int d = A.degree();
    const std::string tag = A.to_string();
    // Fiber sums over critical values, a rational point and infinity.
    std::vector<Place> values = critical_values(A);
    values.push_back(Place::finite(Rational(where(rng))));
    values.push_back(Place::infinity());
    for (const auto& v : values) {
      int sum = 0;
      for (const auto& [p, k] : fiber(A, v)) sum += k * p.size();
      c.expect(sum == d * v.size(), tag + " fiber sum");
    }
    int rh = 0;
    for (const auto& e : passport(A).entries)
      for (int k : e.partition) rh += (k - 1) * e.value.size();
    c.expect(rh == 2 * d - 2, tag + " Riemann-Hurwitz count");

    auto [o1, o2] = ramification_orbifolds(A);
    c.expect(bool(is_covering(A, o1, o2)), tag + " minimal pair not a covering");
    c.expect(euler_char(o1) == Rational(d) * euler_char(o2), tag + " chi relation");
    for (int k = 0; k < 20; ++k) {
      std::vector<std::pair<Place, int>> e;
      for (const auto& [p, n] : o2.entries()) e.emplace_back(p, n * mult(rng));
      for (int j = 0, m = extra(rng); j < m; ++j) {
        Place p = Place::finite(Rational(where(rng)));
        bool fresh = o2.nu(p) == 1;
        for (const auto& [q, n] : e) fresh = fresh && !(q == p);
        if (fresh) e.emplace_back(p, 1 + mult(rng));
      }
      const Orbifold big2(e);
      const Orbifold big1 = pullback_orbifold(A, big2);
      c.expect(bool(is_covering(A, big1, big2)), tag + " dominating pullback");
      c.expect(leq(o1, big1) && leq(o2, big2), tag + " minimality");
      c.expect(rh_check(A, big1, big2), tag + " chi relation, dominating");
    }
  }
}

void criterion8(Check& c) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> e(-3, 3);
  auto mob = [&] {
    for (;;) {
      const int a = e(rng), b = e(rng), cc = e(rng), d = e(rng);
      if (a * d - b * cc != 0) return Mobius(a, b, cc, d);
    }
  };
  auto names = [](const std::vector<CatalogMatch>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(m.entry.name());
    return out;
  };
  for (const RationalMap& A : {chebyshev(5), catalog_entry("octa_b").map, catalog_entry("icosa_e").map}) {
    const auto base = names(catalog_match(A));
    const auto base_sig = signature_of(A);
    for (int i = 0; i < 20; ++i) {
      const RationalMap B = mobius_conjugate(A, mob(), mob());
      const std::string tag = A.to_string() + " -> " + B.to_string();
      c.expect(genus_class(B) == genus_class(A), tag + " genus");
      c.expect(signature_of(B) == base_sig, tag + " signature");
      c.expect(is_lattes(B).flag == is_lattes(A).flag, tag + " Lattes flag");
      try {
        c.expect(names(catalog_match(B)) == base, tag + " matches");
      } catch (const Error& err) {
        c.expect(false, tag + " " + err.what());
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> all{
      {1, "catalog signature table", 30, criterion1},
      {2, "Belyi certificates", 10, criterion2},
      {3, "Galois covering law", 60, criterion3},
      {4, "identity suite", 60, criterion4},
      {5, "flat covering case table", 10, criterion5},
      {6, "Lattes boundary", 10, criterion6},
      {7, "structural invariants on random maps", 60, criterion7},
      {8, "Mobius invariance", 30, criterion8},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < cr.limit, "over time limit");
    const bool ok = c.problems.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, secs);
    for (const auto& p : c.problems) std::printf("    problem: %s\n", p.c_str());
    std::set<std::string> shown;
    for (const auto& n : c.notes)
      if (shown.insert(n).second) std::printf("    note: %s\n", n.c_str());
  }
  return failed == 0 ? 0 : 1;
}
