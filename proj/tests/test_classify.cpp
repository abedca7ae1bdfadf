#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rgenus/classify.hpp"
#include "rgenus/errors.hpp"

using namespace rgenus;

namespace {

const UniPoly Z = UniPoly::z();
UniPoly C(long c) { return UniPoly::constant(c); }
Rational Q(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }
Place F(const Rational& r) { return Place::finite(r); }
const Place INF = Place::infinity();

// x(2P) on y^2 = x^3 - x. Its three critical values 0, 1, -1 give signature
// {2,2,2}; iterating once more adds infinity and gives {2,2,2,2}.
RationalMap doubling() { return make_map((Z * Z + C(1)).pow(2), 4 * Z * (Z * Z - C(1))); }
RationalMap doubling2() { return compose(doubling(), doubling()); }

std::set<std::string> families(const std::vector<CatalogMatch>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.entry.name());
  return out;
}

RationalMap random_map(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coef(-5, 5);
  for (;;) {
    std::vector<Rational> p, q;
    int dp = deg(rng), dq = deg(rng);
    for (int i = 0; i <= dp; ++i) p.emplace_back(coef(rng));
    for (int i = 0; i <= dq; ++i) q.emplace_back(coef(rng));
    UniPoly P(p), QQ(q);
    if (QQ.is_zero()) continue;
    RationalMap A = make_map(P, QQ);
    if (A.degree() >= 2) return A;
  }
}

}  // namespace

TEST_CASE("genus_class examples") {
  CHECK(genus_class(cyclic(5)) == GenusClass::Zero);
  CHECK(genus_class(doubling()) == GenusClass::Zero);
  CHECK(genus_class(doubling2()) == GenusClass::One);
  CHECK(ramification_orbifolds(doubling2()).second.signature() == Signature{2, 2, 2, 2});
  CHECK(genus_class(make_map(Z.pow(4) * (Z - C(1)))) == GenusClass::Higher);
  CHECK(genus_class(make_map(Z + C(3))) == GenusClass::Zero);
  CHECK(to_string(GenusClass::Higher) == "higher");
}

TEST_CASE("is_belyi examples") {
  const RationalMap& a4 = catalog_entry("tetra_a").map;
  CHECK(is_belyi(a4));
  CHECK(belyi_preimage_count(a4) == 14);
  CHECK(is_belyi(make_map(Z * Z)));
  CHECK_FALSE(is_belyi(make_map(Z * Z - C(2))));
}

TEST_CASE("catalog examples") {
  CHECK(catalog().size() == 18);
  CHECK(catalog_entry("icosa_a").map.degree() == 60);
  CHECK(catalog_entry("octa_f").map == make_map(Q(-256, 27) * Z.pow(3) * (Z - C(1))));
  CHECK(catalog_entry("octa_f").map.degree() == 4);
  CHECK(catalog_entry("tetra_c").map == power(make_map(Z * Z - C(4), Z - C(1)), 3) * constant_map(Q(-1, 64)));
  CHECK(catalog_entry("tetra_c").map.degree() == 6);
  std::vector<int> icosa;
  for (const auto& e : catalog())
    if (e.family.rfind("icosa", 0) == 0) icosa.push_back(e.map.degree());
  CHECK(icosa == std::vector<int>{60, 5, 6, 10, 12, 15, 20, 30});
  CHECK_THROWS_AS(catalog_entry("octa_z"), InvalidArgument);
}

TEST_CASE("parametric families") {
  CHECK(chebyshev(2) == make_map(2 * Z * Z - C(1)));
  CHECK(chebyshev(3) == make_map(4 * Z.pow(3) - 3 * Z));
  CHECK(dihedral_half(2) == make_map(Z.pow(4) + C(1), 2 * Z * Z));
  CHECK(cyclic(1) == make_map(Z));
  CHECK_THROWS_AS(cyclic(0), BadParameter);
  CHECK_THROWS_AS(chebyshev(1), BadParameter);
  CHECK_THROWS_AS(dihedral_half(1), BadParameter);
  CHECK_THROWS_AS(family_entry("chebyshev", 0), BadParameter);
}

TEST_CASE("catalog soundness") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name());
    CHECK(is_belyi(e.map));
    CHECK(ramification_orbifolds(e.map).second.signature() == e.expected);
    CHECK(genus_class(e.map) == GenusClass::Zero);
  }
  for (int n = 2; n <= 25; ++n)
    for (const char* f : {"cyclic", "chebyshev", "dihedral_half"}) {
      CatalogEntry e = family_entry(f, n);
      CAPTURE(e.name());
      CHECK(ramification_orbifolds(e.map).second.signature() == e.expected);
      CHECK(genus_class(e.map) == GenusClass::Zero);
    }
}

TEST_CASE("Galois entries") {
  for (const char* name : {"tetra_a", "octa_a", "icosa_a"}) {
    const RationalMap& A = catalog_entry(name).map;
    auto [o1, o2] = ramification_orbifolds(A);
    CHECK(o1.empty());
    CHECK(euler_char(o2) * Rational(A.degree()) == 2);
  }
}

TEST_CASE("mu_equivalent examples") {
  auto w = mu_equivalent(make_map(Z * Z), make_map((Z + C(3)).pow(2)));
  REQUIRE(w.has_value());
  CHECK(mobius_conjugate(make_map((Z + C(3)).pow(2)), w->first, w->second) == make_map(Z * Z));
  CHECK(w->first == Mobius::identity());
  CHECK(w->second == Mobius(1, -3, 0, 1));

  auto t = mu_equivalent(chebyshev(2), make_map(Z * Z));
  REQUIRE(t.has_value());
  CHECK(t->first == Mobius(2, -1, 0, 1));
  CHECK(t->second == Mobius::identity());

  CHECK_FALSE(mu_equivalent(cyclic(4), chebyshev(4)).has_value());
  CHECK_FALSE(mu_equivalent(cyclic(4), cyclic(5)).has_value());
  // No rational anchors on either side.
  CHECK_THROWS_AS(mu_equivalent(make_map(Z.pow(3) + Z), make_map(Z.pow(3) + 2 * Z)), Unsupported);
}

TEST_CASE("catalog_match examples") {
  CHECK(families(catalog_match(chebyshev(2))) == std::set<std::string>{"cyclic(2)", "chebyshev(2)"});
  CHECK(families(catalog_match(make_map(Z * Z * (Z - C(1))))) == std::set<std::string>{"chebyshev(3)"});
  RationalMap L = make_map((Z + C(7)).pow(3), 54 * (Z - C(1)).pow(2));
  RationalMap xorr = compose(L, dihedral_half(4));
  auto ms = catalog_match(xorr);
  CHECK(families(ms) == std::set<std::string>{"octa_a"});
  for (const auto& m : ms) CHECK(mobius_conjugate(m.entry.map, m.left, m.right) == xorr);
  // A twist of dihedral_half(2): no point above its critical values is
  // rational, so no equivalence over Q exists.
  CHECK(genus_class(doubling()) == GenusClass::Zero);
  CHECK_THROWS_AS(catalog_match(doubling()), NoMatch);
  CHECK_THROWS_AS(catalog_match(doubling2()), InvalidArgument);
}

TEST_CASE("verify_decomposition examples") {
  CHECK(verify_decomposition(catalog_entry("tetra_a").map,
                             {make_map(Q(-1, 64) * Z.pow(3)), make_map(Z * Z - C(4), Z - C(1)),
                              make_map(Z * Z + C(2), Z + C(1))}));
  CHECK(verify_decomposition(dihedral_half(6), {dihedral_half(3), cyclic(2)}));
  CHECK(verify_decomposition(make_map(Z * Z), {make_map(Z * Z), make_map(Z)}));
  CHECK_FALSE(verify_decomposition(make_map(Z * Z), {make_map(Z * Z), make_map(Z + C(1))}));
  CHECK_THROWS_AS(verify_decomposition(make_map(Z), {}), InvalidArgument);
}

TEST_CASE("left_factor_constraint examples") {
  CHECK(left_factor_constraint({2, 3, 3}, {3, 3}));
  CHECK(left_factor_constraint({2, 3, 4}, {2, 2, 3}));
  CHECK_FALSE(left_factor_constraint({2, 3, 3}, {2, 2}));
  CHECK(left_factor_constraint({6, 6}, {3, 3}));
  CHECK_FALSE(left_factor_constraint({6, 6}, {4, 4}));
  CHECK(left_factor_constraint({2, 2, 6}, {2, 2}));
  CHECK(left_factor_constraint({2, 2, 6}, {2, 2, 3}));
  CHECK(left_factor_constraint({2, 2, 4}, {2, 2, 2}));
  CHECK(left_factor_constraint({2, 3, 5}, {2, 3, 5}));
  CHECK_FALSE(left_factor_constraint({2, 3, 5}, {3, 3}));
}

TEST_CASE("left factors of Galois maps obey the constraint") {
  RationalMap L = make_map((Z + C(7)).pow(3), 54 * (Z - C(1)).pow(2));
  struct Case {
    RationalMap theta;
    std::vector<RationalMap> parts;
  };
  std::vector<Case> cases{
      {catalog_entry("tetra_a").map, {catalog_entry("tetra_b").map, cyclic(3)}},
      {catalog_entry("tetra_a").map, {make_map(Q(-1, 64) * Z.pow(3)), make_map(Z * (Z.pow(3) - C(8)), Z.pow(3) + C(1))}},
      {catalog_entry("octa_a").map, {L, dihedral_half(4)}},
      {catalog_entry("octa_a").map, {catalog_entry("octa_b").map, cyclic(4)}},
      {catalog_entry("icosa_a").map, {catalog_entry("icosa_e").map, cyclic(5)}},
      {dihedral_half(6), {dihedral_half(3), cyclic(2)}},
      {dihedral_half(6), {chebyshev(3), dihedral_half(2)}},
      {cyclic(6), {cyclic(2), cyclic(3)}},
  };
  for (const auto& c : cases) {
    REQUIRE(verify_decomposition(c.theta, c.parts));
    const Signature nt = ramification_orbifolds(c.theta).second.signature();
    const Signature na = ramification_orbifolds(c.parts.front()).second.signature();
    CAPTURE(c.parts.front().to_string());
    CHECK(left_factor_constraint(nt, na));
  }
}

TEST_CASE("postcritical_set examples") {
  Postcritical a = postcritical_set(make_map(Z * Z), 10);
  CHECK(a.bounded);
  CHECK(a.places == std::vector<Place>{INF, F(0)});
  Postcritical b = postcritical_set(make_map(Z * Z - C(2)), 10);
  CHECK(b.bounded);
  CHECK(b.places == std::vector<Place>{INF, F(-2), F(2)});
  CHECK_FALSE(postcritical_set(make_map(Z * Z - C(3)), 10).bounded);
  // A large cap still ends quickly through the height test.
  CHECK_FALSE(postcritical_set(make_map(Z * Z - C(3)), 64).bounded);
  CHECK(postcritical_set(doubling(), 64).bounded);
}

TEST_CASE("zero_chi_analysis examples") {
  auto w = zero_chi_analysis(make_map(Z * Z));
  REQUIRE(w.has_value());
  CHECK(w->case_number == 1);
  CHECK(w->o1.signature() == Signature{2, 2, 2, 2});
  CHECK(w->o2.signature() == Signature{2, 2, 2, 2});
  CHECK(is_covering(make_map(Z * Z), w->o1, w->o2));

  auto f = zero_chi_analysis(doubling2());
  REQUIRE(f.has_value());
  CHECK(f->forced());
  CHECK(is_covering(doubling2(), f->o1, f->o2));
  CHECK(zero_chi_analysis(doubling())->case_number == 8);

  CHECK_FALSE(zero_chi_analysis(make_map(Z.pow(4) * (Z - C(1)))).has_value());
}

TEST_CASE("every case of the flat covering table is realized") {
  std::vector<std::pair<RationalMap, std::vector<int>>> reps{
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
  std::set<int> all;
  for (const auto& [A, cases] : reps) {
    CAPTURE(A.to_string());
    std::vector<int> got;
    for (const auto& w : zero_chi_witnesses(A)) {
      got.push_back(w.case_number);
      all.insert(w.case_number);
      CHECK(is_covering(A, w.o1, w.o2));
      CHECK(euler_char(w.o1) == 0);
      CHECK(euler_char(w.o2) == 0);
    }
    CHECK(got == cases);
  }
  CHECK(all.size() == 17);
  auto t3 = zero_chi_analysis(chebyshev(3));
  REQUIRE(t3.has_value());
  CHECK(t3->o1.signature() == Signature{2, 3, 6});
  CHECK(t3->o2.signature() == Signature{2, 3, 6});
}

TEST_CASE("is_lattes examples") {
  LattesResult d = is_lattes(doubling());
  CHECK(d.flag);
  REQUIRE(d.orbifold.has_value());
  CHECK(d.orbifold->signature() == Signature{2, 2, 2, 2});
  CHECK(is_covering(doubling(), *d.orbifold, *d.orbifold));
  LattesResult d2 = is_lattes(doubling2());
  CHECK(d2.flag);
  CHECK(genus_class(doubling2()) == GenusClass::One);
  CHECK_FALSE(is_lattes(chebyshev(4)).flag);
  CHECK_FALSE(is_lattes(cyclic(3)).flag);
  for (int n = 2; n <= 6; ++n) {
    CHECK_FALSE(is_lattes(cyclic(n)).flag);
    CHECK_FALSE(is_lattes(chebyshev(n)).flag);
  }
}

TEST_CASE("Lattes maps of degree above four have genus one") {
  std::mt19937 rng(5);
  std::vector<RationalMap> corpus{doubling(), doubling2()};
  for (int i = 0; i < 30; ++i) corpus.push_back(random_map(rng));
  int lattes = 0;
  for (const auto& A : corpus) {
    CAPTURE(A.to_string());
    LattesResult r = is_lattes(A);
    if (!r.flag) continue;
    ++lattes;
    CHECK(is_covering(A, *r.orbifold, *r.orbifold));
    if (A.degree() > 4) CHECK(genus_class(A) == GenusClass::One);
  }
  CHECK(lattes >= 2);
}

TEST_CASE("classification is invariant under Mobius changes of variable") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  auto mob = [&] {
    for (;;) {
      int a = e(rng), b = e(rng), c = e(rng), d = e(rng);
      if (a * d - b * c != 0) return Mobius(a, b, c, d);
    }
  };
  for (const RationalMap& A : {chebyshev(5), catalog_entry("octa_b").map}) {
    const auto base = families(catalog_match(A));
    for (int i = 0; i < 5; ++i) {
      RationalMap B = mobius_conjugate(A, mob(), mob());
      CHECK(genus_class(B) == GenusClass::Zero);
      CHECK(families(catalog_match(B)) == base);
    }
  }
}
