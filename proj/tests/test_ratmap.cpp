#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rgenus/errors.hpp"
#include "rgenus/ratmap.hpp"

using namespace rgenus;

namespace {

const UniPoly Z = UniPoly::z();
UniPoly C(long c) { return UniPoly::constant(c); }
Rational Q(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }

RationalMap tetra_a() {
  return make_map(-(Z.pow(3) * (Z.pow(3) - C(8)).pow(3)), 64 * (Z.pow(3) + C(1)).pow(3));
}

RationalMap cheb3() { return make_map(4 * Z.pow(3) - 3 * Z); }

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
    if (A.degree() >= 1) return A;
  }
}

Mobius random_mobius(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  for (;;) {
    int a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    if (a * d - b * c != 0) return Mobius(a, b, c, d);
  }
}

int weighted_sum(const std::vector<std::pair<Place, int>>& f) {
  int s = 0;
  for (const auto& [p, k] : f) s += p.size() * k;
  return s;
}

int ramification_total(const RationalMap& A) {
  int total = 0;
  for (const auto& v : critical_values(A))
    for (const auto& [p, k] : fiber(A, v)) total += p.size() * (k - 1);
  return total;
}

}  // namespace

TEST_CASE("make_map canonical form") {
  RationalMap a = make_map(Z * Z - C(1), Z - C(1));
  CHECK(a == make_map(Z + C(1)));
  CHECK(a.degree() == 1);
  CHECK(a.den() == C(1));

  RationalMap b = make_map(C(1), Z);
  CHECK(b.degree() == 1);
  CHECK(b.num() == C(1));
  CHECK(b.den() == Z);

  RationalMap t = tetra_a();
  CHECK(t.degree() == 12);
  CHECK(t.den().leading() == 64);
  CHECK(make_map(t.num(), t.den()) == t);

  RationalMap h = make_map(UniPoly{Q(1, 2), Q(3, 4)}, UniPoly{Q(-5, 6)});
  CHECK(h.num() == UniPoly{-6, -9});
  CHECK(h.den() == C(10));

  CHECK_THROWS_AS(make_map(UniPoly{}, UniPoly{}), ZeroOverZero);
}

TEST_CASE("compose examples") {
  CHECK(compose(make_map(Z * Z), make_map(Z + C(1))) == make_map(Z * Z + 2 * Z + C(1)));

  RationalMap outer = make_map(Q(-1, 64) * Z.pow(3));
  RationalMap mid = make_map(Z * Z - C(4), Z - C(1));
  RationalMap inner = make_map(Z * Z + C(2), Z + C(1));
  CHECK(compose_all({outer, mid, inner}) == tetra_a());

  RationalMap L = make_map((Z + C(7)).pow(3), 54 * (Z - C(1)).pow(2));
  RationalMap d8 = make_map(Z.pow(8) + C(1), 2 * Z.pow(4));
  RationalMap octa_a = make_map((Z.pow(8) + 14 * Z.pow(4) + C(1)).pow(3),
                                108 * Z.pow(4) * (Z.pow(4) - C(1)).pow(4));
  RationalMap got = compose(L, d8);
  CHECK(got == octa_a);
  CHECK(got.degree() == 24);
}

TEST_CASE("mobius_conjugate examples") {
  RationalMap sq = make_map(Z * Z);
  CHECK(mobius_conjugate(sq, Mobius::identity(), Mobius::identity()) == sq);
  CHECK(mobius_conjugate(sq, Mobius(1, -1, 0, 1), Mobius::identity()) == make_map(Z * Z - C(1)));

  RationalMap f = make_map(Q(-256, 27) * Z.pow(3) * (Z - C(1)));
  Mobius l(2, 1, 1, 3), r(1, -2, 3, 1);
  RationalMap g = mobius_conjugate(f, l, r);
  CHECK(g.degree() == 4);
  CHECK(mobius_conjugate(g, l.inverse(), r.inverse()) == f);
}

TEST_CASE("mobius canonical form and action") {
  Mobius m(-2, 4, 0, -6);
  CHECK(m == Mobius(1, -2, 0, 3));
  CHECK_THROWS_AS(Mobius(1, 2, 2, 4), InvalidArgument);
  CHECK(m.after(m.inverse()) == Mobius::identity());
  CHECK(Mobius(0, 1, 1, 0).apply(Place::finite(0)) == Place::infinity());
  Place cls = Place::algebraic(Z * Z - C(2));
  CHECK(Mobius(1, 1, 0, 1).apply(cls) == Place::algebraic(Z * Z - 2 * Z - C(1)));
}

TEST_CASE("local_degree examples") {
  RationalMap sq = make_map(Z * Z);
  CHECK(local_degree(sq, Place::finite(0)) == 2);
  CHECK(local_degree(sq, Place::finite(3)) == 1);
  CHECK(local_degree(tetra_a(), Place::infinity()) == 3);
  CHECK(local_degree(tetra_a(), Place::algebraic(Z.pow(6) + 20 * Z.pow(3) - C(8))) == 2);
}

TEST_CASE("fiber examples") {
  auto f0 = fiber(make_map(Z * Z), Place::finite(0));
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == std::pair{Place::finite(0), 2});

  auto f1 = fiber(cheb3(), Place::finite(1));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == std::pair{Place::finite(Q(-1, 2)), 2});
  CHECK(f1[1] == std::pair{Place::finite(1), 1});

  auto f2 = fiber(tetra_a(), Place::finite(1));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == std::pair{Place::algebraic(Z.pow(6) + 20 * Z.pow(3) - C(8)), 2});
  CHECK(weighted_sum(f2) == 12);

  auto finf = fiber(tetra_a(), Place::infinity());
  CHECK(weighted_sum(finf) == 12);
  CHECK(finf.front() == std::pair{Place::infinity(), 3});
}

TEST_CASE("critical_values examples") {
  CHECK(critical_values(make_map(Z * Z)) == std::vector<Place>{Place::infinity(), Place::finite(0)});
  CHECK(critical_values(cheb3()) ==
        std::vector<Place>{Place::infinity(), Place::finite(-1), Place::finite(1)});
  CHECK(critical_values(make_map(Z + C(1))).empty());
  CHECK(critical_values(tetra_a()) ==
        std::vector<Place>{Place::infinity(), Place::finite(0), Place::finite(1)});
}

TEST_CASE("passport examples") {
  Passport p3 = passport(make_map(Z.pow(3)));
  REQUIRE(p3.entries.size() == 2);
  CHECK(p3.entries[0] == PassportEntry{Place::infinity(), {3}});
  CHECK(p3.entries[1] == PassportEntry{Place::finite(0), {3}});

  Passport pt = passport(cheb3());
  REQUIRE(pt.entries.size() == 3);
  CHECK(pt.entries[0] == PassportEntry{Place::infinity(), {3}});
  CHECK(pt.entries[1] == PassportEntry{Place::finite(-1), {2, 1}});
  CHECK(pt.entries[2] == PassportEntry{Place::finite(1), {2, 1}});
  CHECK(pt.to_string() == "({3}_inf, {2,1}_-1, {2,1}_1)");

  RationalMap tetra_b = make_map(-(Z * (Z - C(8)).pow(3)), 64 * (Z + C(1)).pow(3));
  Passport pb = passport(tetra_b);
  REQUIRE(pb.entries.size() == 3);
  CHECK(pb.entries[0] == PassportEntry{Place::infinity(), {3, 1}});
  CHECK(pb.entries[1] == PassportEntry{Place::finite(0), {3, 1}});
  CHECK(pb.entries[2] == PassportEntry{Place::finite(1), {2, 2}});
}

TEST_CASE("algebraic critical values") {
  // z^3 + z: critical values are the roots of t^2 + 4/27.
  Passport p = passport(make_map(Z.pow(3) + Z));
  REQUIRE(p.entries.size() == 2);
  CHECK(p.entries[0] == PassportEntry{Place::infinity(), {3}});
  CHECK(p.entries[1] == PassportEntry{Place::algebraic(UniPoly{Q(4, 27), 0, 1}), {2, 1}});
}

TEST_CASE("conjugate critical values with different branch data are separated") {
  // A' = 7 (z^2 - 2)(z^2 - 3)^2: simple critical points at +-sqrt 2, double at +-sqrt 3.
  UniPoly deriv = 7 * (Z * Z - C(2)) * (Z * Z - C(3)).pow(2);
  std::vector<Rational> c{0};
  for (int i = 0; i <= deriv.degree(); ++i) c.push_back(deriv.coeff(i) / Rational(i + 1));
  RationalMap A = make_map(UniPoly(c));
  auto cv = critical_values(A);
  REQUIRE(cv.size() == 2);
  CHECK(cv[1].minpoly().degree() == 4);
  Passport p = passport(A);
  REQUIRE(p.entries.size() == 3);
  CHECK(p.entries[0].value == Place::infinity());
  CHECK(p.entries[1].partition == std::vector<int>{3, 1, 1, 1, 1});
  CHECK(p.entries[2].partition == std::vector<int>{2, 1, 1, 1, 1, 1});
  CHECK(p.entries[1].value.minpoly() * p.entries[2].value.minpoly() == cv[1].minpoly());
}

TEST_CASE("Riemann-Hurwitz count and fiber sums on random maps") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    RationalMap A = random_map(rng);
    CAPTURE(A.to_string());
    const int d = A.degree();
    CHECK(ramification_total(A) == 2 * d - 2);
    for (const auto& v : critical_values(A)) CHECK(weighted_sum(fiber(A, v)) == d * v.size());
    CHECK(weighted_sum(fiber(A, Place::finite(7))) == d);
    CHECK(weighted_sum(fiber(A, Place::infinity())) == d);
    for (const auto& e : passport(A).entries) {
      int s = 0;
      for (int k : e.partition) s += k;
      CHECK(s == d);
    }
  }
}

TEST_CASE("composition degree and right Mobius invariance of passports") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMap f = random_map(rng), g = random_map(rng);
    if (f.degree() * g.degree() > 12) continue;
    CHECK(compose(f, g).degree() == f.degree() * g.degree());
  }
  for (int trial = 0; trial < 30; ++trial) {
    RationalMap A = random_map(rng);
    Mobius mu = random_mobius(rng);
    CHECK(passport(compose(A, mu.as_map())).partition_multiset() == passport(A).partition_multiset());
  }
}
