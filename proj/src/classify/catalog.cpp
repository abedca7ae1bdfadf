#include <algorithm>

#include "rgenus/classify.hpp"
#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

const UniPoly Z = UniPoly::z();

UniPoly C(long c) { return UniPoly::constant(c); }
Rational Q(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }
UniPoly P(std::initializer_list<long> low_first) {
  std::vector<Rational> c(low_first.begin(), low_first.end());
  return UniPoly(c);
}

const Signature kTetra{2, 3, 3}, kOcta{2, 3, 4}, kIcosa{2, 3, 5};

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](const char* name, const UniPoly& num, const UniPoly& den, const Signature& s) {
    out.push_back(CatalogEntry{name, 0, make_map(num, den), s});
  };
  auto z = [](unsigned k) { return Z.pow(k); };

  add("tetra_a", Q(-1, 64) * z(3) * (z(3) - C(8)).pow(3), (z(3) + C(1)).pow(3), kTetra);
  add("tetra_b", Q(-1, 64) * Z * (Z - C(8)).pow(3), (Z + C(1)).pow(3), kTetra);
  add("tetra_c", Q(-1, 64) * (z(2) - C(4)).pow(3), (Z - C(1)).pow(3), kTetra);

  add("octa_a", (z(8) + 14 * z(4) + C(1)).pow(3), 108 * z(4) * (z(4) - C(1)).pow(4), kOcta);
  add("octa_b", (z(2) + 14 * Z + C(1)).pow(3), 108 * Z * (Z - C(1)).pow(4), kOcta);
  add("octa_c", Q(-1, 27) * (z(2) - C(4)).pow(3), z(4), kOcta);
  add("octa_d", Q(4, 27) * (z(4) - z(2) + C(1)).pow(3), z(4) * (z(2) - C(1)).pow(2), kOcta);
  add("octa_e", Q(-1, 27) * (2 * z(2) + C(1)).pow(3) * (2 * z(2) - C(3)).pow(3), (2 * z(2) - C(1)).pow(4),
      kOcta);
  add("octa_f", Q(-256, 27) * z(3) * (Z - C(1)), C(1), kOcta);
  add("octa_g", 256 * Z * (z(2) - 7 * Z - C(8)).pow(3), (z(2) + 20 * Z - C(8)).pow(4), kOcta);

  add("icosa_a", (z(20) + 228 * z(15) + 494 * z(10) - 228 * z(5) + C(1)).pow(3),
      1728 * (z(10) - 11 * z(5) - C(1)).pow(5) * z(5), kIcosa);
  add("icosa_b", Q(-1, 6144) * (3 * Z + C(5)).pow(3) * (z(2) + C(15)), C(1), kIcosa);
  add("icosa_c", (z(2) - C(20)).pow(3), 1728 * (Z - C(5)), kIcosa);
  add("icosa_d", Q(320000, 9) * (20 * z(3) - 87 * Z - C(95)).pow(3), (20 * z(2) + 140 * Z + C(101)).pow(5),
      kIcosa);
  add("icosa_e", (z(4) + 228 * z(3) + 494 * z(2) - 228 * Z + C(1)).pow(3), 1728 * (z(2) - 11 * Z - C(1)).pow(5) * Z,
      kIcosa);
  add("icosa_f",
      Q(625, 27) * (-40 * z(2) - 20 * Z - C(4)).pow(3) * z(3) * (5 * z(2) + 5 * Z + C(1)).pow(3),
      (20 * z(2) + 10 * Z + C(1)).pow(5), kIcosa);
  add("icosa_g",
      Q(125, 64) * Z * (z(2) + 5 * Z + C(40)).pow(3) * (z(2) - 40 * Z - C(5)).pow(3) *
          (8 * z(2) - 5 * Z + C(5)).pow(3),
      P({25, -275, -165, 55, 1}).pow(5), kIcosa);
  add("icosa_h",
      (z(2) + 3 * Z + C(1)).pow(3) * P({31, -14, 11, -4, 1}).pow(3) * P({16, -4, 11, 1, 1}).pow(3),
      1728 * (Z - C(1)).pow(5) * P({11, 6, 6, 1, 1}).pow(5), kIcosa);
  return out;
}

}  // namespace

RationalMap cyclic(int n) {
  if (n < 1) throw BadParameter("cyclic family needs n >= 1");
  return make_map(Z.pow(static_cast<unsigned>(n)));
}

RationalMap chebyshev(int n) {
  if (n < 2) throw BadParameter("chebyshev family needs n >= 2");
  UniPoly a = C(1), b = Z;
  for (int i = 1; i < n; ++i) {
    UniPoly c = 2 * Z * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return make_map(b);
}

RationalMap dihedral_half(int n) {
  if (n < 2) throw BadParameter("dihedral_half family needs n >= 2");
  const auto k = static_cast<unsigned>(n);
  return make_map(Z.pow(2 * k) + C(1), 2 * Z.pow(k));
}

CatalogEntry family_entry(const std::string& family, int n) {
  if (family == "cyclic") {
    RationalMap m = cyclic(n);
    return {family, n, m, n >= 2 ? Signature{n, n} : Signature{}};
  }
  if (family == "chebyshev") {
    RationalMap m = chebyshev(n);
    // T_2 is z^2 up to Mobius maps on both sides.
    if (n == 2) return {family, n, m, {2, 2}};
    Signature s{2, 2, n};
    std::sort(s.begin(), s.end());
    return {family, n, m, s};
  }
  if (family == "dihedral_half") {
    RationalMap m = dihedral_half(n);
    Signature s{2, 2, n};
    std::sort(s.begin(), s.end());
    return {family, n, m, s};
  }
  throw InvalidArgument("unknown parametric family " + family);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.family == name) return e;
  throw InvalidArgument("no catalog entry named " + name);
}

}  // namespace rgenus
