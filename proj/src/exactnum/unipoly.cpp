#include "rgenus/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

using ZPoly = std::vector<mpz_class>;  // integer coefficients, lowest first

void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
void zprimitive(ZPoly& p) {
  zstrip(p);
  if (p.empty()) return;
  mpz_class g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const UniPoly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ZPoly out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.num() * (l / c.den()));
  zprimitive(out);
  return out;
}

UniPoly from_zpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return UniPoly(std::move(c));
}

// Horner evaluation of b^n * p(a/b) with integer arithmetic.
mpz_class zeval_homog(const ZPoly& p, const mpz_class& a, const mpz_class& b) {
  mpz_class acc = 0, bpow = 1;
  // acc = sum p_i a^i b^(n-i), evaluate from the top.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return acc;
}

mpz_class zeval_mod(const ZPoly& p, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

std::vector<unsigned long> zreduce(const ZPoly& p, unsigned long prime) {
  std::vector<unsigned long> out(p.size());
  mpz_class r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), p[i].get_mpz_t(), prime);
    out[i] = r.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

unsigned long powmod_ul(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long long r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

/// Degree of gcd(a, b) over F_p.
int gcd_degree_mod(std::vector<unsigned long> a, std::vector<unsigned long> b, unsigned long p) {
  auto strip = [](std::vector<unsigned long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  while (!b.empty()) {
    const unsigned long inv = powmod_ul(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const unsigned long long f = static_cast<unsigned long long>(a.back()) * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = static_cast<unsigned long>((a[i + shift] + (p - f) * b[i]) % p);
      strip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// Monic gcd over F_p (p < 2^31), as residues in [0, p).
std::vector<unsigned long> gcd_mod(std::vector<unsigned long> a, std::vector<unsigned long> b, unsigned long p) {
  auto strip = [](std::vector<unsigned long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  while (!b.empty()) {
    const unsigned long inv = powmod_ul(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const unsigned long f = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + (p - f) * b[i]) % p;
      strip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const unsigned long inv = powmod_ul(a.back(), p - 2, p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

/// gcd of primitive integer polynomials of positive degree by reduction
/// modulo many primes and Chinese remaindering, confirmed by trial division.
ZPoly zgcd_modular(const ZPoly& a, const ZPoly& b) {
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  const UniPoly qa = from_zpoly(a), qb = from_zpoly(b);
  int best = static_cast<int>(std::min(a.size(), b.size()));
  ZPoly acc;  // residues in [0, modulus)
  mpz_class modulus = 0;
  ZPoly last;
  mpz_class candidate = 2147483648UL;  // 2^31
  for (;;) {
    do candidate -= 1;
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 25) == 0);
    const unsigned long p = candidate.get_ui();
    auto am = zreduce(a, p), bm = zreduce(b, p);
    if (am.size() != a.size() || bm.size() != b.size()) continue;
    auto g = gcd_mod(std::move(am), std::move(bm), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return ZPoly{1};
    if (dg > best) continue;  // unlucky prime
    if (dg < best) {
      best = dg;
      modulus = 0;
    }
    const unsigned long gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = c * gp % p;
    if (modulus == 0) {
      acc.assign(g.begin(), g.end());
      modulus = p;
    } else {
      mpz_class minv, pz = p;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      const unsigned long mi = minv.get_ui();
      for (std::size_t i = 0; i < acc.size(); ++i) {
        const unsigned long old = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
        const unsigned long t = (g[i] + p - old) % p * mi % p;
        acc[i] += modulus * t;
      }
      modulus *= p;
    }
    ZPoly sym = acc;
    const mpz_class half = modulus / 2;
    for (auto& c : sym)
      if (c > half) c -= modulus;
    if (sym == last) {
      zprimitive(sym);
      const UniPoly cand = from_zpoly(sym);
      if (qa.rem(cand).is_zero() && qb.rem(cand).is_zero()) return sym;
    }
    last = std::move(sym);
  }
}

/// True when a and b are certainly coprime: their images modulo a prime not
/// dividing either leading coefficient have a trivial gcd.
bool coprime_by_reduction(const ZPoly& a, const ZPoly& b) {
  for (unsigned long prime : {1000000007UL, 998244353UL}) {
    auto am = zreduce(a, prime), bm = zreduce(b, prime);
    if (am.size() != a.size() || bm.size() != b.size()) continue;
    return gcd_degree_mod(std::move(am), std::move(bm), prime) == 0;
  }
  return false;
}

/// Rational roots of a squarefree primitive integer polynomial with p(0) != 0.
std::vector<Rational> squarefree_rational_roots(const ZPoly& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<Rational> roots;
  if (n <= 0) return roots;
  if (n == 1) {
    roots.emplace_back(-p[0], p[1]);
    return roots;
  }
  if (n == 2) {
    mpz_class disc = p[1] * p[1] - 4 * p[0] * p[2];
    if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) return roots;
    mpz_class s = sqrt(disc);
    roots.emplace_back(-p[1] - s, 2 * p[2]);
    if (s != 0) roots.emplace_back(-p[1] + s, 2 * p[2]);
    return roots;
  }

  // Roots modulo a good prime, Hensel lifting, then rational reconstruction.
  ZPoly dp(p.size() - 1);
  for (int i = 1; i <= n; ++i) dp[i - 1] = p[i] * i;
  unsigned long prime = 0;
  std::vector<unsigned long> pm, dpm;
  mpz_class candidate = 1000;
  for (;;) {
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    prime = candidate.get_ui();
    pm = zreduce(p, prime);
    if (static_cast<int>(pm.size()) - 1 != n) continue;
    dpm = zreduce(dp, prime);
    if (gcd_degree_mod(pm, dpm, prime) == 0) break;
  }

  const mpz_class num_bound = abs(p.front());
  const mpz_class den_bound = abs(p.back());
  const mpz_class modulus_bound = 2 * num_bound * den_bound;

  for (unsigned long r = 0; r < prime; ++r) {
    unsigned long long acc = 0;
    for (auto it = pm.rbegin(); it != pm.rend(); ++it) acc = (acc * r + *it) % prime;
    if (acc != 0) continue;
    mpz_class root = r, q = prime;
    while (q <= modulus_bound) {
      mpz_class q2 = q * q;
      mpz_class fv = zeval_mod(p, root, q2);
      mpz_class dv = zeval_mod(dp, root, q2);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), q2.get_mpz_t()) == 0) break;
      root = root - fv * inv;
      mpz_mod(root.get_mpz_t(), root.get_mpz_t(), q2.get_mpz_t());
      q = q2;
    }
    // Rational reconstruction of root mod q with |a| <= num_bound, 0 < b <= den_bound.
    mpz_class r0 = q, r1 = root, s0 = 0, s1 = 1;
    while (abs(r1) > num_bound) {
      mpz_class quo = r0 / r1;
      mpz_class t = r0 - quo * r1;
      r0 = r1;
      r1 = t;
      t = s0 - quo * s1;
      s0 = s1;
      s1 = t;
    }
    mpz_class a = r1, b = s1;
    if (b < 0) {
      a = -a;
      b = -b;
    }
    if (b == 0 || b > den_bound) continue;
    if (zeval_homog(p, a, b) == 0) roots.emplace_back(a, b);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::z() { return monomial(1, 1); }
UniPoly UniPoly::linear(const Rational& root) { return UniPoly{-root, 1}; }

void UniPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Integer fast path: most polynomials in this library have integer coefficients.
  const bool ints = std::all_of(a.c_.begin(), a.c_.end(), [](const Rational& r) { return r.is_integer(); }) &&
                    std::all_of(b.c_.begin(), b.c_.end(), [](const Rational& r) { return r.is_integer(); });
  if (ints) {
    std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      const mpz_class& x = a.c_[i].num();
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), x.get_mpz_t(), b.c_[j].num().get_mpz_t());
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& x : acc) out.emplace_back(x);
    return UniPoly(std::move(out));
  }
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(x);
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (degree() < divisor.degree()) return {UniPoly(), *this};
  std::vector<mpq_class> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.raw());
  const int dd = divisor.degree();
  const mpq_class inv_lead = 1 / divisor.leading().raw();
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class f = r[i] * inv_lead;
    q[static_cast<std::size_t>(i - dd)] = Rational(f);
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * divisor.c_[j].raw();
  }
  std::vector<Rational> rem;
  for (int i = 0; i < dd; ++i) rem.emplace_back(r[i]);
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
  return q;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(1), base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UniPoly UniPoly::reversed(int as_degree) const {
  if (as_degree < degree()) throw InvalidArgument("reversal degree below polynomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(as_degree) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(as_degree - i)] = c_[static_cast<std::size_t>(i)];
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.raw() + it->raw();
  return Rational(acc);
}

std::pair<Rational, UniPoly> UniPoly::primitive() const {
  if (is_zero()) return {Rational(0), UniPoly()};
  ZPoly z = to_zpoly(*this);
  UniPoly p = from_zpoly(z);
  return {leading() / p.leading(), p};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(1);
  ZPoly za = to_zpoly(a), zb = to_zpoly(b);
  if (coprime_by_reduction(za, zb)) return UniPoly::constant(1);
  return from_zpoly(zgcd_modular(za, zb)).monic();
}

ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial();
  std::vector<std::pair<UniPoly, int>> out;
  if (a.degree() == 0) return out;
  // Yun's algorithm.
  UniPoly am = a.monic();
  UniPoly d = am.derivative();
  UniPoly c = poly_gcd(am, d);
  UniPoly w = am.exact_div(c);
  UniPoly y = d.exact_div(c);
  int k = 1;
  while (w.degree() > 0) {
    UniPoly zz = y - w.derivative();
    UniPoly g = poly_gcd(w, zz);
    if (g.degree() > 0) out.emplace_back(g, k);
    w = w.exact_div(g);
    y = zz.exact_div(g);
    ++k;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial();
  if (a.degree() <= 0) return UniPoly::constant(1);
  return a.monic().exact_div(poly_gcd(a, a.derivative()));
}

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial();
  std::vector<std::pair<Rational, int>> out;
  for (const auto& [g, k] : squarefree_decomposition(a)) {
    ZPoly p = to_zpoly(g);
    if (p.front() == 0) {
      out.emplace_back(Rational(0), k);
      p.erase(p.begin());
    }
    for (auto& r : squarefree_rational_roots(p)) out.emplace_back(r, k);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

int root_multiplicity(const UniPoly& a, const Rational& x) {
  if (a.is_zero()) throw ZeroPolynomial();
  int m = 0;
  UniPoly p = a;
  const UniPoly lin = UniPoly::linear(x);
  while (p.degree() > 0) {
    auto [q, r] = p.divmod(lin);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  ExtendedGcd e = poly_xgcd(a.rem(m), m);
  if (e.g.degree() != 0) throw DivisionByZero();
  return e.s.rem(m);
}

UniPoly residue_charpoly(const UniPoly& alpha, const UniPoly& modulus) {
  const int n = modulus.degree();
  if (n < 1) throw InvalidArgument("charpoly modulus must have positive degree");
  const UniPoly mon = modulus.monic();
  // Column j holds alpha * z^j mod modulus.
  std::vector<std::vector<mpq_class>> h(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  UniPoly col = alpha.rem(mon);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) h[i][j] = col.coeff(i).raw();
    col = (col * UniPoly::z()).rem(mon);
  }
  // Reduce to upper Hessenberg form by similarity transforms.
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (sgn(h[i][m - 1]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const mpq_class inv = 1 / h[m][m - 1];
    for (int i = m + 1; i < n; ++i) {
      if (sgn(h[i][m - 1]) == 0) continue;
      mpq_class u = h[i][m - 1] * inv;
      for (int j = 0; j < n; ++j) h[i][j] -= u * h[m][j];
      for (int r = 0; r < n; ++r) h[r][m] += u * h[r][i];
    }
  }
  // Characteristic polynomial of the Hessenberg matrix.
  std::vector<UniPoly> p;
  p.push_back(UniPoly::constant(1));
  for (int m = 1; m <= n; ++m) {
    UniPoly pm = UniPoly{Rational(mpq_class(-h[m - 1][m - 1])), Rational(1)} * p[m - 1];
    mpq_class t = 1;
    for (int i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      if (sgn(t) == 0) break;
      mpq_class f = t * h[m - i - 1][m - 1];
      if (sgn(f) != 0) pm -= p[m - i - 1] * Rational(f);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational& x = a.coeffs()[static_cast<std::size_t>(i)];
    const Rational& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace rgenus
