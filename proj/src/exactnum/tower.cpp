#include "rgenus/tower.hpp"

#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

TowerValue leaf(const Rational& r) { return TowerValue{r, {}}; }

}  // namespace

Tower Tower::over_rationals(const UniPoly& defining) {
  if (defining.degree() < 1) throw InvalidArgument("defining polynomial must be nonconstant");
  if (poly_gcd(defining, defining.derivative()).degree() > 0)
    throw InvalidArgument("defining polynomial is not squarefree");
  Tower t;
  TowerPoly m;
  const UniPoly monic = defining.monic();
  for (const auto& c : monic.coeffs()) m.push_back(leaf(c));
  t.defining_.push_back(std::move(m));
  return t;
}

Tower Tower::extend(const TowerPoly& defining) const {
  const int level = depth();
  if (level + 1 > kMaxDepth) throw DepthExceeded(level + 1);
  TowerPoly m = pnormalize(defining, level);
  if (pdegree(m) < 1) throw InvalidArgument("defining polynomial must be nonconstant");
  m = pmonic(m, level);
  if (pdegree(pgcd(m, pderiv(m, level), level)) > 0)
    throw InvalidArgument("defining polynomial is not squarefree");
  Tower t = *this;
  t.defining_.push_back(std::move(m));
  return t;
}

UniPoly Tower::base_polynomial() const {
  std::vector<Rational> c;
  for (const auto& v : defining(1)) c.push_back(v.leaf);
  return UniPoly(std::move(c));
}

Tower Tower::refine(int level, const TowerPoly& factor) const {
  if (level < 1 || level > depth()) throw InvalidArgument("no such tower level");
  Tower t = *this;
  t.defining_[static_cast<std::size_t>(level - 1)] = factor;
  for (int l = level + 1; l <= depth(); ++l) {
    auto& m = t.defining_[static_cast<std::size_t>(l - 1)];
    m = t.pnormalize(m, l - 1);
  }
  return t;
}

TowerValue Tower::from_rational(const Rational& r, int level) const {
  if (level == 0) return leaf(r);
  if (r.is_zero()) return {};
  return reduce(TowerPoly{from_rational(r, level - 1)}, level);
}

TowerValue Tower::generator(int level) const {
  if (level < 1) throw InvalidArgument("level 0 has no generator");
  return reduce(TowerPoly{TowerValue{}, from_rational(1, level - 1)}, level);
}

TowerValue Tower::from_base_poly(const UniPoly& p) const {
  TowerPoly c;
  for (const auto& x : p.coeffs()) c.push_back(leaf(x));
  return reduce(std::move(c), 1);
}

bool Tower::is_zero(const TowerValue& a, int level) const {
  return level == 0 ? a.leaf.is_zero() : a.coeffs.empty();
}

TowerValue Tower::add(const TowerValue& a, const TowerValue& b, int level) const {
  if (level == 0) return leaf(a.leaf + b.leaf);
  return TowerValue{0, padd(a.coeffs, b.coeffs, level - 1)};
}

TowerValue Tower::sub(const TowerValue& a, const TowerValue& b, int level) const {
  if (level == 0) return leaf(a.leaf - b.leaf);
  return TowerValue{0, psub(a.coeffs, b.coeffs, level - 1)};
}

TowerValue Tower::neg(const TowerValue& a, int level) const { return sub(TowerValue{}, a, level); }

TowerValue Tower::mul(const TowerValue& a, const TowerValue& b, int level) const {
  if (level == 0) return leaf(a.leaf * b.leaf);
  return reduce(pmul(a.coeffs, b.coeffs, level - 1), level);
}

TowerValue Tower::normalize(const TowerValue& a, int level) const {
  if (level == 0) return leaf(a.leaf);
  return reduce(pnormalize(a.coeffs, level - 1), level);
}

TowerValue Tower::reduce(TowerPoly p, int level) const {
  const int below = level - 1;
  pstrip(p, below);
  const TowerPoly& m = defining(level);
  const int dm = pdegree(m);
  while (pdegree(p) >= dm) {
    const int shift = pdegree(p) - dm;
    const TowerValue lead = p.back();
    for (int i = 0; i < dm; ++i) {
      auto& slot = p[static_cast<std::size_t>(i + shift)];
      slot = sub(slot, mul(lead, m[static_cast<std::size_t>(i)], below), below);
    }
    p.pop_back();
    pstrip(p, below);
  }
  return TowerValue{0, std::move(p)};
}

TowerValue Tower::inverse(const TowerValue& a, int level) const {
  if (is_zero(a, level)) throw DivisionByZero();
  if (level == 0) return leaf(a.leaf.inverse());
  const int below = level - 1;
  const TowerPoly& m = defining(level);
  // Extended Euclid on (m, a), tracking only the cofactor of a.
  TowerPoly r0 = m, r1 = a.coeffs;
  TowerPoly s0, s1{from_rational(1, below)};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(r0, r1, below);
    TowerPoly s = psub(s0, pmul(q, s1, below), below);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (pdegree(r0) == 0) return reduce(pscale(s0, inverse(r0[0], below), below), level);
  TowerSplit split;
  split.level = level;
  split.factor = pmonic(r0, below);
  split.cofactor = pexact_div(m, split.factor, below);
  throw split;
}

void Tower::pstrip(TowerPoly& a, int level) const {
  while (!a.empty() && is_zero(a.back(), level)) a.pop_back();
}

TowerPoly Tower::pnormalize(const TowerPoly& a, int level) const {
  TowerPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(normalize(c, level));
  pstrip(out, level);
  return out;
}

TowerPoly Tower::padd(const TowerPoly& a, const TowerPoly& b, int level) const {
  TowerPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i >= a.size()) out[i] = b[i];
    else if (i >= b.size()) out[i] = a[i];
    else out[i] = add(a[i], b[i], level);
  }
  pstrip(out, level);
  return out;
}

TowerPoly Tower::psub(const TowerPoly& a, const TowerPoly& b, int level) const {
  TowerPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i >= b.size()) out[i] = a[i];
    else if (i >= a.size()) out[i] = neg(b[i], level);
    else out[i] = sub(a[i], b[i], level);
  }
  pstrip(out, level);
  return out;
}

TowerPoly Tower::pmul(const TowerPoly& a, const TowerPoly& b, int level) const {
  if (a.empty() || b.empty()) return {};
  TowerPoly out(a.size() + b.size() - 1, from_rational(0, level));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i], level)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j], level), level);
  }
  pstrip(out, level);
  return out;
}

TowerPoly Tower::pscale(const TowerPoly& a, const TowerValue& s, int level) const {
  TowerPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(mul(c, s, level));
  pstrip(out, level);
  return out;
}

TowerPoly Tower::pderiv(const TowerPoly& a, int level) const {
  TowerPoly out;
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(mul(from_rational(static_cast<long>(i), level), a[i], level));
  pstrip(out, level);
  return out;
}

TowerPoly Tower::pmonic(const TowerPoly& a, int level) const {
  if (a.empty()) throw ZeroPolynomial();
  return pscale(a, inverse(a.back(), level), level);
}

std::pair<TowerPoly, TowerPoly> Tower::pdivmod(const TowerPoly& a, const TowerPoly& b, int level) const {
  if (b.empty()) throw DivisionByZero();
  const TowerValue inv = inverse(b.back(), level);
  const int db = pdegree(b);
  TowerPoly r = a;
  pstrip(r, level);
  TowerPoly q(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, from_rational(0, level));
  while (pdegree(r) >= db) {
    const int shift = pdegree(r) - db;
    const TowerValue c = mul(r.back(), inv, level);
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i < db; ++i) {
      auto& slot = r[static_cast<std::size_t>(i + shift)];
      slot = sub(slot, mul(c, b[static_cast<std::size_t>(i)], level), level);
    }
    r.pop_back();
    pstrip(r, level);
  }
  pstrip(q, level);
  return {std::move(q), std::move(r)};
}

TowerPoly Tower::pexact_div(const TowerPoly& a, const TowerPoly& b, int level) const {
  auto [q, r] = pdivmod(a, b, level);
  if (!r.empty()) throw InvariantViolation("inexact polynomial division in tower");
  return q;
}

TowerPoly Tower::pgcd(const TowerPoly& a, const TowerPoly& b, int level) const {
  TowerPoly x = pnormalize(a, level), y = pnormalize(b, level);
  while (!y.empty()) {
    TowerPoly r = pdivmod(x, y, level).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.empty() ? x : pmonic(x, level);
}

namespace {

void require_same(const TowerElement& a, const TowerElement& b) {
  if (a.level != b.level || !(a.context == b.context))
    throw InvalidArgument("tower elements live in different contexts");
}

}  // namespace

TowerElement TowerElement::operator+(const TowerElement& o) const {
  require_same(*this, o);
  return {context, level, context.add(value, o.value, level)};
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  require_same(*this, o);
  return {context, level, context.sub(value, o.value, level)};
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  require_same(*this, o);
  return {context, level, context.mul(value, o.value, level)};
}

std::variant<TowerElement, Split> tower_invert(const TowerElement& x) {
  try {
    return TowerElement{x.context, x.level, x.context.inverse(x.value, x.level)};
  } catch (const TowerSplit& s) {
    return Split{s.level, x.context.refine(s.level, s.factor), x.context.refine(s.level, s.cofactor)};
  }
}

TowerElement project(const TowerElement& x, const Tower& refined) {
  return {refined, x.level, refined.normalize(x.value, x.level)};
}

}  // namespace rgenus
