#include "rgenus/rational.hpp"

#include "rgenus/errors.hpp"

namespace rgenus {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto to_z = [&](std::string_view part) {
    mpz_class z;
    std::string s(part);
    if (s.empty() || z.set_str(s, 10) != 0) throw InvalidArgument("not a rational literal: " + std::string(text));
    return z;
  };
  if (slash == std::string_view::npos) return Rational(to_z(text));
  return Rational(to_z(text.substr(0, slash)), to_z(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_fraction_string() const { return num().get_str() + "/" + den().get_str(); }

}  // namespace rgenus
