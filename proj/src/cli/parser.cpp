#include "rgenus/parser.hpp"

#include <cctype>

#include "rgenus/errors.hpp"

namespace rgenus {

namespace {

using Node = std::shared_ptr<const Expr>;

Node make(Expr::Kind k, std::size_t pos, std::vector<Node> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Node run() {
    Node e = full();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Node full() {
    skip();
    const std::size_t at = i_;
    std::vector<Node> parts{expr()};
    while (accept('.')) parts.push_back(expr());
    return parts.size() == 1 ? parts[0] : make(Expr::Kind::Compose, at, std::move(parts));
  }

  Node expr() {
    Node left = term();
    for (;;) {
      skip();
      const std::size_t at = i_;
      if (accept('+')) left = make(Expr::Kind::Add, at, {left, term()});
      else if (accept('-')) left = make(Expr::Kind::Sub, at, {left, term()});
      else return left;
    }
  }

  Node term() {
    Node left = factor();
    for (;;) {
      skip();
      const std::size_t at = i_;
      if (accept('*')) left = make(Expr::Kind::Mul, at, {left, factor()});
      else if (accept('/')) left = make(Expr::Kind::Div, at, {left, factor()});
      else return left;
    }
  }

  Node factor() {
    skip();
    const std::size_t at = i_;
    if (accept('-')) return make(Expr::Kind::Neg, at, {factor()});
    Node b = base();
    skip();
    const std::size_t caret = i_;
    if (!accept('^')) return b;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->pos = caret;
    e->exponent = exponent();
    e->args = {b};
    return e;
  }

  long exponent() {
    skip();
    const std::size_t at = i_;
    if (accept('(')) {
      long v = signed_integer(at);
      if (!accept(')')) throw NonIntegerExponent(at);
      return v;
    }
    return signed_integer(at);
  }

  long signed_integer(std::size_t at) {
    skip();
    bool neg = accept('-');
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) throw NonIntegerExponent(at);
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ - start > 6) throw SyntaxError("exponent too large", start);
    long v = std::stol(s_.substr(start, i_ - start));
    return neg ? -v : v;
  }

  Node base() {
    skip();
    const std::size_t at = i_;
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == 'z') {
      ++i_;
      return make(Expr::Kind::Var, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = at;
      e->value = Rational(mpz_class(s_.substr(at, i_ - at)));
      return e;
    }
    if (accept('(')) {
      Node inner = full();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

bool is_zero_map(const RationalMap& m) { return m.num().is_zero(); }

}  // namespace

std::shared_ptr<const Expr> parse_tree(const std::string& src) { return Parser(src).run(); }

RationalMap lower(const Expr& e) {
  auto arg = [&](std::size_t k) { return lower(*e.args[k]); };
  switch (e.kind) {
    case Expr::Kind::Number: return constant_map(e.value);
    case Expr::Kind::Var: return RationalMap();
    case Expr::Kind::Neg: return -arg(0);
    case Expr::Kind::Add: return arg(0) + arg(1);
    case Expr::Kind::Sub: return arg(0) - arg(1);
    case Expr::Kind::Mul: return arg(0) * arg(1);
    case Expr::Kind::Div: {
      RationalMap d = arg(1);
      if (is_zero_map(d)) throw DivisionByZeroConstant(e.pos);
      return arg(0) / d;
    }
    case Expr::Kind::Pow: {
      RationalMap b = arg(0);
      if (e.exponent < 0 && is_zero_map(b)) throw DivisionByZeroConstant(e.pos);
      return power(b, static_cast<int>(e.exponent));
    }
    case Expr::Kind::Compose: {
      std::vector<RationalMap> parts;
      for (std::size_t k = 0; k < e.args.size(); ++k) parts.push_back(arg(k));
      return compose_all(parts);
    }
  }
  throw InvariantViolation("unknown expression node");
}

RationalMap parse_expr(const std::string& src) { return lower(*parse_tree(src)); }

}  // namespace rgenus
