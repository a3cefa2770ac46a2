#include "ydforge/scalar.hpp"

#include <cassert>
#include <cctype>

#include "ydforge/errors.hpp"

namespace ydforge {

Scalar::Scalar(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  num_ = Poly(Int(c.get_num()));
  den_ = Poly(Int(c.get_den()));
}

Scalar::Scalar(const Poly& p) : num_(p), den_(1) { canonicalize(); }

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Rat cn = num_.content();
  Rat cd = den_.content();
  Poly pn = num_.primitive();
  Poly pd = den_.primitive();
  if (!pd.is_one() && !pn.is_one()) {
    Poly g = Poly::gcd(pn, pd);
    if (!g.is_one()) {
      pn = *pn.divided_by(g);
      pd = *pd.divided_by(g);
    }
  }
  Rat q = cn / cd;  // mpq keeps gcd(num,den)=1 and den>0
  num_ = Poly(Rat(q.get_num())) * pn;
  den_ = Poly(Rat(q.get_den())) * pd;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (den_.is_one() && o.den_.is_one()) {
    Scalar r;
    r.num_ = num_ + o.num_;
    r.den_ = Poly(1);
    if (r.num_.is_zero()) return Scalar();
    return r;
  }
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = Poly(1);
    return r;
  }
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  // Canonical invariants survive the swap except the denominator sign.
  if (r.den_.leading().second < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  Scalar b = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e) {
    if (e & 1u) r *= b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar eval_poly(const Poly& p, const std::map<std::string, Scalar>& bindings) {
  Scalar acc;
  for (const auto& [m, c] : p.terms()) {
    Scalar t{Rat(c)};
    for (const auto& [name, k] : m.e) {
      auto it = bindings.find(name);
      Scalar base = (it == bindings.end()) ? Scalar::param(name) : it->second;
      t *= base.pow(k);
    }
    acc += t;
  }
  return acc;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  Scalar n = eval_poly(num_, bindings);
  Scalar d = eval_poly(den_, bindings);
  if (d.is_zero()) throw EvaluationPole("substitution sends denominator of " + str() + " to zero");
  return n / d;
}

bool Scalar::divisible_by(const Poly& p) const {
  if (p.is_zero()) return is_zero();
  return num_.divided_by(p).has_value();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("scalar parse error at offset " + std::to_string(i) + ": " + what + " in \"" + s + "\"");
  }

  Scalar parse_expr() {
    Scalar v = parse_term();
    for (;;) {
      if (eat('+')) {
        v += parse_term();
      } else if (eat('-')) {
        v -= parse_term();
      } else {
        return v;
      }
    }
  }

  Scalar parse_term() {
    Scalar v = parse_unary();
    for (;;) {
      if (eat('*')) {
        v *= parse_unary();
      } else if (eat('/')) {
        Scalar d = parse_unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  Scalar parse_power() {
    Scalar base = parse_atom();
    if (eat('^')) {
      int k = parse_exponent();
      if (k < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(k);
    }
    return base;
  }

  int parse_exponent() {
    skip();
    bool neg = false;
    bool paren = eat('(');
    if (eat('-')) neg = true;
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer exponent");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) fail("exponent too large");
      ++i;
    }
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
  }

  Scalar parse_atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Scalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Int v(s.substr(i, j - i));
      i = j;
      return Scalar(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string name = s.substr(i, j - i);
      i = j;
      return Scalar::param(name);
    }
    fail("unexpected character");
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p(text);
  Scalar v = p.parse_expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace ydforge
