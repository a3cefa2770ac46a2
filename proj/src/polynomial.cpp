#include "ydforge/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace ydforge {

int Monomial::degree() const {
  int d = 0;
  for (const auto& [n, k] : e) d += k;
  return d;
}

int Monomial::exponent(const std::string& name) const {
  for (const auto& [n, k] : e)
    if (n == name) return k;
  return 0;
}

Monomial Monomial::var(const std::string& name, int exp) {
  Monomial m;
  if (exp != 0) m.e.emplace_back(name, exp);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
      r.e.push_back(e[i++]);
    } else if (i == e.size() || o.e[j].first < e[i].first) {
      r.e.push_back(o.e[j++]);
    } else {
      int k = e[i].second + o.e[j].second;
      if (k != 0) r.e.emplace_back(e[i].first, k);
      ++i, ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
      r.e.push_back(e[i++]);
    } else if (i == e.size() || o.e[j].first < e[i].first) {
      return std::nullopt;  // divisor has a variable we lack
    } else {
      int k = e[i].second - o.e[j].second;
      if (k < 0) return std::nullopt;
      if (k > 0) r.e.emplace_back(e[i].first, k);
      ++i, ++j;
    }
  }
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Walk the union of names in ascending order; the first position where the
  // exponents differ decides, larger exponent meaning larger monomial.
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first) {
      // a has positive exponent on an earlier name, b has zero there
      return false;
    }
    if (b.e[j].first < a.e[i].first) return true;
    if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
    ++i, ++j;
  }
  if (i < a.e.size()) return false;
  if (j < b.e.size()) return true;
  return false;
}

Poly::Poly(const Rat& v) {
  if (v != 0) t_.emplace(Monomial::one(), v);
}

Poly Poly::var(const std::string& name, int exp) {
  Poly p;
  p.t_.emplace(Monomial::var(name, exp), Rat(1));
  return p;
}

Poly Poly::term(const Rat& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

Rat Poly::constant_value() const {
  if (t_.empty()) return Rat(0);
  assert(is_constant());
  return t_.begin()->second;
}

int Poly::degree() const {
  if (t_.empty()) return -1;
  return t_.rbegin()->first.degree();
}

std::set<std::string> Poly::vars() const {
  std::set<std::string> s;
  for (const auto& [m, c] : t_)
    for (const auto& [n, k] : m.e) s.insert(n);
  return s;
}

bool Poly::contains_var(const std::string& name) const {
  for (const auto& [m, c] : t_)
    if (m.exponent(name) > 0) return true;
  return false;
}

std::pair<Monomial, Rat> Poly::leading() const {
  assert(!t_.empty());
  return *t_.rbegin();
}

void Poly::add_term(const Rat& c, const Monomial& m) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(c, m);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(-c, m);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(c1 * c2, m1 * m2);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1);
  Poly b = *this;
  while (k) {
    if (k & 1u) r *= b;
    b = b * b;
    k >>= 1u;
  }
  return r;
}

Rat Poly::content() const {
  if (t_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : t_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (t_.rbegin()->second < 0) c = -c;
  return c;
}

Poly Poly::primitive() const {
  if (t_.empty()) return Poly();
  Rat c = content();
  Poly r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v / c);
  return r;
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
  assert(!d.is_zero());
  Poly q;
  Poly r = *this;
  auto [dm, dc] = d.leading();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading();
    auto m = rm.divided_by(dm);
    if (!m) return std::nullopt;
    Poly t = Poly::term(rc / dc, *m);
    q += t;
    r -= t * d;
  }
  return q;
}

namespace {

// Helpers for the recursive primitive-PRS gcd on integer-coefficient polys.

int deg_wrt(const Poly& p, const std::string& x) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(x));
  return d;
}

// Coefficient of x^k, as a polynomial in the remaining variables.
Poly coeff_wrt(const Poly& p, const std::string& x, int k) {
  Poly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(x) != k) continue;
    Monomial rest;
    for (const auto& [n, e] : m.e)
      if (n != x) rest.e.emplace_back(n, e);
    r.add_term(c, rest);
  }
  return r;
}

Poly times_x_pow(const Poly& p, const std::string& x, int k) {
  if (k == 0) return p;
  return p * Poly::var(x, k);
}

Poly gcd_int(const Poly& a, const Poly& b);

// Gcd of the x-coefficients (content with respect to x).
Poly content_wrt(const Poly& p, const std::string& x) {
  Poly c;
  int d = deg_wrt(p, x);
  for (int k = 0; k <= d; ++k) {
    Poly ck = coeff_wrt(p, x, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? gcd_int(ck, Poly()) : gcd_int(c, ck);
    if (c.is_one()) return c;
  }
  return c;
}

// Pseudo-remainder of a by b with respect to x; requires deg_x(b) >= 1.
Poly prem(Poly r, const Poly& b, const std::string& x) {
  int db = deg_wrt(b, x);
  Poly lb = coeff_wrt(b, x, db);
  while (!r.is_zero()) {
    int dr = deg_wrt(r, x);
    if (dr < db) break;
    Poly lr = coeff_wrt(r, x, dr);
    r = lb * r - times_x_pow(lr * b, x, dr - db);
  }
  return r;
}

// Primitive PRS gcd in the main variable x. Correct but can blow up on
// coefficients; only used when the heuristic gcd gives up.
Poly prs_gcd(const Poly& a, const Poly& b, const std::string& x) {
  Poly ca = content_wrt(a, x);
  Poly cb = content_wrt(b, x);
  Poly pa = *a.divided_by(ca);
  Poly pb = *b.divided_by(cb);
  Poly c = gcd_int(ca, cb);

  if (deg_wrt(pa, x) < deg_wrt(pb, x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, x);
    pa = pb;
    if (r.is_zero()) {
      pb = Poly();
    } else {
      pb = *r.divided_by(content_wrt(r, x));
    }
  }
  return (c * pa).primitive();
}

Int max_abs_coeff(const Poly& p) {
  Int m(0);
  for (const auto& [mon, c] : p.terms()) {
    Int a = c.get_num();
    mpz_abs(a.get_mpz_t(), a.get_mpz_t());
    if (a > m) m = a;
  }
  return m;
}

// Substitute x := xi, keeping the remaining variables symbolic.
Poly eval_var_at(const Poly& p, const std::string& x, const Int& xi) {
  std::map<int, Int> pows;
  Poly r;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(x);
    Monomial rest;
    for (const auto& [n, k] : m.e)
      if (n != x) rest.e.emplace_back(n, k);
    if (e == 0) {
      r.add_term(c, rest);
      continue;
    }
    auto it = pows.find(e);
    if (it == pows.end()) {
      Int v;
      mpz_pow_ui(v.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
      it = pows.emplace(e, v).first;
    }
    r.add_term(c * Rat(it->second), rest);
  }
  return r;
}

// Pops the balanced base-xi digit of every coefficient of gamma; what
// remains in gamma is the carry.
Poly balanced_digit(Poly& gamma, const Int& xi) {
  Poly digit, carry;
  for (const auto& [m, c] : gamma.terms()) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
    if (r * 2 >= xi) r -= xi;
    if (r != 0) digit.add_term(Rat(r), m);
    Int q = c.get_num() - r;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
    if (q != 0) carry.add_term(Rat(q), m);
  }
  gamma = carry;
  return digit;
}

Poly abs_poly(const Poly& p) { return p.leading().second < 0 ? -p : p; }

Int int_content_abs(const Poly& p) {
  Rat c = p.content();
  Int g = c.get_num();
  mpz_abs(g.get_mpz_t(), g.get_mpz_t());
  return g;
}

// Heuristic gcd over the integers, content included: evaluate the top
// variable at a large integer, gcd the images, lift the result back through
// its balanced base-xi digits, and accept only if it divides both inputs.
std::optional<Poly> heu_zgcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : abs_poly(b);
  if (b.is_zero()) return abs_poly(a);
  if (a.is_constant() || b.is_constant()) {
    Int g;
    Int ca = int_content_abs(a), cb = int_content_abs(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly(g);
  }
  auto va = a.vars();
  auto vb = b.vars();
  std::string x = *va.rbegin();
  if (!vb.empty() && *vb.rbegin() > x) x = *vb.rbegin();

  Int na = max_abs_coeff(a), nb = max_abs_coeff(b);
  Int xi = 2 * std::min(na, nb) + 29;
  for (int tries = 0; tries < 6; ++tries) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > (1u << 20)) return std::nullopt;
    auto gamma = heu_zgcd(eval_var_at(a, x, xi), eval_var_at(b, x, xi));
    if (gamma) {
      Poly g;
      int e = 0;
      while (!gamma->is_zero()) {
        Poly digit = balanced_digit(*gamma, xi);
        if (!digit.is_zero()) g += times_x_pow(digit, x, e);
        ++e;
      }
      if (!g.is_zero()) {
        Poly gp = g.primitive();
        if (a.divided_by(gp) && b.divided_by(gp)) {
          Int cg;
          Int ca = int_content_abs(a), cb = int_content_abs(b);
          mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
          return Poly(cg) * gp;
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Primitive positive gcd of integer-coefficient polynomials.
Poly gcd_int(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) {
    // Both sides contribute only their integer content.
    Int g(0);
    Rat ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_num().get_mpz_t(), cb.get_num().get_mpz_t());
    mpz_abs(g.get_mpz_t(), g.get_mpz_t());
    return Poly(g);
  }
  if (auto g = heu_zgcd(a, b)) return g->primitive();

  auto va = a.vars();
  auto vb = b.vars();
  std::string x = *va.rbegin();
  if (!vb.empty() && *vb.rbegin() > x) x = *vb.rbegin();
  return prs_gcd(a, b, x);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  return gcd_int(a.primitive(), b.primitive());
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending graded-lex order: leading term first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = c < 0 ? Rat(-c) : c;
    std::string body;
    if (m.is_one()) {
      body = ac.get_str();
    } else {
      if (ac != 1) body = ac.get_str() + "*";
      bool fv = true;
      for (const auto& [n, k] : m.e) {
        if (!fv) body += "*";
        fv = false;
        body += n;
        if (k != 1) body += "^" + std::to_string(k);
      }
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? "-" : "+") + body;
    }
  }
  return out;
}

}  // namespace ydforge
