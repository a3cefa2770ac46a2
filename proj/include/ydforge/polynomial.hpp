#pragma once

// Sparse multivariate polynomials with rational coefficients, ordered by
// graded lexicographic order on the parameter names.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ydforge/errors.hpp"

namespace ydforge {

using Int = mpz_class;
using Rat = mpq_class;

// Power product of named parameters; exponents are strictly positive.
struct Monomial {
  std::vector<std::pair<std::string, int>> e;  // sorted by name

  int degree() const;
  bool is_one() const { return e.empty(); }
  int exponent(const std::string& name) const;

  static Monomial one() { return {}; }
  static Monomial var(const std::string& name, int exp = 1);

  Monomial operator*(const Monomial& o) const;
  // Exact division; nullopt if some exponent would go negative.
  std::optional<Monomial> divided_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lex: first total degree, then lexicographic with variables compared
// by name; a higher exponent on the alphabetically first differing name wins.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

class Poly {
 public:
  Poly() = default;
  Poly(long v) : Poly(Rat(v)) {}
  Poly(const Int& v) : Poly(Rat(v)) {}
  Poly(const Rat& v);
  static Poly var(const std::string& name, int exp = 1);
  static Poly term(const Rat& c, const Monomial& m);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Requires is_constant().
  Rat constant_value() const;
  int degree() const;
  std::size_t term_count() const { return t_.size(); }
  const std::map<Monomial, Rat, MonoLess>& terms() const { return t_; }
  std::set<std::string> vars() const;
  bool contains_var(const std::string& name) const;

  std::pair<Monomial, Rat> leading() const;  // requires nonzero

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // p == content()*primitive(): content carries the sign of the leading
  // coefficient, so primitive() has coprime integer coefficients and a
  // positive leading coefficient. Zero has content 0 and primitive 0.
  Rat content() const;
  Poly primitive() const;

  // Exact polynomial quotient, or nullopt when the division does not come
  // out even. Divisor must be nonzero.
  std::optional<Poly> divided_by(const Poly& d) const;

  // Gcd of the primitive parts: primitive with positive leading coefficient.
  // gcd(0,0) == 0.
  static Poly gcd(const Poly& a, const Poly& b);

  std::string str() const;

  void add_term(const Rat& c, const Monomial& m);  // accumulate, dropping zeros

 private:
  std::map<Monomial, Rat, MonoLess> t_;
};

}  // namespace ydforge
