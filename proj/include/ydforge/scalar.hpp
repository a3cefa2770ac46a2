#pragma once

// Exact scalars: rational functions in named parameters over Q, kept in a
// canonical form so that equality is representational equality.
//
// Canonical form: num/den with integer-coefficient polynomials such that
//  - den != 0 and its leading coefficient (graded lex) is positive,
//  - the primitive parts of num and den are coprime,
//  - the integer contents of num and den are coprime,
//  - zero is 0/1.

#include <map>
#include <string>

#include "ydforge/polynomial.hpp"

namespace ydforge {

class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}
  Scalar(const Int& v) : num_(v), den_(1) {}
  Scalar(const Rat& v);
  explicit Scalar(const Poly& p);
  Scalar(const Poly& num, const Poly& den);

  static Scalar param(const std::string& name) { return Scalar(Poly::var(name)); }
  // Parse the canonical textual form (also accepts general +,-,*,/,^ input).
  static Scalar parse(const std::string& text);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
  Scalar inverse() const;  // throws DivisionByZero
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  // Evaluation homomorphism: replace parameters by scalars (parameters not
  // bound stay symbolic). Throws EvaluationPole if the denominator vanishes.
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

  // True iff p divides the numerator exactly. Intended for use when the
  // denominator is coprime to p (verified).
  bool divisible_by(const Poly& p) const;

 private:
  Poly num_, den_;
  void canonicalize();
};

Scalar eval_poly(const Poly& p, const std::map<std::string, Scalar>& bindings);

}  // namespace ydforge
