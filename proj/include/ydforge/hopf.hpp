#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ydforge/report.hpp"
#include "ydforge/svec.hpp"

namespace ydforge {

// A finite-dimensional (co/bi/Hopf) algebra by structure constants over the
// rational-function scalar field.
//
// mul[i][j] is the product e_i e_j; nullopt marks products a truncated
// algebra cannot determine (beyond its degree cap). comul[i] lives in H⊗H
// with row-major indices j*dim+k for e_j⊗e_k. antipode, when present, stores
// column j = image of e_j.
struct HopfData {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<std::string> params;
  std::vector<std::vector<std::optional<SVec>>> mul;
  SVec unit;
  std::vector<SVec> comul;
  std::vector<Scalar> counit;
  std::optional<std::vector<SVec>> antipode;

  // Degree bookkeeping for truncated algebras; not serialized.
  std::optional<int> degree_cap;
  std::vector<int> degrees;

  bool truncated() const;
  int degree_of(std::size_t i) const { return degrees.empty() ? 0 : degrees[i]; }
  std::string label(std::size_t i) const;
  std::vector<std::string> labels_of(const std::vector<std::size_t>& tuple) const;

  void validate() const;  // shape/invariant checks; throws InputError
};

// Arithmetic on sparse elements. multiply/comultiply throw DegreeCapExceeded
// when they hit an undefined product of a truncated algebra.
SVec multiply(const HopfData& H, const SVec& v, const SVec& w);
SVec comultiply(const HopfData& H, const SVec& v);
Scalar counit_of(const HopfData& H, const SVec& v);
SVec antipode_apply(const HopfData& H, const SVec& v);  // throws MissingAntipode

// Dense convenience overloads (vectors of length dim).
SVec to_svec(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const HopfData& H, const SVec& v);
SVec multiply(const HopfData& H, const std::vector<Scalar>& v, const std::vector<Scalar>& w);
SVec comultiply(const HopfData& H, const std::vector<Scalar>& v);

// Componentwise product on H^{⊗c}; c = 0 is the scalar slot (index 0).
SVec power_multiply(const HopfData& H, const SVec& v, const SVec& w, std::size_t c);

// Leftmost-iterated coproduct Δ^(m): H → H^{⊗m}; m = 0 is the counit into
// the scalar slot, m = 1 the identity.
SVec iterated_comul(const HopfData& H, const SVec& v, std::size_t m);

// Δ^(m)(e_i) unpacked into (basis tuple, coefficient) terms.
std::vector<std::pair<std::vector<std::size_t>, Scalar>> comul_splits(const HopfData& H,
                                                                      std::size_t i,
                                                                      std::size_t m);

// Linear map H^{⊗dom_pow} → H^{⊗cod_pow}; cols[j] = image of the j-th
// domain basis tuple (row-major). cod_pow = 0 encodes scalar-valued forms.
struct LinMap {
  std::size_t n = 0;
  std::size_t dom_pow = 1;
  std::size_t cod_pow = 1;
  std::vector<SVec> cols;

  std::size_t dom_dim() const { return int_pow(n, dom_pow); }
  std::size_t cod_dim() const { return int_pow(n, cod_pow); }
  SVec apply(const SVec& v) const;
  bool operator==(const LinMap& o) const;

  static LinMap identity(std::size_t n, std::size_t pow = 1);
};

LinMap compose(const LinMap& f, const LinMap& g);  // f after g
LinMap antipode_map(const HopfData& H);            // throws MissingAntipode

// Applies f: H⊗H → H⊗H at tensor slots (slot, slot+1) of an element of
// H^{⊗m}; mul_at instead contracts those two slots with the product,
// landing in H^{⊗(m-1)}.
SVec apply_at(const LinMap& f, const SVec& v, std::size_t m, std::size_t slot);
SVec mul_at(const HopfData& H, const SVec& v, std::size_t m, std::size_t slot);

// Convolution unit u^(c) ∘ ε^(d) of Hom(H^{⊗d}, H^{⊗c}).
LinMap conv_unit(const HopfData& H, std::size_t dom_pow, std::size_t cod_pow);

// Convolution f*g = m ∘ (f⊗g) ∘ Δ in Hom(H^{⊗d}, H^{⊗c}); f and g must share
// domain and codomain powers.
LinMap convolution(const HopfData& H, const LinMap& f, const LinMap& g);

// Two-sided convolution inverse, found by an exact linear solve and verified
// on both sides. Throws NotConvolutionInvertible.
LinMap convolution_inverse(const HopfData& H, const LinMap& f);

struct VerifyOptions {
  int jobs = 1;
};

// Tuple sweep with the first-failure witness policy: tuples are scanned in
// lexicographic order and the least failing tuple is reported. diff_fn
// returns lhs-rhs at the tuple (empty = pass) and may throw
// DegreeCapExceeded to skip tuples a truncated algebra cannot decide.
Check sweep_check(const std::string& name, const HopfData& H, std::size_t arity,
                  const std::function<SVec(const std::vector<std::size_t>&)>& diff_fn,
                  const VerifyOptions& opts = {});

VerificationReport check_bialgebra(const HopfData& H, const VerifyOptions& opts = {});
VerificationReport check_hopf(const HopfData& H, const VerifyOptions& opts = {});

// Applies a parameter substitution to every structure constant.
HopfData substitute_hopf(const HopfData& H, const std::map<std::string, Scalar>& bindings);

}  // namespace ydforge
