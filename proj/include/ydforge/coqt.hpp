#pragma once

#include <vector>

#include "ydforge/hopf.hpp"
#include "ydforge/presentation.hpp"
#include "ydforge/report.hpp"
#include "ydforge/scalar.hpp"

namespace ydforge {

// Bilinear form H⊗H → k stored on basis pairs and extended bilinearly.
struct BilinearForm {
  std::size_t n = 0;
  std::vector<std::vector<Scalar>> values;  // values[i][j] on e_i ⊗ e_j

  static BilinearForm zero(std::size_t n);
  // ε⊗ε, the convolution unit among bilinear forms.
  static BilinearForm counit_square(const HopfData& H);

  const Scalar& eval(std::size_t i, std::size_t j) const { return values[i][j]; }
  Scalar eval(const SVec& v, const SVec& w) const;
  BilinearForm transpose() const;
  LinMap to_linmap() const;  // dom_pow 2, cod_pow 0
  static BilinearForm from_linmap(const LinMap& f);
  bool operator==(const BilinearForm& o) const { return n == o.n && values == o.values; }
};

// Convolution inverse of the form, verified on both sides.
// Throws NotConvolutionInvertible.
BilinearForm inverse_form(const HopfData& H, const BilinearForm& R);

// Braiding compatibility laws between a form and the bialgebra structure:
// convolution invertibility, the exchange law coqt1 and the product laws
// coqt2/coqt3, plus the primed counterparts for the computed inverse.
VerificationReport check_coqt(const HopfData& H, const BilinearForm& R,
                              const VerifyOptions& opts = {});

// Quantum Yang-Baxter equation for the form and for its inverse.
VerificationReport check_ybe(const HopfData& H, const BilinearForm& R,
                             const VerifyOptions& opts = {});

// Whether the convolution inverse equals the opposite form entrywise.
bool is_cotriangular(const HopfData& H, const BilinearForm& R);

// R(S(a)⊗b) = R⁻¹(a⊗b), R⁻¹(a⊗S(b)) = R(a⊗b), and the two-slot variants
// for both the form and its inverse. Throws MissingAntipode.
VerificationReport antipode_R_identities(const HopfData& H, const BilinearForm& R,
                                         const VerifyOptions& opts = {});

// Three booleans as named checks: sigma_squared (σ² = Id for the bicomodule
// braiding), killing_commutes (Id*(Rᵒᵖ*R) = (Rᵒᵖ*R)*Id), and cotriangular.
VerificationReport killing_involutivity(const HopfData& H, const BilinearForm& R,
                                        const VerifyOptions& opts = {});

// a⊗b ↦ b₁⊗a₁·R(a₂⊗b₂) on H⊗H.
LinMap braiding_comodule(const HopfData& H, const BilinearForm& R);

struct BraidingPair {
  LinMap sigma;
  LinMap sigma_inverse;
};

// a⊗b ↦ R⁻¹(a₁⊗b₁)·b₂⊗a₂·R(a₃⊗b₃) together with its printed inverse;
// both compositions are verified to be the identity before returning.
BraidingPair braiding_bicomodule(const HopfData& H, const BilinearForm& R);

// Braiding-operator laws br1/br2 (unit exchange), br3/br4 (product
// compatibility) and the braid equation on triples.
VerificationReport check_br_axioms(const HopfData& H, const LinMap& sigma,
                                   const VerifyOptions& opts = {});

// Extends generator-pair values to all basis pairs through the product laws
// (the primed flag uses the inverse-form laws instead). Requires every
// generator coproduct component to be a generator or the unit.
BilinearForm extend_bilinear_form(const RewriteEngine& E, const HopfData& H,
                                  const std::vector<std::vector<Scalar>>& gen_values,
                                  bool primed = false);

}  // namespace ydforge
