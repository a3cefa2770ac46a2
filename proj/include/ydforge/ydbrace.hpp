#pragma once

// Transmutation and Yetter-Drinfeld braces: a second product and antipode on
// a Hopf algebra, obtained from a module-coalgebra action or from a universal
// form, together with the laws the pair must satisfy, the matched pair it
// induces, the bosonisation of the result, and 1-cocycles into a module
// algebra.
//
// Notation in the comments: * is the first product with antipode T, . is the
// second product with antipode S, -> and <- are the derived left and right
// actions, Ad is the left adjoint coaction a -> a1 * T(a3) (x) a2.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ydforge/coqt.hpp"
#include "ydforge/hopf.hpp"
#include "ydforge/matched_pairs.hpp"
#include "ydforge/report.hpp"
#include "ydforge/svec.hpp"

namespace ydforge {

// Product values on basis pairs; a missing cell is hidden by the degree cap.
using ProductTable = std::vector<std::vector<std::optional<SVec>>>;

// A left coaction x -> x(-1) (x) x(0), one sparse value in H (x) H per basis
// element with the pair (j, k) packed as j*n + k. A missing value is hidden
// by the degree cap.
struct CoactionTensor {
  std::size_t n = 0;
  std::vector<std::optional<SVec>> values;

  // x -> 1 (x) x.
  static CoactionTensor trivial(const HopfData& H);

  bool operator==(const CoactionTensor&) const = default;
};

// Linear extension of a coaction table. Throws DegreeCapExceeded when a
// needed value is missing.
SVec coact(const CoactionTensor& rho, const SVec& v);

// A Hopf algebra carrying a second product and antipode on the same
// coalgebra, plus the derived data the laws are phrased in. Build instances
// with make_yd_brace so the caches are filled; treat them as immutable.
struct YDBraceData {
  HopfData H;            // first structure, must carry the antipode T
  ProductTable dot_mul;  // second product
  std::vector<SVec> S;   // second antipode, column j = image of e_j

  // caches, filled at construction
  ProductTable left;   // a -> b = S(a1) . (a2 * b)
  ProductTable right;  // a <- b = T(a1 -> b1) * a2 * b2
  CoactionTensor adl;  // Ad: a -> a1 * T(a3) (x) a2
};

// Validates shapes, demands that the first structure passes check_hopf
// (PreconditionFail naming the first failed law), and fills the caches;
// cache cells hidden by the degree cap stay empty. Throws MissingAntipode /
// ShapeError.
YDBraceData make_yd_brace(const HopfData& H, ProductTable dot_mul, std::vector<SVec> S,
                          const VerifyOptions& opts = {});

// Bilinear extension of the second product and linear extension of S. dot
// throws DegreeCapExceeded when a needed cell is missing.
SVec dot(const YDBraceData& D, const SVec& v, const SVec& w);
SVec dot_antipode(const YDBraceData& D, const SVec& v);

// The transmuted product a.b = a1 * (T(a2) -> b) of a left module-coalgebra
// action. Verifies the action first (PreconditionFail naming the failed law)
// and then that the first product is recovered as a*b = a1 . (a2 -> b)
// (PreconditionFail otherwise). Cells hidden by the degree cap stay empty.
// Throws MissingAntipode / ShapeError.
ProductTable transmute_product(const HopfData& H, const ActionTensor& left,
                               const VerifyOptions& opts = {});

// The transmuted antipode S(a) = a1 -> T(a2) of the same action, under the
// same preconditions.
std::vector<SVec> transmute_antipode(const HopfData& H, const ActionTensor& left,
                                     const VerifyOptions& opts = {});

// Transmuted product and antipode read off a universal form:
//   a.b  = Rinv(a1 * T(a3) (x) b1) b2 * a2,
//   S(a) = R(a1 (x) a5) R(a2 (x) T(a3)) T(a4).
// The form is assumed to satisfy the coquasitriangularity laws; both results
// are cross-checked against the route through actions_from_R, and a
// disagreement throws PreconditionFail. The convolution inverse of the form
// is computed here (NotConvolutionInvertible propagates). Throws
// MissingAntipode / ShapeError.
std::pair<ProductTable, std::vector<SVec>> transmute_from_R(const HopfData& H,
                                                            const BilinearForm& R);

// Ad: a -> a1 * T(a3) (x) a2. Values hidden by the degree cap stay empty.
// Throws MissingAntipode.
CoactionTensor adjoint_coaction(const HopfData& H);

// The braiding a (x) b -> ((a1 * T(a3)) -> b) (x) a2 induced by a left
// action together with Ad. Throws MissingAntipode / ShapeError;
// DegreeCapExceeded propagates.
LinMap yd_braiding(const HopfData& H, const ActionTensor& left);

// Module laws, comodule laws, and their compatibility
//   rho(a -> x) = a1 * x(-1) * T(a3) (x) (a2 -> x(0))
// for a left action and a left coaction: action_unit, action_associativity,
// coaction_counit, coaction_coassociativity, yd. Throws MissingAntipode /
// ShapeError.
VerificationReport check_yd_module(const HopfData& H, const ActionTensor& act,
                                   const CoactionTensor& rho, const VerifyOptions& opts = {});

// The full law set for a brace. The second product is associative and unital
// (dot_associativity, dot_unit) and S inverts the identity on both sides
// under its convolution (dot_antipode_left, dot_antipode_right). The derived
// left action is a module action (harpoon_unit, harpoon_associativity) by
// coalgebra maps (harpoon_comul_linear, harpoon_counit_linear) under which
// the second structure is a module algebra (harpoon_dot_linear,
// harpoon_unit_linear). Ad satisfies the compatibility
//   Ad(a -> b) = a1 * b(-1) * T(a3) (x) (a2 -> b(0))   (yd_compatibility)
// and the second product, unit, counit and coproduct are colinear for it
// (dot_colinear, unit_colinear, counit_colinear, comul_colinear). The
// coproduct obeys the braided rule
//   Delta(a.b) = a1 . ((a2 * T(a4)) -> b1) (x) a3 . b2  (braided_compatibility).
// The derived right action is a coalgebra morphism (right_action_comul,
// right_action_counit) and pairs with the left one (mp5). Finally the two
// products interlock as
//   a * (b.c) = ((a1 * b) . S(a2)) . (a3 * c)           (brace_compatibility).
// Tuples hidden by the degree cap are skipped.
VerificationReport check_yd_brace(const YDBraceData& D, const VerifyOptions& opts = {});

// Packs the derived actions of a verified brace into a matched pair. Throws
// YDBraceAxiomsFail naming the first failed law, and DegreeCapExceeded when
// a needed cell is hidden by the degree cap.
std::pair<ActionTensor, ActionTensor> converse_matched_pair(const YDBraceData& D,
                                                            const VerifyOptions& opts = {});

// S squared, twice: square_formula compares S(S(a)) against
// (a1 -> T(a4)) -> (a2 <- T(a3)); involutive compares S(S(a)) against a.
VerificationReport check_S_squared(const YDBraceData& D, const VerifyOptions& opts = {});

// braided_commutativity compares a.b against ((a1 * T(a3)) -> b) . a2;
// commutative compares a.b against b.a. Two reports of fact, not a theorem.
VerificationReport check_braided_commutativity(const YDBraceData& D,
                                               const VerifyOptions& opts = {});

// The smash-style Hopf algebra on H (x) H built from a verified brace:
//   (a (x) h)(b (x) g) = ((a . S(h1)) . (h2 * b)) (x) h3 * g,
//   Delta(a (x) h) = (a1 (x) a2 * T(a4) * h1) (x) (a3 (x) h2),
// counit eps (x) eps, and the antipode assembled from S and T. Basis label
// i|j sits at row-major i*n + j. Throws PreconditionFail on truncated input
// and YDBraceAxiomsFail naming the first failed law.
HopfData bosonisation(const YDBraceData& D, const VerifyOptions& opts = {});

// A coalgebra-preserving map pi from H onto a module algebra A carried by
// the same coalgebra, with the left action of H on A it is measured against.
struct OneCocycleData {
  HopfData H;
  ProductTable A_mul;    // product of A on the shared basis
  SVec A_unit;
  std::vector<SVec> pi;  // column j = pi(e_j)
  ActionTensor action;   // left action of H on A
};

// Demands that pi is invertible and a coalgebra morphism (PiNotCoalgebraIso
// otherwise), then checks: cocycle  pi(a*b) = pi(a1) . (a2 -> pi(b));
// antipode_compatibility  (a1 -> pi(T(a2))) . pi(a3) = eps(a) 1; exchange
//   T pinv(a2 -> pi(b2)) * a3 * b3 (x) pinv(a1 -> pi(b1))
//     = T pinv(a1 -> pi(b1)) * a2 * b2 (x) pinv(a3 -> pi(b3));
// and unit_image  pi(1) = 1, recorded as a derived consequence.
VerificationReport check_one_cocycle(const OneCocycleData& C, const VerifyOptions& opts = {});

// Result of trying the adjoint action a -> b = a1 * b * T(a2) as the left
// half of a matched pair whose right half is trivial.
struct AdjointPairResult {
  VerificationReport report;
  std::optional<std::pair<ActionTensor, ActionTensor>> actions;
};

// Tests the one condition the pairing needs, comul_linearity:
//   a1 * T(a4) (x) a2 * b * T(a3) = 1 (x) a1 * b * T(a2).
// When it holds the actions are returned and the closed forms of the
// transmuted structure are appended as visible checks: closed_product_form
//   a.b = ((a1 * T(a3)) * b) * T(T(a2))
// and closed_antipode_form  S(a) = (a1 * T(a3)) * T(a2). Throws
// MissingAntipode; DegreeCapExceeded propagates.
AdjointPairResult adjoint_action_matched_pair(const HopfData& H, const VerifyOptions& opts = {});

// Convenience builders: the brace of a module-coalgebra action, the brace of
// a universal form (the route through transmute_from_R), and the brace
// (H, *, T) carried by the first structure itself.
YDBraceData transmuted_brace(const HopfData& H, const ActionTensor& left,
                             const VerifyOptions& opts = {});
YDBraceData transmuted_brace_from_R(const HopfData& H, const BilinearForm& R,
                                    const VerifyOptions& opts = {});
YDBraceData trivial_brace(const HopfData& H, const VerifyOptions& opts = {});

}  // namespace ydforge
