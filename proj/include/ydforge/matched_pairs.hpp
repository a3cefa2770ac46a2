#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ydforge/coqt.hpp"
#include "ydforge/hopf.hpp"
#include "ydforge/report.hpp"

namespace ydforge {

enum class ActionSide { Left, Right };

// An action of the algebra on itself, tabulated on basis pairs and extended
// bilinearly. values[i][j] is e_i acting on e_j for a left action, and e_i
// acted on by e_j for a right action; either way the first index is the
// first tensor factor.
struct ActionTensor {
  ActionSide side = ActionSide::Left;
  std::size_t n = 0;
  std::vector<std::vector<SVec>> values;

  // counit-weighted identity: a acts as epsilon(a), the acted slot survives
  static ActionTensor trivial(const HopfData& H, ActionSide side);
  bool operator==(const ActionTensor& o) const = default;
};

// Bilinear extension; the acting slot is decided by the side.
SVec act(const ActionTensor& A, const SVec& first, const SVec& second);

// Unit and associativity laws of the action, plus the coalgebra-morphism
// laws (the action commutes with the coproduct and the counit). Check names
// carry a left_/right_ prefix matching the side.
VerificationReport check_module_coalgebra(const HopfData& H, const ActionTensor& A,
                                          const VerifyOptions& opts = {});

// Module-coalgebra laws for both actions, the unit conditions mp1/mp2 and
// the product compatibilities mp3/mp4; the exchange condition mp5 and the
// braided-commutativity condition star are appended on request.
VerificationReport check_matched_pair(const HopfData& H, const ActionTensor& left,
                                      const ActionTensor& right, bool require_star = false,
                                      bool require_mp5 = false, const VerifyOptions& opts = {});

// Counit contractions of a braiding operator in one slot. The operator must
// satisfy the braiding laws; throws BrAxiomsFail otherwise.
std::pair<ActionTensor, ActionTensor> actions_from_braiding(const HopfData& H, const LinMap& sigma,
                                                            const VerifyOptions& opts = {});

// a -> b = Rinv(a1(x)b1) b2 R(a2(x)b3) and a <- b = Rinv(a1(x)b1) a2 R(a3(x)b2).
// Assumes (H, R) passes the braiding compatibility laws; the inverse form is
// computed here (NotConvolutionInvertible propagates).
std::pair<ActionTensor, ActionTensor> actions_from_R(const HopfData& H, const BilinearForm& R);

// The one-sided comodule braiding also contracts to a pair of actions,
// a -> b = R(a(x)b2) b1 and a <- b = a1 R(a2(x)b), but these need not be a
// matched pair: the single check mp3 reports the first basis triple where
// a -> (b.c) differs from (a1 -> b1).((a2 <- b2) -> c).
VerificationReport check_mp3_counterexample(const HopfData& H, const BilinearForm& R,
                                            const VerifyOptions& opts = {});

// Algebra H(x)H with product (a(x)h)(b(x)g) = a.(h1 -> b1) (x) (h2 <- b2).g
// and the tensor-product coalgebra. Requires mp1-mp4 (MatchedPairAxiomsFail
// otherwise) and a total product (PreconditionFail on truncated algebras).
// The result is a bialgebra exactly when mp5 holds; the flag receives that
// verdict when given.
HopfData double_cross_product(const HopfData& H, const ActionTensor& left,
                              const ActionTensor& right, bool* mp5_holds = nullptr);

// sigma(a(x)b) = (a1 -> b1) (x) (a2 <- b2). Built unconditionally; the
// braiding laws hold iff mp1-mp4 do, which tests assert in both directions.
LinMap braiding_from_actions(const HopfData& H, const ActionTensor& left,
                             const ActionTensor& right);

// Five equivalent shapes of the colinearity of the right action, evaluated
// independently: colinear, colinear_product_form, exchange_form,
// first_leg_form, mp5, plus five_way_agreement asserting one shared verdict.
// Preconditions (the left action is a coalgebra morphism, the right action
// respects the counit, star holds) are verified; PreconditionFail otherwise.
VerificationReport check_colinearity_equivalences(const HopfData& H, const ActionTensor& left,
                                                  const ActionTensor& right,
                                                  const VerifyOptions& opts = {});

}  // namespace ydforge
