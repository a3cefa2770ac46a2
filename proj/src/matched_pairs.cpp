#include "ydforge/matched_pairs.hpp"

#include <string>
#include <utility>

#include "ydforge/errors.hpp"

namespace ydforge {

namespace {

SVec scalar_slot(const Scalar& s) {
  SVec v;
  if (!s.is_zero()) v.emplace(0, s);
  return v;
}

void require_shape(const HopfData& H, const ActionTensor& A) {
  if (A.n != H.dim || A.values.size() != A.n)
    throw ShapeError("action table size does not match the algebra dimension");
  for (const auto& row : A.values)
    if (row.size() != A.n) throw ShapeError("action table needs one cell per basis pair");
}

std::string side_prefix(ActionSide s) { return s == ActionSide::Left ? "left_" : "right_"; }

std::string first_failure(const VerificationReport& rep) {
  for (const auto& c : rep.checks())
    if (!c.passed) return c.name;
  return {};
}

}  // namespace

ActionTensor ActionTensor::trivial(const HopfData& H, ActionSide side) {
  ActionTensor A;
  A.side = side;
  A.n = H.dim;
  A.values.assign(A.n, std::vector<SVec>(A.n));
  for (std::size_t i = 0; i < A.n; ++i)
    for (std::size_t j = 0; j < A.n; ++j) {
      const Scalar& eps = side == ActionSide::Left ? H.counit[i] : H.counit[j];
      const std::size_t kept = side == ActionSide::Left ? j : i;
      if (!eps.is_zero()) A.values[i][j] = svec_unit(kept, eps);
    }
  return A;
}

SVec act(const ActionTensor& A, const SVec& first, const SVec& second) {
  SVec out;
  for (const auto& [i, a] : first)
    for (const auto& [j, b] : second) svec_add(out, A.values[i][j], a * b);
  return out;
}

VerificationReport check_module_coalgebra(const HopfData& H, const ActionTensor& A,
                                          const VerifyOptions& opts) {
  require_shape(H, A);
  const std::size_t n = H.dim;
  const std::string p = side_prefix(A.side);
  const bool left = A.side == ActionSide::Left;
  VerificationReport rep(left ? "left module-coalgebra laws" : "right module-coalgebra laws");

  rep.add(sweep_check(
      p + "action_unit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        const SVec b = svec_unit(t[0]);
        return svec_diff(left ? act(A, H.unit, b) : act(A, b, H.unit), b);
      },
      opts));
  rep.add(sweep_check(
      p + "action_associativity", H, 3,
      [&](const std::vector<std::size_t>& t) {
        // the acting slot absorbs the product: (hk).b = h.(k.b), b.(hk) = (b.h).k
        const SVec a = svec_unit(t[0]), b = svec_unit(t[1]), c = svec_unit(t[2]);
        if (left)
          return svec_diff(act(A, multiply(H, a, b), c), act(A, a, act(A, b, c)));
        return svec_diff(act(A, a, multiply(H, b, c)), act(A, act(A, a, b), c));
      },
      opts));
  rep.add(sweep_check(
      p + "action_comul", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs, svec_tensor(A.values[sa[0]][sb[0]], A.values[sa[1]][sb[1]], n), ca * cb);
        return svec_diff(comultiply(H, A.values[t[0]][t[1]]), rhs);
      },
      opts));
  rep.add(sweep_check(
      p + "action_counit", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(scalar_slot(counit_of(H, A.values[t[0]][t[1]])),
                         scalar_slot(H.counit[t[0]] * H.counit[t[1]]));
      },
      opts));
  return rep;
}

VerificationReport check_matched_pair(const HopfData& H, const ActionTensor& left,
                                      const ActionTensor& right, bool require_star,
                                      bool require_mp5, const VerifyOptions& opts) {
  require_shape(H, left);
  require_shape(H, right);
  if (left.side != ActionSide::Left || right.side != ActionSide::Right)
    throw ShapeError("check_matched_pair wants a left action and a right action");
  const std::size_t n = H.dim;
  VerificationReport rep("matched pair laws");
  rep.merge(check_module_coalgebra(H, left, opts));
  rep.merge(check_module_coalgebra(H, right, opts));

  rep.add(sweep_check(
      "mp1", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(act(left, svec_unit(t[0]), H.unit), svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "mp2", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(act(right, H.unit, svec_unit(t[0])), svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "mp3", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs =
            act(left, svec_unit(t[0]), multiply(H, svec_unit(t[1]), svec_unit(t[2])));
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs,
                     multiply(H, left.values[sa[0]][sb[0]],
                              act(left, right.values[sa[1]][sb[1]], svec_unit(t[2]))),
                     ca * cb);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "mp4", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs =
            act(right, multiply(H, svec_unit(t[0]), svec_unit(t[1])), svec_unit(t[2]));
        SVec rhs;
        for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
          for (const auto& [sc, cc] : comul_splits(H, t[2], 2))
            svec_add(rhs,
                     multiply(H, act(right, svec_unit(t[0]), left.values[sb[0]][sc[0]]),
                              right.values[sb[1]][sc[1]]),
                     cb * cc);
        return svec_diff(lhs, rhs);
      },
      opts));
  if (require_star)
    rep.add(sweep_check(
        "star", H, 2,
        [&](const std::vector<std::size_t>& t) {
          SVec rhs;
          for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
            for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
              svec_add(rhs,
                       multiply(H, left.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]]),
                       ca * cb);
          return svec_diff(multiply(H, svec_unit(t[0]), svec_unit(t[1])), rhs);
        },
        opts));
  if (require_mp5)
    rep.add(sweep_check(
        "mp5", H, 2,
        [&](const std::vector<std::size_t>& t) {
          SVec lhs, rhs;
          for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
            for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
              svec_add(lhs,
                       svec_tensor(left.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]], n),
                       ca * cb);
              svec_add(rhs,
                       svec_tensor(left.values[sa[1]][sb[1]], right.values[sa[0]][sb[0]], n),
                       ca * cb);
            }
          return svec_diff(lhs, rhs);
        },
        opts));
  return rep;
}

std::pair<ActionTensor, ActionTensor> actions_from_braiding(const HopfData& H,
                                                            const LinMap& sigma,
                                                            const VerifyOptions& opts) {
  const VerificationReport rep = check_br_axioms(H, sigma, opts);
  if (!rep.all_passed())
    throw BrAxiomsFail("the operator is not a braiding: " + first_failure(rep) + " fails");
  const std::size_t n = H.dim;
  ActionTensor left, right;
  left.side = ActionSide::Left;
  right.side = ActionSide::Right;
  left.n = right.n = n;
  left.values.assign(n, std::vector<SVec>(n));
  right.values.assign(n, std::vector<SVec>(n));
  // counit contraction of either output slot recovers the matching action
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [idx, c] : sigma.cols[i * n + j]) {
        svec_add(left.values[i][j], idx / n, c * H.counit[idx % n]);
        svec_add(right.values[i][j], idx % n, c * H.counit[idx / n]);
      }
  return {std::move(left), std::move(right)};
}

std::pair<ActionTensor, ActionTensor> actions_from_R(const HopfData& H, const BilinearForm& R) {
  if (R.n != H.dim) throw ShapeError("form size does not match the algebra dimension");
  const BilinearForm Rinv = inverse_form(H, R);
  const std::size_t n = H.dim;
  ActionTensor left, right;
  left.side = ActionSide::Left;
  right.side = ActionSide::Right;
  left.n = right.n = n;
  left.values.assign(n, std::vector<SVec>(n));
  right.values.assign(n, std::vector<SVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [sa, ca] : comul_splits(H, i, 2))
        for (const auto& [sb, cb] : comul_splits(H, j, 3))
          svec_add(left.values[i][j], sb[1],
                   ca * cb * Rinv.eval(sa[0], sb[0]) * R.eval(sa[1], sb[2]));
      for (const auto& [sa, ca] : comul_splits(H, i, 3))
        for (const auto& [sb, cb] : comul_splits(H, j, 2))
          svec_add(right.values[i][j], sa[1],
                   ca * cb * Rinv.eval(sa[0], sb[0]) * R.eval(sa[2], sb[1]));
    }
  return {std::move(left), std::move(right)};
}

VerificationReport check_mp3_counterexample(const HopfData& H, const BilinearForm& R,
                                            const VerifyOptions& opts) {
  if (R.n != H.dim) throw ShapeError("form size does not match the algebra dimension");
  const std::size_t n = H.dim;
  ActionTensor left, right;
  left.side = ActionSide::Left;
  right.side = ActionSide::Right;
  left.n = right.n = n;
  left.values.assign(n, std::vector<SVec>(n));
  right.values.assign(n, std::vector<SVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [sb, cb] : comul_splits(H, j, 2))
        svec_add(left.values[i][j], sb[0], cb * R.eval(i, sb[1]));
      for (const auto& [sa, ca] : comul_splits(H, i, 2))
        svec_add(right.values[i][j], sa[0], ca * R.eval(sa[1], j));
    }
  VerificationReport rep("product compatibility of comodule-extracted actions");
  rep.add(sweep_check(
      "mp3", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs =
            act(left, svec_unit(t[0]), multiply(H, svec_unit(t[1]), svec_unit(t[2])));
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs,
                     multiply(H, left.values[sa[0]][sb[0]],
                              act(left, right.values[sa[1]][sb[1]], svec_unit(t[2]))),
                     ca * cb);
        return svec_diff(lhs, rhs);
      },
      opts));
  return rep;
}

HopfData double_cross_product(const HopfData& H, const ActionTensor& left,
                              const ActionTensor& right, bool* mp5_holds) {
  if (H.truncated())
    throw PreconditionFail("the double cross product needs every product defined");
  const VerificationReport rep = check_matched_pair(H, left, right, false, true);
  for (const auto& c : rep.checks())
    if (!c.passed && c.name != "mp5")
      throw MatchedPairAxiomsFail("matched pair law " + c.name + " fails");
  if (mp5_holds) *mp5_holds = rep.passed("mp5");

  const std::size_t n = H.dim;
  const std::size_t nn = n * n;
  HopfData D;
  D.dim = nn;
  D.params = H.params;
  D.basis.resize(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D.basis[i * n + j] = H.basis[i] + "|" + H.basis[j];
  D.unit = svec_tensor(H.unit, H.unit, n);
  D.mul.assign(nn, std::vector<std::optional<SVec>>(nn));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t g = 0; g < n; ++g) {
          // (a(x)h)(b(x)g) = a.(h1 -> b1) (x) (h2 <- b2).g
          SVec col;
          for (const auto& [sh, ch] : comul_splits(H, h, 2))
            for (const auto& [sj, cj] : comul_splits(H, j, 2)) {
              const SVec u = multiply(H, svec_unit(i), left.values[sh[0]][sj[0]]);
              const SVec v = multiply(H, right.values[sh[1]][sj[1]], svec_unit(g));
              svec_add(col, svec_tensor(u, v, n), ch * cj);
            }
          D.mul[i * n + h][j * n + g] = std::move(col);
        }
  D.comul.resize(nn);
  D.counit.resize(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SVec cm;
      for (const auto& [si, ci] : comul_splits(H, i, 2))
        for (const auto& [sj, cj] : comul_splits(H, j, 2))
          svec_add(cm, (si[0] * n + sj[0]) * nn + (si[1] * n + sj[1]), ci * cj);
      D.comul[i * n + j] = std::move(cm);
      D.counit[i * n + j] = H.counit[i] * H.counit[j];
    }
  D.validate();
  return D;
}

LinMap braiding_from_actions(const HopfData& H, const ActionTensor& left,
                             const ActionTensor& right) {
  require_shape(H, left);
  require_shape(H, right);
  const std::size_t n = H.dim;
  LinMap f;
  f.n = n;
  f.dom_pow = f.cod_pow = 2;
  f.cols.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SVec col;
      for (const auto& [sa, ca] : comul_splits(H, i, 2))
        for (const auto& [sb, cb] : comul_splits(H, j, 2))
          svec_add(col, svec_tensor(left.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]], n),
                   ca * cb);
      f.cols[i * n + j] = std::move(col);
    }
  return f;
}

VerificationReport check_colinearity_equivalences(const HopfData& H, const ActionTensor& left,
                                                  const ActionTensor& right,
                                                  const VerifyOptions& opts) {
  require_shape(H, left);
  require_shape(H, right);
  const std::size_t n = H.dim;

  const auto demand = [&](const Check& c, const std::string& what) {
    if (!c.passed) throw PreconditionFail("precondition fails: " + what);
  };
  const VerificationReport lm = check_module_coalgebra(H, left, opts);
  demand(*lm.find("left_action_comul"), "the left action must respect the coproduct");
  demand(*lm.find("left_action_counit"), "the left action must respect the counit");
  demand(sweep_check(
             "right_counit", H, 2,
             [&](const std::vector<std::size_t>& t) {
               return svec_diff(scalar_slot(counit_of(H, right.values[t[0]][t[1]])),
                                scalar_slot(H.counit[t[0]] * H.counit[t[1]]));
             },
             opts),
         "the right action must respect the counit");
  demand(sweep_check(
             "star", H, 2,
             [&](const std::vector<std::size_t>& t) {
               SVec rhs;
               for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
                 for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
                   svec_add(rhs,
                            multiply(H, left.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]]),
                            ca * cb);
               return svec_diff(multiply(H, svec_unit(t[0]), svec_unit(t[1])), rhs);
             },
             opts),
         "the product must split through the two actions");

  VerificationReport rep("colinearity of the right action, in five equivalent shapes");
  rep.add(sweep_check(
      "colinear", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs, svec_tensor(right.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]], n),
                     ca * cb);
        return svec_diff(comultiply(H, right.values[t[0]][t[1]]), rhs);
      },
      opts));
  rep.add(sweep_check(
      "colinear_product_form", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 4))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 4))
            svec_add(lhs,
                     svec_tensor(
                         multiply(H, left.values[sa[0]][sb[0]], right.values[sa[2]][sb[2]]),
                         multiply(H, left.values[sa[1]][sb[1]], right.values[sa[3]][sb[3]]), n),
                     ca * cb);
        for (const auto& [sa, ca] : comul_splits(H, t[0], 3))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 3))
            for (const auto& [idx, cu] : comultiply(H, right.values[sa[2]][sb[2]]))
              svec_add(rhs,
                       svec_tensor(
                           multiply(H, left.values[sa[0]][sb[0]], svec_unit(idx / n)),
                           multiply(H, left.values[sa[1]][sb[1]], svec_unit(idx % n)), n),
                       ca * cb * cu);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "exchange_form", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 3))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 3))
            svec_add(lhs,
                     svec_tensor(right.values[sa[1]][sb[1]],
                                 multiply(H, left.values[sa[0]][sb[0]],
                                          right.values[sa[2]][sb[2]]),
                                 n),
                     ca * cb);
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs,
                     svec_tensor(right.values[sa[0]][sb[0]],
                                 multiply(H, svec_unit(sa[1]), svec_unit(sb[1])), n),
                     ca * cb);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "first_leg_form", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 3))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 3))
            svec_add(lhs,
                     svec_tensor(multiply(H, left.values[sa[0]][sb[0]],
                                          right.values[sa[2]][sb[2]]),
                                 left.values[sa[1]][sb[1]], n),
                     ca * cb);
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs,
                     svec_tensor(multiply(H, svec_unit(sa[0]), svec_unit(sb[0])),
                                 left.values[sa[1]][sb[1]], n),
                     ca * cb);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "mp5", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
            svec_add(lhs, svec_tensor(left.values[sa[0]][sb[0]], right.values[sa[1]][sb[1]], n),
                     ca * cb);
            svec_add(rhs, svec_tensor(left.values[sa[1]][sb[1]], right.values[sa[0]][sb[0]], n),
                     ca * cb);
          }
        return svec_diff(lhs, rhs);
      },
      opts));

  bool agree = true;
  const bool first = rep.checks().front().passed;
  for (const auto& c : rep.checks()) agree = agree && c.passed == first;
  Check verdict;
  verdict.name = "five_way_agreement";
  verdict.passed = agree;
  rep.add(std::move(verdict));
  return rep;
}

}  // namespace ydforge
