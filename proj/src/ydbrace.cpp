#include "ydforge/ydbrace.hpp"

#include <string>
#include <utility>

#include "ydforge/errors.hpp"
#include "ydforge/linalg.hpp"

namespace ydforge {

namespace {

SVec scalar_slot(const Scalar& s) {
  SVec v;
  if (!s.is_zero()) v.emplace(0, s);
  return v;
}

std::string first_failure(const VerificationReport& rep) {
  for (const auto& c : rep.checks())
    if (!c.passed) return c.name;
  return {};
}

void require_antipode(const HopfData& H, const std::string& who) {
  if (!H.antipode) throw MissingAntipode(who + " needs an antipode");
}

void require_left(const ActionTensor& A, const std::string& who) {
  if (A.side != ActionSide::Left) throw ShapeError(who + " wants a left action");
}

void require_action_shape(const HopfData& H, const ActionTensor& A) {
  if (A.n != H.dim || A.values.size() != A.n)
    throw ShapeError("action table size does not match the algebra dimension");
  for (const auto& row : A.values)
    if (row.size() != A.n) throw ShapeError("action table needs one cell per basis pair");
}

void require_table_shape(const HopfData& H, const ProductTable& tab) {
  if (tab.size() != H.dim)
    throw ShapeError("product table size does not match the algebra dimension");
  for (const auto& row : tab)
    if (row.size() != H.dim) throw ShapeError("product table needs one cell per basis pair");
}

const SVec& cell(const ProductTable& tab, std::size_t i, std::size_t j, const HopfData& H,
                 const std::string& what, const std::string& op) {
  const auto& c = tab[i][j];
  if (!c)
    throw DegreeCapExceeded(what + " " + H.label(i) + op + H.label(j) +
                            " is beyond the degree cap");
  return *c;
}

SVec table_apply(const ProductTable& tab, const SVec& v, const SVec& w, const HopfData& H,
                 const std::string& what, const std::string& op) {
  SVec out;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : w) svec_add(out, cell(tab, i, j, H, what, op), a * b);
  return out;
}

SVec apply_columns(const std::vector<SVec>& cols, const SVec& v) {
  SVec out;
  for (const auto& [i, c] : v) svec_add(out, cols[i], c);
  return out;
}

}  // namespace

CoactionTensor CoactionTensor::trivial(const HopfData& H) {
  CoactionTensor rho;
  rho.n = H.dim;
  rho.values.resize(rho.n);
  for (std::size_t i = 0; i < rho.n; ++i)
    rho.values[i] = svec_tensor(H.unit, svec_unit(i), rho.n);
  return rho;
}

SVec coact(const CoactionTensor& rho, const SVec& v) {
  SVec out;
  for (const auto& [i, c] : v) {
    if (!rho.values[i])
      throw DegreeCapExceeded("coaction of basis element " + std::to_string(i) +
                              " is beyond the degree cap");
    svec_add(out, *rho.values[i], c);
  }
  return out;
}

YDBraceData make_yd_brace(const HopfData& H, ProductTable dot_mul, std::vector<SVec> S,
                          const VerifyOptions& opts) {
  require_antipode(H, "make_yd_brace");
  require_table_shape(H, dot_mul);
  if (S.size() != H.dim)
    throw ShapeError("antipode table needs one column per basis element");
  const VerificationReport hopf = check_hopf(H, opts);
  if (!hopf.all_passed())
    throw PreconditionFail("the first structure fails " + first_failure(hopf));

  YDBraceData D;
  D.H = H;
  D.dot_mul = std::move(dot_mul);
  D.S = std::move(S);
  const std::size_t n = H.dim;

  D.left.assign(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        SVec out;
        for (const auto& [s, c] : comul_splits(D.H, i, 2))
          svec_add(out,
                   table_apply(D.dot_mul, D.S[s[0]],
                               multiply(D.H, svec_unit(s[1]), svec_unit(j)), D.H,
                               "transmuted product", "."),
                   c);
        D.left[i][j] = std::move(out);
      } catch (const DegreeCapExceeded&) {
      }
    }

  D.right.assign(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        SVec out;
        for (const auto& [sa, ca] : comul_splits(D.H, i, 2))
          for (const auto& [sb, cb] : comul_splits(D.H, j, 2)) {
            const SVec u = antipode_apply(
                D.H, cell(D.left, sa[0], sb[0], D.H, "derived left action", "->"));
            svec_add(out,
                     multiply(D.H, multiply(D.H, u, svec_unit(sa[1])), svec_unit(sb[1])),
                     ca * cb);
          }
        D.right[i][j] = std::move(out);
      } catch (const DegreeCapExceeded&) {
      }
    }

  D.adl = adjoint_coaction(D.H);
  return D;
}

SVec dot(const YDBraceData& D, const SVec& v, const SVec& w) {
  return table_apply(D.dot_mul, v, w, D.H, "transmuted product", ".");
}

SVec dot_antipode(const YDBraceData& D, const SVec& v) { return apply_columns(D.S, v); }

ProductTable transmute_product(const HopfData& H, const ActionTensor& left,
                               const VerifyOptions& opts) {
  require_antipode(H, "transmute_product");
  require_left(left, "transmute_product");
  require_action_shape(H, left);
  const VerificationReport mc = check_module_coalgebra(H, left, opts);
  if (!mc.all_passed())
    throw PreconditionFail("the action is not a module-coalgebra action: " +
                           first_failure(mc) + " fails");

  const std::size_t n = H.dim;
  ProductTable table(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        SVec out;
        for (const auto& [s, c] : comul_splits(H, i, 2))
          svec_add(out,
                   multiply(H, svec_unit(s[0]),
                            act(left, antipode_apply(H, svec_unit(s[1])), svec_unit(j))),
                   c);
        table[i][j] = std::move(out);
      } catch (const DegreeCapExceeded&) {
      }
    }

  // the first product must come back as a*b = a1 . (a2 -> b)
  const Check retr = sweep_check(
      "retrieval", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 2)) {
          const SVec w = act(left, svec_unit(s[1]), svec_unit(t[1]));
          for (const auto& [k, b] : w)
            svec_add(rhs, cell(table, s[0], k, H, "transmuted product", "."), c * b);
        }
        return svec_diff(multiply(H, svec_unit(t[0]), svec_unit(t[1])), rhs);
      },
      opts);
  if (!retr.passed)
    throw PreconditionFail("the transmuted product does not recover the first product");
  return table;
}

std::vector<SVec> transmute_antipode(const HopfData& H, const ActionTensor& left,
                                     const VerifyOptions& opts) {
  require_antipode(H, "transmute_antipode");
  require_left(left, "transmute_antipode");
  require_action_shape(H, left);
  const VerificationReport mc = check_module_coalgebra(H, left, opts);
  if (!mc.all_passed())
    throw PreconditionFail("the action is not a module-coalgebra action: " +
                           first_failure(mc) + " fails");

  std::vector<SVec> S(H.dim);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (const auto& [s, c] : comul_splits(H, i, 2))
      svec_add(S[i], act(left, svec_unit(s[0]), antipode_apply(H, svec_unit(s[1]))), c);
  return S;
}

std::pair<ProductTable, std::vector<SVec>> transmute_from_R(const HopfData& H,
                                                            const BilinearForm& R) {
  require_antipode(H, "transmute_from_R");
  if (R.n != H.dim) throw ShapeError("form size does not match the algebra dimension");
  const std::size_t n = H.dim;
  const BilinearForm Rinv = inverse_form(H, R);

  ProductTable table(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        SVec out;
        for (const auto& [sa, ca] : comul_splits(H, i, 3))
          for (const auto& [sb, cb] : comul_splits(H, j, 2)) {
            const Scalar w = Rinv.eval(
                multiply(H, svec_unit(sa[0]), antipode_apply(H, svec_unit(sa[2]))),
                svec_unit(sb[0]));
            if (w.is_zero()) continue;
            svec_add(out, multiply(H, svec_unit(sb[1]), svec_unit(sa[1])), ca * cb * w);
          }
        table[i][j] = std::move(out);
      } catch (const DegreeCapExceeded&) {
      }
    }

  std::vector<SVec> S(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [s, c] : comul_splits(H, i, 5))
      svec_add(S[i], antipode_apply(H, svec_unit(s[3])),
               c * R.eval(svec_unit(s[0]), svec_unit(s[4])) *
                   R.eval(svec_unit(s[1]), antipode_apply(H, svec_unit(s[2]))));

  // the same structure through the extracted actions must agree
  const auto actions = actions_from_R(H, R);
  const ActionTensor& aleft = actions.first;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!table[i][j]) continue;
      try {
        SVec other;
        for (const auto& [s, c] : comul_splits(H, i, 2))
          svec_add(other,
                   multiply(H, svec_unit(s[0]),
                            act(aleft, antipode_apply(H, svec_unit(s[1])), svec_unit(j))),
                   c);
        if (!svec_diff(*table[i][j], other).empty())
          throw PreconditionFail(
              "the form is not coquasitriangular: the two transmutation routes disagree");
      } catch (const DegreeCapExceeded&) {
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    SVec other;
    for (const auto& [s, c] : comul_splits(H, i, 2))
      svec_add(other, act(aleft, svec_unit(s[0]), antipode_apply(H, svec_unit(s[1]))), c);
    if (!svec_diff(S[i], other).empty())
      throw PreconditionFail(
          "the form is not coquasitriangular: the two transmutation routes disagree");
  }
  return {std::move(table), std::move(S)};
}

CoactionTensor adjoint_coaction(const HopfData& H) {
  require_antipode(H, "adjoint_coaction");
  CoactionTensor rho;
  rho.n = H.dim;
  rho.values.resize(rho.n);
  for (std::size_t i = 0; i < rho.n; ++i) {
    try {
      SVec out;
      for (const auto& [s, c] : comul_splits(H, i, 3))
        svec_add(out,
                 svec_tensor(
                     multiply(H, svec_unit(s[0]), antipode_apply(H, svec_unit(s[2]))),
                     svec_unit(s[1]), rho.n),
                 c);
      rho.values[i] = std::move(out);
    } catch (const DegreeCapExceeded&) {
    }
  }
  return rho;
}

LinMap yd_braiding(const HopfData& H, const ActionTensor& left) {
  require_antipode(H, "yd_braiding");
  require_left(left, "yd_braiding");
  require_action_shape(H, left);
  const std::size_t n = H.dim;
  LinMap f;
  f.n = n;
  f.dom_pow = f.cod_pow = 2;
  f.cols.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SVec col;
      for (const auto& [s, c] : comul_splits(H, i, 3))
        svec_add(col,
                 svec_tensor(act(left,
                                 multiply(H, svec_unit(s[0]),
                                          antipode_apply(H, svec_unit(s[2]))),
                                 svec_unit(j)),
                             svec_unit(s[1]), n),
                 c);
      f.cols[i * n + j] = std::move(col);
    }
  return f;
}

VerificationReport check_yd_module(const HopfData& H, const ActionTensor& act_,
                                   const CoactionTensor& rho, const VerifyOptions& opts) {
  require_antipode(H, "check_yd_module");
  require_left(act_, "check_yd_module");
  require_action_shape(H, act_);
  if (rho.n != H.dim || rho.values.size() != rho.n)
    throw ShapeError("coaction table size does not match the algebra dimension");
  const std::size_t n = H.dim;
  const auto row = [&](std::size_t i) -> const SVec& {
    if (!rho.values[i])
      throw DegreeCapExceeded("coaction of basis element " + std::to_string(i) +
                              " is beyond the degree cap");
    return *rho.values[i];
  };

  VerificationReport rep("Yetter-Drinfeld module laws");
  rep.add(sweep_check(
      "action_unit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(act(act_, H.unit, svec_unit(t[0])), svec_unit(t[0]));
      },
      opts));
  rep.add(sweep_check(
      "action_associativity", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec a = svec_unit(t[0]), b = svec_unit(t[1]), x = svec_unit(t[2]);
        return svec_diff(act(act_, multiply(H, a, b), x), act(act_, a, act(act_, b, x)));
      },
      opts));
  rep.add(sweep_check(
      "coaction_counit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs;
        for (const auto& [p, c] : row(t[0])) svec_add(lhs, p % n, c * H.counit[p / n]);
        return svec_diff(lhs, svec_unit(t[0]));
      },
      opts));
  rep.add(sweep_check(
      "coaction_coassociativity", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [p, c] : row(t[0])) {
          const std::size_t j = p / n, k = p % n;
          for (const auto& [q, d] : H.comul[j]) svec_add(lhs, q * n + k, c * d);
          for (const auto& [q, d] : row(k)) svec_add(rhs, j * n * n + q, c * d);
        }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "yd", H, 2,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = coact(rho, act(act_, svec_unit(t[0]), svec_unit(t[1])));
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          for (const auto& [p, d] : row(t[1])) {
            const std::size_t j = p / n, k = p % n;
            svec_add(rhs,
                     svec_tensor(multiply(H, multiply(H, svec_unit(s[0]), svec_unit(j)),
                                          antipode_apply(H, svec_unit(s[2]))),
                                 act(act_, svec_unit(s[1]), svec_unit(k)), n),
                     c * d);
          }
        return svec_diff(lhs, rhs);
      },
      opts));
  return rep;
}

VerificationReport check_yd_brace(const YDBraceData& D, const VerifyOptions& opts) {
  const HopfData& H = D.H;
  require_table_shape(H, D.dot_mul);
  require_table_shape(H, D.left);
  require_table_shape(H, D.right);
  if (D.S.size() != H.dim)
    throw ShapeError("antipode table needs one column per basis element");
  const std::size_t n = H.dim;
  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto dotv = [&](const SVec& v, const SVec& w) { return dot(D, v, w); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };
  const auto harp = [&](const SVec& v, const SVec& w) {
    return table_apply(D.left, v, w, H, "derived left action", "->");
  };
  const auto lcell = [&](std::size_t i, std::size_t j) -> const SVec& {
    return cell(D.left, i, j, H, "derived left action", "->");
  };
  const auto rcell = [&](std::size_t i, std::size_t j) -> const SVec& {
    return cell(D.right, i, j, H, "derived right action", "<-");
  };
  const auto dcell = [&](std::size_t i, std::size_t j) -> const SVec& {
    return cell(D.dot_mul, i, j, H, "transmuted product", ".");
  };
  const auto adl_row = [&](std::size_t i) -> const SVec& {
    if (!D.adl.values[i])
      throw DegreeCapExceeded("coaction of basis element " + std::to_string(i) +
                              " is beyond the degree cap");
    return *D.adl.values[i];
  };

  VerificationReport rep("Yetter-Drinfeld brace laws");
  rep.add(sweep_check(
      "dot_associativity", H, 3,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(dotv(dcell(t[0], t[1]), e(t[2])), dotv(e(t[0]), dcell(t[1], t[2])));
      },
      opts));
  rep.add(sweep_check(
      "dot_unit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        const SVec b = e(t[0]);
        const SVec d1 = svec_diff(dotv(H.unit, b), b);
        if (!d1.empty()) return d1;
        return svec_diff(dotv(b, H.unit), b);
      },
      opts));
  rep.add(sweep_check(
      "dot_antipode_left", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 2))
          svec_add(lhs, dotv(D.S[s[0]], e(s[1])), c);
        return svec_diff(lhs, svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "dot_antipode_right", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 2))
          svec_add(lhs, dotv(e(s[0]), D.S[s[1]]), c);
        return svec_diff(lhs, svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "harpoon_unit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(harp(H.unit, e(t[0])), e(t[0]));
      },
      opts));
  rep.add(sweep_check(
      "harpoon_associativity", H, 3,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(harp(multiply(H, e(t[0]), e(t[1])), e(t[2])),
                         harp(e(t[0]), lcell(t[1], t[2])));
      },
      opts));
  rep.add(sweep_check(
      "harpoon_dot_linear", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = harp(e(t[0]), dcell(t[1], t[2]));
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 2))
          svec_add(rhs, dotv(lcell(s[0], t[1]), lcell(s[1], t[2])), c);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "harpoon_unit_linear", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(harp(e(t[0]), H.unit), svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "harpoon_comul_linear", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs, svec_tensor(lcell(sa[0], sb[0]), lcell(sa[1], sb[1]), n), ca * cb);
        return svec_diff(comultiply(H, lcell(t[0], t[1])), rhs);
      },
      opts));
  rep.add(sweep_check(
      "harpoon_counit_linear", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(scalar_slot(counit_of(H, lcell(t[0], t[1]))),
                         scalar_slot(H.counit[t[0]] * H.counit[t[1]]));
      },
      opts));
  rep.add(sweep_check(
      "yd_compatibility", H, 2,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = coact(D.adl, lcell(t[0], t[1]));
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          for (const auto& [p, d] : adl_row(t[1])) {
            const std::size_t j = p / n, k = p % n;
            svec_add(rhs,
                     svec_tensor(multiply(H, multiply(H, e(s[0]), e(j)), Tv(e(s[2]))),
                                 lcell(s[1], k), n),
                     c * d);
          }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "dot_colinear", H, 2,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = coact(D.adl, dcell(t[0], t[1]));
        SVec rhs;
        for (const auto& [p, cp] : adl_row(t[0]))
          for (const auto& [q, cq] : adl_row(t[1]))
            svec_add(rhs,
                     svec_tensor(multiply(H, e(p / n), e(q / n)), dcell(p % n, q % n), n),
                     cp * cq);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "unit_colinear", H, 0,
      [&](const std::vector<std::size_t>&) {
        return svec_diff(coact(D.adl, H.unit), svec_tensor(H.unit, H.unit, n));
      },
      opts));
  rep.add(sweep_check(
      "counit_colinear", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs;
        for (const auto& [p, c] : adl_row(t[0])) svec_add(lhs, p / n, c * H.counit[p % n]);
        return svec_diff(lhs, svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "comul_colinear", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [pq, c] : H.comul[t[0]]) {
          for (const auto& [r1, c1] : adl_row(pq / n))
            for (const auto& [r2, c2] : adl_row(pq % n)) {
              const SVec m = multiply(H, e(r1 / n), e(r2 / n));
              for (const auto& [mm, cm] : m)
                svec_add(lhs, (mm * n + r1 % n) * n + r2 % n, c * c1 * c2 * cm);
            }
        }
        for (const auto& [p, c] : adl_row(t[0])) {
          const std::size_t j = p / n, k = p % n;
          for (const auto& [q, d] : H.comul[k]) svec_add(rhs, j * n * n + q, c * d);
        }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "braided_compatibility", H, 2,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = comultiply(H, dcell(t[0], t[1]));
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 4))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
            const SVec first =
                dotv(e(sa[0]), harp(multiply(H, e(sa[1]), Tv(e(sa[3]))), e(sb[0])));
            svec_add(rhs, svec_tensor(first, dcell(sa[2], sb[1]), n), ca * cb);
          }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "right_action_comul", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            svec_add(rhs, svec_tensor(rcell(sa[0], sb[0]), rcell(sa[1], sb[1]), n), ca * cb);
        return svec_diff(comultiply(H, rcell(t[0], t[1])), rhs);
      },
      opts));
  rep.add(sweep_check(
      "right_action_counit", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(scalar_slot(counit_of(H, rcell(t[0], t[1]))),
                         scalar_slot(H.counit[t[0]] * H.counit[t[1]]));
      },
      opts));
  rep.add(sweep_check(
      "mp5", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
            svec_add(lhs, svec_tensor(lcell(sa[0], sb[0]), rcell(sa[1], sb[1]), n), ca * cb);
            svec_add(rhs, svec_tensor(lcell(sa[1], sb[1]), rcell(sa[0], sb[0]), n), ca * cb);
          }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "brace_compatibility", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = multiply(H, e(t[0]), dcell(t[1], t[2]));
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          svec_add(rhs,
                   dotv(dotv(multiply(H, e(s[0]), e(t[1])), D.S[s[1]]),
                        multiply(H, e(s[2]), e(t[2]))),
                   c);
        return svec_diff(lhs, rhs);
      },
      opts));
  return rep;
}

std::pair<ActionTensor, ActionTensor> converse_matched_pair(const YDBraceData& D,
                                                            const VerifyOptions& opts) {
  const VerificationReport rep = check_yd_brace(D, opts);
  if (!rep.all_passed())
    throw YDBraceAxiomsFail("Yetter-Drinfeld brace law " + first_failure(rep) + " fails");
  const std::size_t n = D.H.dim;
  ActionTensor left, right;
  left.side = ActionSide::Left;
  right.side = ActionSide::Right;
  left.n = right.n = n;
  left.values.assign(n, std::vector<SVec>(n));
  right.values.assign(n, std::vector<SVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      left.values[i][j] = cell(D.left, i, j, D.H, "derived left action", "->");
      right.values[i][j] = cell(D.right, i, j, D.H, "derived right action", "<-");
    }
  return {std::move(left), std::move(right)};
}

VerificationReport check_S_squared(const YDBraceData& D, const VerifyOptions& opts) {
  const HopfData& H = D.H;
  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };
  const auto harp = [&](const SVec& v, const SVec& w) {
    return table_apply(D.left, v, w, H, "derived left action", "->");
  };
  const auto rarp = [&](const SVec& v, const SVec& w) {
    return table_apply(D.right, v, w, H, "derived right action", "<-");
  };

  VerificationReport rep("the square of the second antipode");
  rep.add(sweep_check(
      "square_formula", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 4)) {
          const SVec u = harp(e(s[0]), Tv(e(s[3])));
          const SVec v = rarp(e(s[1]), Tv(e(s[2])));
          svec_add(rhs, harp(u, v), c);
        }
        return svec_diff(dot_antipode(D, D.S[t[0]]), rhs);
      },
      opts));
  rep.add(sweep_check(
      "involutive", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(dot_antipode(D, D.S[t[0]]), svec_unit(t[0]));
      },
      opts));
  return rep;
}

VerificationReport check_braided_commutativity(const YDBraceData& D,
                                               const VerifyOptions& opts) {
  const HopfData& H = D.H;
  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };
  const auto dcell = [&](std::size_t i, std::size_t j) -> const SVec& {
    return cell(D.dot_mul, i, j, H, "transmuted product", ".");
  };
  const auto harp = [&](const SVec& v, const SVec& w) {
    return table_apply(D.left, v, w, H, "derived left action", "->");
  };

  VerificationReport rep("commutativity of the transmuted product");
  rep.add(sweep_check(
      "braided_commutativity", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          svec_add(rhs, dot(D, harp(multiply(H, e(s[0]), Tv(e(s[2]))), e(t[1])), e(s[1])),
                   c);
        return svec_diff(dcell(t[0], t[1]), rhs);
      },
      opts));
  rep.add(sweep_check(
      "commutative", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(dcell(t[0], t[1]), dcell(t[1], t[0]));
      },
      opts));
  return rep;
}

HopfData bosonisation(const YDBraceData& D, const VerifyOptions& opts) {
  const HopfData& H = D.H;
  if (H.truncated()) throw PreconditionFail("bosonisation needs every product defined");
  const VerificationReport rep = check_yd_brace(D, opts);
  if (!rep.all_passed())
    throw YDBraceAxiomsFail("Yetter-Drinfeld brace law " + first_failure(rep) + " fails");

  const std::size_t n = H.dim;
  const std::size_t nn = n * n;
  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };
  const auto dotv = [&](const SVec& v, const SVec& w) { return dot(D, v, w); };

  HopfData B;
  B.dim = nn;
  B.params = H.params;
  B.basis.resize(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B.basis[i * n + j] = H.basis[i] + "|" + H.basis[j];
  B.unit = svec_tensor(H.unit, H.unit, n);

  B.mul.assign(nn, std::vector<std::optional<SVec>>(nn));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t g = 0; g < n; ++g) {
          // (a(x)h)(b(x)g) = ((a . S(h1)) . (h2 * b)) (x) h3 * g
          SVec col;
          for (const auto& [s, c] : comul_splits(H, h, 3)) {
            const SVec first = dotv(dotv(e(i), D.S[s[0]]), multiply(H, e(s[1]), e(j)));
            svec_add(col, svec_tensor(first, multiply(H, e(s[2]), e(g)), n), c);
          }
          B.mul[i * n + h][j * n + g] = std::move(col);
        }

  B.comul.resize(nn);
  B.counit.resize(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      // Delta(a(x)h) = (a1 (x) a2 * T(a4) * h1) (x) (a3 (x) h2)
      SVec cm;
      for (const auto& [sa, ca] : comul_splits(H, i, 4))
        for (const auto& [sh, ch] : comul_splits(H, h, 2)) {
          const SVec m = multiply(H, multiply(H, e(sa[1]), Tv(e(sa[3]))), e(sh[0]));
          for (const auto& [mm, cm2] : m)
            svec_add(cm, (sa[0] * n + mm) * nn + (sa[2] * n + sh[1]), ca * ch * cm2);
        }
      B.comul[i * n + h] = std::move(cm);
      B.counit[i * n + h] = H.counit[i] * H.counit[h];
    }

  // S(a(x)h) = S(T(T(a3)*h3)) . (T(T(a4)*h2) * T(a2)) (x) T((a1*T(a5))*h1)
  B.antipode.emplace(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      SVec col;
      for (const auto& [sa, ca] : comul_splits(H, i, 5))
        for (const auto& [sh, ch] : comul_splits(H, h, 3)) {
          const SVec u1 = dot_antipode(D, Tv(multiply(H, Tv(e(sa[2])), e(sh[2]))));
          const SVec u2 =
              multiply(H, Tv(multiply(H, Tv(e(sa[3])), e(sh[1]))), Tv(e(sa[1])));
          const SVec second =
              Tv(multiply(H, multiply(H, e(sa[0]), Tv(e(sa[4]))), e(sh[0])));
          svec_add(col, svec_tensor(dotv(u1, u2), second, n), ca * ch);
        }
      (*B.antipode)[i * n + h] = std::move(col);
    }

  B.validate();
  return B;
}

VerificationReport check_one_cocycle(const OneCocycleData& C, const VerifyOptions& opts) {
  const HopfData& H = C.H;
  require_antipode(H, "check_one_cocycle");
  require_table_shape(H, C.A_mul);
  if (C.pi.size() != H.dim) throw ShapeError("pi needs one column per basis element");
  require_left(C.action, "check_one_cocycle");
  require_action_shape(H, C.action);
  const std::size_t n = H.dim;

  // pi must be an invertible coalgebra morphism
  std::vector<SVec> pinv_cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<LinEq> eqs;
    for (std::size_t r = 0; r < n; ++r) {
      LinEq eq;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar c = svec_get(C.pi[j], r);
        if (!c.is_zero()) eq.lhs.emplace(j, c);
      }
      eq.rhs = k == r ? Scalar(1) : Scalar(0);
      eqs.push_back(std::move(eq));
    }
    const auto sol = solve_linear(n, eqs);
    if (!sol) throw PiNotCoalgebraIso("pi is not invertible");
    for (std::size_t j = 0; j < n; ++j)
      if (!(*sol)[j].is_zero()) pinv_cols[k].emplace(j, (*sol)[j]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    SVec both;
    for (const auto& [pq, c] : H.comul[j])
      svec_add(both, svec_tensor(C.pi[pq / n], C.pi[pq % n], n), c);
    if (!svec_diff(comultiply(H, C.pi[j]), both).empty() ||
        counit_of(H, C.pi[j]) != H.counit[j])
      throw PiNotCoalgebraIso("pi is not a coalgebra morphism");
  }

  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };
  const auto piv = [&](const SVec& v) { return apply_columns(C.pi, v); };
  const auto pinv = [&](const SVec& v) { return apply_columns(pinv_cols, v); };
  const auto amul = [&](const SVec& v, const SVec& w) {
    return table_apply(C.A_mul, v, w, H, "product", ".");
  };
  const auto harpA = [&](const SVec& v, const SVec& w) { return act(C.action, v, w); };

  VerificationReport rep("1-cocycle laws");
  rep.add(sweep_check(
      "cocycle", H, 2,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = piv(multiply(H, e(t[0]), e(t[1])));
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 2))
          svec_add(rhs, amul(C.pi[s[0]], harpA(e(s[1]), C.pi[t[1]])), c);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "antipode_compatibility", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          svec_add(lhs, amul(harpA(e(s[0]), piv(Tv(e(s[1])))), C.pi[s[2]]), c);
        return svec_diff(lhs, svec_scaled(C.A_unit, H.counit[t[0]]));
      },
      opts));
  rep.add(sweep_check(
      "exchange", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 3))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 3)) {
            const Scalar c = ca * cb;
            const SVec w1 = pinv(harpA(e(sa[1]), C.pi[sb[1]]));
            const SVec z1 = pinv(harpA(e(sa[0]), C.pi[sb[0]]));
            svec_add(lhs,
                     svec_tensor(multiply(H, multiply(H, Tv(w1), e(sa[2])), e(sb[2])), z1, n),
                     c);
            const SVec w2 = pinv(harpA(e(sa[0]), C.pi[sb[0]]));
            const SVec z2 = pinv(harpA(e(sa[2]), C.pi[sb[2]]));
            svec_add(rhs,
                     svec_tensor(multiply(H, multiply(H, Tv(w2), e(sa[1])), e(sb[1])), z2, n),
                     c);
          }
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "unit_image", H, 0,
      [&](const std::vector<std::size_t>&) { return svec_diff(piv(H.unit), C.A_unit); },
      opts));
  return rep;
}

AdjointPairResult adjoint_action_matched_pair(const HopfData& H, const VerifyOptions& opts) {
  require_antipode(H, "adjoint_action_matched_pair");
  const std::size_t n = H.dim;
  const auto e = [](std::size_t i) { return svec_unit(i); };
  const auto Tv = [&](const SVec& v) { return antipode_apply(H, v); };

  ActionTensor adj;
  adj.side = ActionSide::Left;
  adj.n = n;
  adj.values.assign(n, std::vector<SVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [s, c] : comul_splits(H, i, 2))
        svec_add(adj.values[i][j],
                 multiply(H, multiply(H, e(s[0]), e(j)), Tv(e(s[1]))), c);

  VerificationReport rep("adjoint action matched pair");
  rep.add(sweep_check(
      "comul_linearity", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs, rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 4))
          svec_add(lhs,
                   svec_tensor(multiply(H, e(s[0]), Tv(e(s[3]))),
                               multiply(H, multiply(H, e(s[1]), e(t[1])), Tv(e(s[2]))), n),
                   c);
        for (const auto& [s, c] : comul_splits(H, t[0], 2))
          svec_add(rhs,
                   svec_tensor(H.unit,
                               multiply(H, multiply(H, e(s[0]), e(t[1])), Tv(e(s[1]))), n),
                   c);
        return svec_diff(lhs, rhs);
      },
      opts));

  AdjointPairResult out{std::move(rep), std::nullopt};
  if (!out.report.all_passed()) return out;

  const ProductTable table = transmute_product(H, adj, opts);
  const std::vector<SVec> S = transmute_antipode(H, adj, opts);
  out.report.add(sweep_check(
      "closed_product_form", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          svec_add(rhs,
                   multiply(H, multiply(H, multiply(H, e(s[0]), Tv(e(s[2]))), e(t[1])),
                            Tv(Tv(e(s[1])))),
                   c);
        return svec_diff(cell(table, t[0], t[1], H, "transmuted product", "."), rhs);
      },
      opts));
  out.report.add(sweep_check(
      "closed_antipode_form", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec rhs;
        for (const auto& [s, c] : comul_splits(H, t[0], 3))
          svec_add(rhs, multiply(H, multiply(H, e(s[0]), Tv(e(s[2]))), Tv(e(s[1]))), c);
        return svec_diff(S[t[0]], rhs);
      },
      opts));
  out.actions = std::make_pair(std::move(adj), ActionTensor::trivial(H, ActionSide::Right));
  return out;
}

YDBraceData transmuted_brace(const HopfData& H, const ActionTensor& left,
                             const VerifyOptions& opts) {
  return make_yd_brace(H, transmute_product(H, left, opts),
                       transmute_antipode(H, left, opts), opts);
}

YDBraceData transmuted_brace_from_R(const HopfData& H, const BilinearForm& R,
                                    const VerifyOptions& opts) {
  auto built = transmute_from_R(H, R);
  return make_yd_brace(H, std::move(built.first), std::move(built.second), opts);
}

YDBraceData trivial_brace(const HopfData& H, const VerifyOptions& opts) {
  require_antipode(H, "trivial_brace");
  return make_yd_brace(H, H.mul, *H.antipode, opts);
}

}  // namespace ydforge
