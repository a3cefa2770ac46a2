#include "ydforge/coqt.hpp"

#include <utility>

#include "ydforge/errors.hpp"

namespace ydforge {

namespace {

SVec scalar_slot(const Scalar& s) {
  SVec v;
  if (!s.is_zero()) v.emplace(0, s);
  return v;
}

}  // namespace

BilinearForm BilinearForm::zero(std::size_t n) {
  BilinearForm f;
  f.n = n;
  f.values.assign(n, std::vector<Scalar>(n, Scalar(0)));
  return f;
}

BilinearForm BilinearForm::counit_square(const HopfData& H) {
  BilinearForm f = zero(H.dim);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j) f.values[i][j] = H.counit[i] * H.counit[j];
  return f;
}

Scalar BilinearForm::eval(const SVec& v, const SVec& w) const {
  Scalar s;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : w) s += values[i][j] * a * b;
  return s;
}

BilinearForm BilinearForm::transpose() const {
  BilinearForm f = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.values[i][j] = values[j][i];
  return f;
}

LinMap BilinearForm::to_linmap() const {
  LinMap f;
  f.n = n;
  f.dom_pow = 2;
  f.cod_pow = 0;
  f.cols.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.cols[i * n + j] = scalar_slot(values[i][j]);
  return f;
}

BilinearForm BilinearForm::from_linmap(const LinMap& f) {
  if (f.dom_pow != 2 || f.cod_pow != 0)
    throw ShapeError("a bilinear form is a map from two slots to scalars");
  BilinearForm out = zero(f.n);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j)
      out.values[i][j] = svec_get(f.cols[i * f.n + j], 0);
  return out;
}

BilinearForm inverse_form(const HopfData& H, const BilinearForm& R) {
  return BilinearForm::from_linmap(convolution_inverse(H, R.to_linmap()));
}

VerificationReport check_coqt(const HopfData& H, const BilinearForm& R,
                              const VerifyOptions& opts) {
  if (R.n != H.dim) throw ShapeError("form size does not match the algebra");
  VerificationReport rep("coquasitriangular laws");

  std::optional<BilinearForm> Rinv;
  try {
    Rinv = inverse_form(H, R);
    rep.add_pass("convolution_invertible");
  } catch (const NotConvolutionInvertible&) {
    rep.add({"convolution_invertible", false, std::nullopt, std::nullopt, 0});
  }

  const auto exchange_diff = [&](const BilinearForm& F, bool primed) {
    return [&H, &F, primed](const std::vector<std::size_t>& t) {
      SVec diff;
      for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
        for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
          const Scalar c = ca * cb;
          if (!primed) {
            // F(a1⊗b1)·a2b2 = b1a1·F(a2⊗b2)
            svec_add(diff, multiply(H, svec_unit(sa[1]), svec_unit(sb[1])),
                     c * F.eval(sa[0], sb[0]));
            svec_add(diff, multiply(H, svec_unit(sb[0]), svec_unit(sa[0])),
                     -(c * F.eval(sa[1], sb[1])));
          } else {
            // a1b1·F(a2⊗b2) = F(a1⊗b1)·b2a2
            svec_add(diff, multiply(H, svec_unit(sa[0]), svec_unit(sb[0])),
                     c * F.eval(sa[1], sb[1]));
            svec_add(diff, multiply(H, svec_unit(sb[1]), svec_unit(sa[1])),
                     -(c * F.eval(sa[0], sb[0])));
          }
        }
      return diff;
    };
  };

  rep.add(sweep_check("coqt1", H, 2, exchange_diff(R, false), opts));

  rep.add(sweep_check(
      "coqt2", H, 3,
      [&](const std::vector<std::size_t>& t) {
        Scalar lhs;
        for (const auto& [l, c] : multiply(H, svec_unit(t[1]), svec_unit(t[2])))
          lhs += c * R.eval(t[0], l);
        Scalar rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          rhs += ca * R.eval(sa[0], t[2]) * R.eval(sa[1], t[1]);
        return scalar_slot(lhs - rhs);
      },
      opts));

  rep.add(sweep_check(
      "coqt3", H, 3,
      [&](const std::vector<std::size_t>& t) {
        Scalar lhs;
        for (const auto& [l, c] : multiply(H, svec_unit(t[0]), svec_unit(t[1])))
          lhs += c * R.eval(l, t[2]);
        Scalar rhs;
        for (const auto& [sc, cc] : comul_splits(H, t[2], 2))
          rhs += cc * R.eval(t[0], sc[0]) * R.eval(t[1], sc[1]);
        return scalar_slot(lhs - rhs);
      },
      opts));

  if (Rinv) {
    rep.add(sweep_check("coqt1_primed", H, 2, exchange_diff(*Rinv, true), opts));

    rep.add(sweep_check(
        "coqt2_primed", H, 3,
        [&](const std::vector<std::size_t>& t) {
          Scalar lhs;
          for (const auto& [l, c] : multiply(H, svec_unit(t[1]), svec_unit(t[2])))
            lhs += c * Rinv->eval(t[0], l);
          Scalar rhs;
          for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
            rhs += ca * Rinv->eval(sa[0], t[1]) * Rinv->eval(sa[1], t[2]);
          return scalar_slot(lhs - rhs);
        },
        opts));

    rep.add(sweep_check(
        "coqt3_primed", H, 3,
        [&](const std::vector<std::size_t>& t) {
          Scalar lhs;
          for (const auto& [l, c] : multiply(H, svec_unit(t[0]), svec_unit(t[1])))
            lhs += c * Rinv->eval(l, t[2]);
          Scalar rhs;
          for (const auto& [sc, cc] : comul_splits(H, t[2], 2))
            rhs += cc * Rinv->eval(t[1], sc[0]) * Rinv->eval(t[0], sc[1]);
          return scalar_slot(lhs - rhs);
        },
        opts));
  }

  return rep;
}

namespace {

Check ybe_sweep(const std::string& name, const HopfData& H, const BilinearForm& F,
                const VerifyOptions& opts) {
  return sweep_check(
      name, H, 3,
      [&H, &F](const std::vector<std::size_t>& t) {
        Scalar lhs, rhs;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2))
            for (const auto& [sc, cc] : comul_splits(H, t[2], 2)) {
              const Scalar c = ca * cb * cc;
              lhs += c * F.eval(sa[0], sb[0]) * F.eval(sa[1], sc[0]) *
                     F.eval(sb[1], sc[1]);
              rhs += c * F.eval(sb[0], sc[0]) * F.eval(sa[0], sc[1]) *
                     F.eval(sa[1], sb[1]);
            }
        SVec out;
        const Scalar d = lhs - rhs;
        if (!d.is_zero()) out.emplace(0, d);
        return out;
      },
      opts);
}

}  // namespace

VerificationReport check_ybe(const HopfData& H, const BilinearForm& R,
                             const VerifyOptions& opts) {
  VerificationReport rep("quantum Yang-Baxter equation");
  rep.add(ybe_sweep("ybe", H, R, opts));
  try {
    const BilinearForm Rinv = inverse_form(H, R);
    rep.add(ybe_sweep("ybe_inverse", H, Rinv, opts));
  } catch (const NotConvolutionInvertible&) {
    rep.add({"convolution_invertible", false, std::nullopt, std::nullopt, 0});
  }
  return rep;
}

bool is_cotriangular(const HopfData& H, const BilinearForm& R) {
  try {
    return inverse_form(H, R) == R.transpose();
  } catch (const NotConvolutionInvertible&) {
    return false;
  }
}

VerificationReport antipode_R_identities(const HopfData& H, const BilinearForm& R,
                                         const VerifyOptions& opts) {
  if (!H.antipode) throw MissingAntipode("antipode not present in this algebra");
  const auto& S = *H.antipode;
  const BilinearForm Rinv = inverse_form(H, R);

  const auto S_first = [&](const BilinearForm& F, std::size_t i, std::size_t j) {
    Scalar s;
    for (const auto& [k, c] : S[i]) s += c * F.eval(k, j);
    return s;
  };
  const auto S_second = [&](const BilinearForm& F, std::size_t i, std::size_t j) {
    Scalar s;
    for (const auto& [k, c] : S[j]) s += c * F.eval(i, k);
    return s;
  };
  const auto S_both = [&](const BilinearForm& F, std::size_t i, std::size_t j) {
    Scalar s;
    for (const auto& [k, c] : S[i])
      for (const auto& [l, d] : S[j]) s += c * d * F.eval(k, l);
    return s;
  };

  VerificationReport rep("antipode and form identities");
  rep.add(sweep_check(
      "antipode_first_slot", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return scalar_slot(S_first(R, t[0], t[1]) - Rinv.eval(t[0], t[1]));
      },
      opts));
  rep.add(sweep_check(
      "antipode_second_slot", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return scalar_slot(S_second(Rinv, t[0], t[1]) - R.eval(t[0], t[1]));
      },
      opts));
  rep.add(sweep_check(
      "antipode_both_slots", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return scalar_slot(S_both(R, t[0], t[1]) - R.eval(t[0], t[1]));
      },
      opts));
  rep.add(sweep_check(
      "antipode_both_slots_inverse", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return scalar_slot(S_both(Rinv, t[0], t[1]) - Rinv.eval(t[0], t[1]));
      },
      opts));
  return rep;
}

VerificationReport killing_involutivity(const HopfData& H, const BilinearForm& R,
                                        const VerifyOptions& opts) {
  const std::size_t n = H.dim;
  const BilinearForm Rinv = inverse_form(H, R);
  const LinMap sigma = braiding_bicomodule(H, R).sigma;
  const LinMap twice = compose(sigma, sigma);

  // K = Rᵒᵖ * R, the quantum Killing form.
  const BilinearForm K =
      BilinearForm::from_linmap(convolution(H, R.transpose().to_linmap(), R.to_linmap()));

  VerificationReport rep("involutivity of the bicomodule braiding");
  rep.add(sweep_check(
      "sigma_squared", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec diff = twice.cols[t[0] * n + t[1]];
        svec_add(diff, t[0] * n + t[1], Scalar(-1));
        return diff;
      },
      opts));
  rep.add(sweep_check(
      "killing_commutes", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec diff;
        for (const auto& [sa, ca] : comul_splits(H, t[0], 2))
          for (const auto& [sb, cb] : comul_splits(H, t[1], 2)) {
            const Scalar c = ca * cb;
            svec_add(diff, sa[0] * n + sb[0], c * K.eval(sa[1], sb[1]));
            svec_add(diff, sa[1] * n + sb[1], -c * K.eval(sa[0], sb[0]));
          }
        return diff;
      },
      opts));
  rep.add(sweep_check(
      "cotriangular", H, 2,
      [&](const std::vector<std::size_t>& t) {
        return scalar_slot(Rinv.eval(t[0], t[1]) - R.eval(t[1], t[0]));
      },
      opts));
  return rep;
}

LinMap braiding_comodule(const HopfData& H, const BilinearForm& R) {
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
          svec_add(col, sb[0] * n + sa[0], ca * cb * R.eval(sa[1], sb[1]));
      f.cols[i * n + j] = std::move(col);
    }
  return f;
}

BraidingPair braiding_bicomodule(const HopfData& H, const BilinearForm& R) {
  const BilinearForm Rinv = inverse_form(H, R);
  const std::size_t n = H.dim;
  BraidingPair out;
  out.sigma.n = out.sigma_inverse.n = n;
  out.sigma.dom_pow = out.sigma.cod_pow = 2;
  out.sigma_inverse.dom_pow = out.sigma_inverse.cod_pow = 2;
  out.sigma.cols.resize(n * n);
  out.sigma_inverse.cols.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SVec fwd, bwd;
      for (const auto& [sa, ca] : comul_splits(H, i, 3))
        for (const auto& [sb, cb] : comul_splits(H, j, 3)) {
          const Scalar c = ca * cb;
          const std::size_t at = sb[1] * n + sa[1];
          svec_add(fwd, at, c * Rinv.eval(sa[0], sb[0]) * R.eval(sa[2], sb[2]));
          svec_add(bwd, at, c * R.eval(sb[0], sa[0]) * Rinv.eval(sb[2], sa[2]));
        }
      out.sigma.cols[i * n + j] = std::move(fwd);
      out.sigma_inverse.cols[i * n + j] = std::move(bwd);
    }
  const LinMap id2 = LinMap::identity(n, 2);
  if (!(compose(out.sigma, out.sigma_inverse) == id2) ||
      !(compose(out.sigma_inverse, out.sigma) == id2))
    throw PreconditionFail("the printed inverse does not invert the braiding");
  return out;
}

VerificationReport check_br_axioms(const HopfData& H, const LinMap& sigma,
                                   const VerifyOptions& opts) {
  if (sigma.n != H.dim || sigma.dom_pow != 2 || sigma.cod_pow != 2)
    throw ShapeError("a braiding operator acts on two slots");
  const std::size_t n = H.dim;
  VerificationReport rep("braiding operator laws");

  rep.add(sweep_check(
      "br1", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(sigma.apply(svec_tensor(svec_unit(t[0]), H.unit, n)),
                         svec_tensor(H.unit, svec_unit(t[0]), n));
      },
      opts));
  rep.add(sweep_check(
      "br2", H, 1,
      [&](const std::vector<std::size_t>& t) {
        return svec_diff(sigma.apply(svec_tensor(H.unit, svec_unit(t[0]), n)),
                         svec_tensor(svec_unit(t[0]), H.unit, n));
      },
      opts));
  rep.add(sweep_check(
      "br3", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = sigma.apply(svec_tensor(
            svec_unit(t[0]), multiply(H, svec_unit(t[1]), svec_unit(t[2])), n));
        SVec rhs = svec_tensor(svec_tensor(svec_unit(t[0]), svec_unit(t[1]), n),
                               svec_unit(t[2]), n);
        rhs = apply_at(sigma, rhs, 3, 0);
        rhs = apply_at(sigma, rhs, 3, 1);
        rhs = mul_at(H, rhs, 3, 0);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "br4", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec lhs = sigma.apply(svec_tensor(
            multiply(H, svec_unit(t[0]), svec_unit(t[1])), svec_unit(t[2]), n));
        SVec rhs = svec_tensor(svec_tensor(svec_unit(t[0]), svec_unit(t[1]), n),
                               svec_unit(t[2]), n);
        rhs = apply_at(sigma, rhs, 3, 1);
        rhs = apply_at(sigma, rhs, 3, 0);
        rhs = mul_at(H, rhs, 3, 1);
        return svec_diff(lhs, rhs);
      },
      opts));
  rep.add(sweep_check(
      "braid_equation", H, 3,
      [&](const std::vector<std::size_t>& t) {
        const SVec x = svec_tensor(
            svec_tensor(svec_unit(t[0]), svec_unit(t[1]), n), svec_unit(t[2]), n);
        SVec lhs = apply_at(sigma, x, 3, 0);
        lhs = apply_at(sigma, lhs, 3, 1);
        lhs = apply_at(sigma, lhs, 3, 0);
        SVec rhs = apply_at(sigma, x, 3, 1);
        rhs = apply_at(sigma, rhs, 3, 0);
        rhs = apply_at(sigma, rhs, 3, 1);
        return svec_diff(lhs, rhs);
      },
      opts));
  return rep;
}

BilinearForm extend_bilinear_form(const RewriteEngine& E, const HopfData& H,
                                  const std::vector<std::vector<Scalar>>& gen_values,
                                  bool primed) {
  const auto& P = E.presentation();
  const std::size_t g = P.generators.size();
  if (gen_values.size() != g)
    throw InputError("generator value table must be square on the generators");
  for (const auto& row : gen_values)
    if (row.size() != g)
      throw InputError("generator value table must be square on the generators");
  if (P.comul_gen.size() != g)
    throw MissingGeneratorData("coproduct data is not given on every generator");
  for (const auto& terms : P.comul_gen)
    for (const auto& term : terms)
      if (term.left.size() > 1 || term.right.size() > 1)
        throw InputError(
            "form extension needs generator coproducts with generator or unit "
            "components");

  std::map<std::pair<Word, Word>, Scalar> memo;
  std::function<Scalar(const Word&, const Word&)> val = [&](const Word& w,
                                                            const Word& v) -> Scalar {
    if (w.empty()) return H.counit[E.index_of(v)];
    if (v.empty()) return H.counit[E.index_of(w)];
    const auto key = std::make_pair(w, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Scalar s;
    if (w.size() == 1) {
      if (v.size() == 1) {
        s = gen_values[static_cast<std::size_t>(w[0])][static_cast<std::size_t>(v[0])];
      } else {
        const Word head{v[0]};
        const Word tail(v.begin() + 1, v.end());
        for (const auto& term : P.comul_gen[static_cast<std::size_t>(w[0])]) {
          // plain: F(a⊗bc) = F(a1⊗c)F(a2⊗b); primed: F(a⊗bc) = F(a1⊗b)F(a2⊗c)
          s += primed ? term.coeff * val(term.left, head) * val(term.right, tail)
                      : term.coeff * val(term.left, tail) * val(term.right, head);
        }
      }
    } else {
      const Word head{w[0]};
      const Word tail(w.begin() + 1, w.end());
      for (const auto& [pq, c] : H.comul[E.index_of(v)]) {
        const Word& v1 = E.basis()[pq / H.dim];
        const Word& v2 = E.basis()[pq % H.dim];
        // plain: F(ab⊗c) = F(a⊗c1)F(b⊗c2); primed: F(ab⊗c) = F(b⊗c1)F(a⊗c2)
        s += primed ? c * val(tail, v1) * val(head, v2)
                    : c * val(head, v1) * val(tail, v2);
      }
    }
    memo.emplace(key, s);
    return s;
  };

  BilinearForm out = BilinearForm::zero(H.dim);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j)
      out.values[i][j] = val(E.basis()[i], E.basis()[j]);
  return out;
}

}  // namespace ydforge
