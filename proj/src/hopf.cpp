#include "ydforge/hopf.hpp"

#include <set>
#include <thread>

#include "ydforge/errors.hpp"
#include "ydforge/linalg.hpp"

namespace ydforge {

bool HopfData::truncated() const {
  for (const auto& row : mul)
    for (const auto& e : row)
      if (!e) return true;
  return false;
}

std::string HopfData::label(std::size_t i) const {
  return i < basis.size() ? basis[i] : std::to_string(i);
}

std::vector<std::string> HopfData::labels_of(const std::vector<std::size_t>& tuple) const {
  std::vector<std::string> v;
  v.reserve(tuple.size());
  for (std::size_t i : tuple) v.push_back(label(i));
  return v;
}

void HopfData::validate() const {
  if (dim == 0) throw InputError("dim must be positive");
  if (basis.size() != dim) throw InputError("basis label count != dim");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != dim) throw InputError("duplicate basis labels");
  if (mul.size() != dim) throw InputError("mul tensor must have dim rows");
  for (const auto& row : mul) {
    if (row.size() != dim) throw InputError("mul tensor rows must have dim entries");
    for (const auto& e : row)
      if (e)
        for (const auto& [k, c] : *e)
          if (k >= dim || c.is_zero()) throw InputError("bad mul entry");
  }
  if (unit.empty()) throw InputError("unit vector is zero");
  for (const auto& [k, c] : unit)
    if (k >= dim) throw InputError("unit index out of range");
  if (comul.size() != dim) throw InputError("comul must have dim entries");
  for (const auto& v : comul)
    for (const auto& [k, c] : v)
      if (k >= dim * dim || c.is_zero()) throw InputError("bad comul entry");
  if (counit.size() != dim) throw InputError("counit must have dim entries");
  Scalar eps_unit;
  for (const auto& [k, c] : unit) eps_unit += counit[k] * c;
  if (!eps_unit.is_one()) throw InputError("counit(unit) != 1");
  if (antipode) {
    if (antipode->size() != dim) throw InputError("antipode must have dim columns");
    for (const auto& col : *antipode)
      for (const auto& [k, c] : col)
        if (k >= dim || c.is_zero()) throw InputError("bad antipode entry");
  }
  if (!degrees.empty() && degrees.size() != dim) throw InputError("degrees size mismatch");
}

SVec multiply(const HopfData& H, const SVec& v, const SVec& w) {
  SVec out;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : w) {
      const auto& mij = H.mul[i][j];
      if (!mij)
        throw DegreeCapExceeded("product " + H.label(i) + "*" + H.label(j) +
                                " is beyond the degree cap");
      svec_add(out, *mij, a * b);
    }
  return out;
}

SVec comultiply(const HopfData& H, const SVec& v) {
  SVec out;
  for (const auto& [i, a] : v) svec_add(out, H.comul[i], a);
  return out;
}

Scalar counit_of(const HopfData& H, const SVec& v) {
  Scalar s;
  for (const auto& [i, a] : v) s += H.counit[i] * a;
  return s;
}

SVec antipode_apply(const HopfData& H, const SVec& v) {
  if (!H.antipode) throw MissingAntipode("antipode not present in this algebra");
  SVec out;
  for (const auto& [i, a] : v) svec_add(out, (*H.antipode)[i], a);
  return out;
}

SVec to_svec(const std::vector<Scalar>& dense) {
  SVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.emplace(i, dense[i]);
  return v;
}

std::vector<Scalar> to_dense(const HopfData& H, const SVec& v) {
  std::vector<Scalar> d(H.dim, Scalar(0));
  for (const auto& [i, c] : v) {
    if (i >= H.dim) throw ShapeError("index out of range for dense conversion");
    d[i] = c;
  }
  return d;
}

SVec multiply(const HopfData& H, const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
  if (v.size() != H.dim || w.size() != H.dim) throw ShapeError("vector length != dim");
  return multiply(H, to_svec(v), to_svec(w));
}

SVec comultiply(const HopfData& H, const std::vector<Scalar>& v) {
  if (v.size() != H.dim) throw ShapeError("vector length != dim");
  return comultiply(H, to_svec(v));
}

SVec power_multiply(const HopfData& H, const SVec& v, const SVec& w, std::size_t c) {
  SVec out;
  if (c == 0) {
    Scalar p = svec_get(v, 0) * svec_get(w, 0);
    if (!p.is_zero()) out.emplace(0, p);
    return out;
  }
  const std::size_t n = H.dim;
  for (const auto& [ia, ca] : v) {
    auto ta = unpack_index(ia, n, c);
    for (const auto& [ib, cb] : w) {
      auto tb = unpack_index(ib, n, c);
      SVec acc = svec_unit(0, ca * cb);
      for (std::size_t k = 0; k < c && !acc.empty(); ++k) {
        const auto& mij = H.mul[ta[k]][tb[k]];
        if (!mij)
          throw DegreeCapExceeded("product " + H.label(ta[k]) + "*" + H.label(tb[k]) +
                                  " is beyond the degree cap");
        SVec next;
        for (const auto& [p, x] : acc)
          for (const auto& [q, y] : *mij) svec_add(next, p * n + q, x * y);
        acc = std::move(next);
      }
      svec_add(out, acc);
    }
  }
  return out;
}

SVec iterated_comul(const HopfData& H, const SVec& v, std::size_t m) {
  if (m == 0) return svec_unit(0, counit_of(H, v));
  SVec cur = v;
  const std::size_t n = H.dim;
  std::size_t rest_dim = 1;
  for (std::size_t p = 1; p < m; ++p) {
    // expand slot 0 of H ⊗ H^{⊗(p-1)}
    SVec next;
    for (const auto& [idx, c] : cur) {
      std::size_t i0 = idx / rest_dim;
      std::size_t rest = idx % rest_dim;
      for (const auto& [jk, x] : H.comul[i0]) svec_add(next, jk * rest_dim + rest, c * x);
    }
    cur = std::move(next);
    rest_dim *= n;
  }
  return cur;
}

std::vector<std::pair<std::vector<std::size_t>, Scalar>> comul_splits(const HopfData& H,
                                                                      std::size_t i,
                                                                      std::size_t m) {
  SVec v = iterated_comul(H, svec_unit(i), m);
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) out.emplace_back(unpack_index(idx, H.dim, m), c);
  return out;
}

SVec LinMap::apply(const SVec& v) const {
  SVec out;
  for (const auto& [j, c] : v) {
    if (j >= cols.size()) throw ShapeError("map applied to out-of-range index");
    svec_add(out, cols[j], c);
  }
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  return n == o.n && dom_pow == o.dom_pow && cod_pow == o.cod_pow && cols == o.cols;
}

LinMap LinMap::identity(std::size_t n, std::size_t pow) {
  LinMap f;
  f.n = n;
  f.dom_pow = f.cod_pow = pow;
  std::size_t d = int_pow(n, pow);
  f.cols.resize(d);
  for (std::size_t j = 0; j < d; ++j) f.cols[j] = svec_unit(j);
  return f;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.n != g.n || f.dom_pow != g.cod_pow) throw ShapeError("composition shape mismatch");
  LinMap r;
  r.n = f.n;
  r.dom_pow = g.dom_pow;
  r.cod_pow = f.cod_pow;
  r.cols.resize(g.cols.size());
  for (std::size_t j = 0; j < g.cols.size(); ++j) r.cols[j] = f.apply(g.cols[j]);
  return r;
}

LinMap antipode_map(const HopfData& H) {
  if (!H.antipode) throw MissingAntipode("antipode not present in this algebra");
  LinMap f;
  f.n = H.dim;
  f.dom_pow = f.cod_pow = 1;
  f.cols = *H.antipode;
  return f;
}

SVec apply_at(const LinMap& f, const SVec& v, std::size_t m, std::size_t slot) {
  if (f.dom_pow != 2 || f.cod_pow != 2 || slot + 1 >= m)
    throw ShapeError("apply_at wants a two-slot endomap inside the tensor power");
  const std::size_t n = f.n;
  SVec out;
  for (const auto& [idx, c] : v) {
    auto t = unpack_index(idx, n, m);
    const auto& col = f.cols[t[slot] * n + t[slot + 1]];
    for (const auto& [q, d] : col) {
      auto t2 = t;
      t2[slot] = q / n;
      t2[slot + 1] = q % n;
      svec_add(out, pack_index(t2, n), c * d);
    }
  }
  return out;
}

SVec mul_at(const HopfData& H, const SVec& v, std::size_t m, std::size_t slot) {
  if (slot + 1 >= m) throw ShapeError("mul_at slot outside the tensor power");
  const std::size_t n = H.dim;
  SVec out;
  for (const auto& [idx, c] : v) {
    auto t = unpack_index(idx, n, m);
    const auto& mij = H.mul[t[slot]][t[slot + 1]];
    if (!mij)
      throw DegreeCapExceeded("product " + H.label(t[slot]) + "*" +
                              H.label(t[slot + 1]) + " is beyond the degree cap");
    std::vector<std::size_t> t2;
    t2.reserve(m - 1);
    for (std::size_t s = 0; s < m; ++s)
      if (s != slot + 1) t2.push_back(t[s]);
    for (const auto& [k, d] : *mij) {
      t2[slot] = k;
      svec_add(out, pack_index(t2, n), c * d);
    }
  }
  return out;
}

LinMap conv_unit(const HopfData& H, std::size_t dom_pow, std::size_t cod_pow) {
  const std::size_t n = H.dim;
  LinMap f;
  f.n = n;
  f.dom_pow = dom_pow;
  f.cod_pow = cod_pow;
  SVec unit_c = svec_unit(0);
  for (std::size_t k = 0; k < cod_pow; ++k) {
    SVec next;
    for (const auto& [p, x] : unit_c)
      for (const auto& [q, y] : H.unit) svec_add(next, p * n + q, x * y);
    unit_c = std::move(next);
  }
  std::size_t d = int_pow(n, dom_pow);
  f.cols.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    Scalar e(1);
    for (std::size_t idx : unpack_index(t, n, dom_pow)) e *= H.counit[idx];
    f.cols[t] = svec_scaled(unit_c, e);
  }
  return f;
}

namespace {

// Enumerates the legs of the tensor-coalgebra coproduct of a domain tuple:
// visit(first_index, second_index, coefficient) over all split combinations.
void for_each_split(const HopfData& H, const std::vector<std::size_t>& tuple,
                    const std::function<void(std::size_t, std::size_t, const Scalar&)>& visit) {
  const std::size_t n = H.dim;
  std::function<void(std::size_t, std::size_t, std::size_t, const Scalar&)> rec =
      [&](std::size_t k, std::size_t fi, std::size_t si, const Scalar& coeff) {
        if (k == tuple.size()) {
          visit(fi, si, coeff);
          return;
        }
        for (const auto& [jk, c] : H.comul[tuple[k]])
          rec(k + 1, fi * n + jk / n, si * n + jk % n, coeff * c);
      };
  rec(0, 0, 0, Scalar(1));
}

}  // namespace

LinMap convolution(const HopfData& H, const LinMap& f, const LinMap& g) {
  if (f.n != H.dim || g.n != H.dim || f.dom_pow != g.dom_pow || f.cod_pow != g.cod_pow)
    throw ShapeError("convolution operands must share domain and codomain powers");
  const std::size_t n = H.dim;
  LinMap r;
  r.n = n;
  r.dom_pow = f.dom_pow;
  r.cod_pow = f.cod_pow;
  std::size_t d = int_pow(n, f.dom_pow);
  r.cols.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    auto tuple = unpack_index(t, n, f.dom_pow);
    SVec col;
    for_each_split(H, tuple, [&](std::size_t fi, std::size_t si, const Scalar& coeff) {
      const SVec& fv = f.cols[fi];
      const SVec& gv = g.cols[si];
      if (fv.empty() || gv.empty()) return;
      svec_add(col, power_multiply(H, fv, gv, f.cod_pow), coeff);
    });
    r.cols[t] = std::move(col);
  }
  return r;
}

LinMap convolution_inverse(const HopfData& H, const LinMap& f) {
  if (f.n != H.dim) throw ShapeError("map does not match the algebra");
  const std::size_t n = H.dim;
  const std::size_t D = f.dom_dim();
  const std::size_t C = f.cod_dim();
  LinMap target = conv_unit(H, f.dom_pow, f.cod_pow);

  // Unknown u = si*C + b is entry b of the image of domain tuple si.
  std::vector<LinEq> eqs(D * C);
  for (std::size_t t = 0; t < D; ++t) {
    auto tuple = unpack_index(t, n, f.dom_pow);
    for_each_split(H, tuple, [&](std::size_t fi, std::size_t si, const Scalar& coeff) {
      const SVec& fv = f.cols[fi];
      for (const auto& [a, fa] : fv) {
        Scalar w = coeff * fa;
        for (std::size_t b = 0; b < C; ++b) {
          SVec prod = power_multiply(H, svec_unit(a), svec_unit(b), f.cod_pow);
          for (const auto& [o, pv] : prod) svec_add(eqs[t * C + o].lhs, si * C + b, w * pv);
        }
      }
    });
    for (std::size_t o = 0; o < C; ++o)
      eqs[t * C + o].rhs = svec_get(target.cols[t], o);
  }

  auto sol = solve_linear(D * C, std::move(eqs));
  if (!sol) throw NotConvolutionInvertible("no convolution inverse: linear system inconsistent");

  LinMap g;
  g.n = n;
  g.dom_pow = f.dom_pow;
  g.cod_pow = f.cod_pow;
  g.cols.resize(D);
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t b = 0; b < C; ++b) {
      const Scalar& v = (*sol)[j * C + b];
      if (!v.is_zero()) g.cols[j].emplace(b, v);
    }

  if (!(convolution(H, f, g) == target) || !(convolution(H, g, f) == target))
    throw NotConvolutionInvertible("candidate inverse failed verification");
  return g;
}

Check sweep_check(const std::string& name, const HopfData& H, std::size_t arity,
                  const std::function<SVec(const std::vector<std::size_t>&)>& diff_fn,
                  const VerifyOptions& opts) {
  const std::size_t n = H.dim;
  const std::size_t total = int_pow(n, arity);

  struct BlockResult {
    std::optional<std::size_t> fail_idx;
    SVec fail_diff;
    std::size_t skipped = 0;
  };

  auto run_block = [&](std::size_t lo, std::size_t hi, BlockResult& out) {
    for (std::size_t t = lo; t < hi; ++t) {
      auto tuple = unpack_index(t, n, arity);
      try {
        SVec diff = diff_fn(tuple);
        if (!diff.empty()) {
          out.fail_idx = t;
          out.fail_diff = std::move(diff);
          return;
        }
      } catch (const DegreeCapExceeded&) {
        ++out.skipped;
      }
    }
  };

  int jobs = opts.jobs > 1 ? opts.jobs : 1;
  if (static_cast<std::size_t>(jobs) > total) jobs = static_cast<int>(total ? total : 1);
  std::vector<BlockResult> results(jobs);
  if (jobs == 1) {
    run_block(0, total, results[0]);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      std::size_t lo = std::min<std::size_t>(w * chunk, total);
      std::size_t hi = std::min<std::size_t>(lo + chunk, total);
      workers.emplace_back(run_block, lo, hi, std::ref(results[w]));
    }
    for (auto& th : workers) th.join();
  }

  // Deterministic merge: least failing tuple wins; blocks after a failure in
  // an earlier block may have scanned tuples that the sequential sweep would
  // not reach, so their skip counts are only added up to the failure point.
  Check c;
  c.name = name;
  std::size_t skipped = 0;
  std::optional<std::size_t> fail;
  SVec fail_diff;
  for (const auto& b : results) {
    if (b.fail_idx && (!fail || *b.fail_idx < *fail)) {
      fail = b.fail_idx;
      fail_diff = b.fail_diff;
    }
  }
  if (jobs == 1) {
    skipped = results[0].skipped;
  } else if (!fail) {
    for (const auto& b : results) skipped += b.skipped;
  } else {
    // Re-scan the prefix to count skips exactly as the sequential sweep would.
    BlockResult prefix;
    run_block(0, *fail, prefix);
    skipped = prefix.skipped;
  }

  if (fail) {
    c.passed = false;
    Witness w;
    w.tuple = unpack_index(*fail, n, arity);
    w.diff = std::move(fail_diff);
    w.tuple_labels = H.labels_of(w.tuple);
    c.witness = std::move(w);
  }
  c.skipped_tuples = skipped;
  if (H.degree_cap && skipped > 0) c.verified_up_to_degree = *H.degree_cap;
  return c;
}

VerificationReport check_bialgebra(const HopfData& H, const VerifyOptions& opts) {
  VerificationReport rep("bialgebra axioms");
  const std::size_t n = H.dim;

  rep.add(sweep_check(
      "associativity", H, 3,
      [&](const std::vector<std::size_t>& t) {
        SVec ei = svec_unit(t[0]), ej = svec_unit(t[1]), ek = svec_unit(t[2]);
        return svec_diff(multiply(H, multiply(H, ei, ej), ek),
                         multiply(H, ei, multiply(H, ej, ek)));
      },
      opts));

  rep.add(sweep_check(
      "unit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec e = svec_unit(t[0]);
        SVec left = svec_diff(multiply(H, H.unit, e), e);
        if (!left.empty()) return left;
        return svec_diff(multiply(H, e, H.unit), e);
      },
      opts));

  rep.add(sweep_check(
      "coassociativity", H, 1,
      [&](const std::vector<std::size_t>& t) {
        // (Δ⊗Id)Δ vs (Id⊗Δ)Δ
        SVec lhs, rhs;
        for (const auto& [jk, c] : H.comul[t[0]]) {
          std::size_t j = jk / n, k = jk % n;
          for (const auto& [pq, x] : H.comul[j]) svec_add(lhs, pq * n + k, c * x);
          for (const auto& [pq, x] : H.comul[k]) svec_add(rhs, (std::size_t)j * n * n + pq, c * x);
        }
        return svec_diff(lhs, rhs);
      },
      opts));

  rep.add(sweep_check(
      "counit", H, 1,
      [&](const std::vector<std::size_t>& t) {
        SVec left, right;
        for (const auto& [jk, c] : H.comul[t[0]]) {
          std::size_t j = jk / n, k = jk % n;
          svec_add(left, k, c * H.counit[j]);
          svec_add(right, j, c * H.counit[k]);
        }
        SVec e = svec_unit(t[0]);
        SVec d = svec_diff(left, e);
        if (!d.empty()) return d;
        return svec_diff(right, e);
      },
      opts));

  rep.add(sweep_check(
      "comul_algebra_morphism", H, 2,
      [&](const std::vector<std::size_t>& t) {
        SVec lhs = comultiply(H, multiply(H, svec_unit(t[0]), svec_unit(t[1])));
        SVec rhs = power_multiply(H, H.comul[t[0]], H.comul[t[1]], 2);
        return svec_diff(lhs, rhs);
      },
      opts));

  rep.add(sweep_check(
      "comul_unital", H, 0,
      [&](const std::vector<std::size_t>&) {
        SVec unit2;
        for (const auto& [i, x] : H.unit)
          for (const auto& [j, y] : H.unit) svec_add(unit2, i * n + j, x * y);
        return svec_diff(comultiply(H, H.unit), unit2);
      },
      opts));

  rep.add(sweep_check(
      "counit_algebra_morphism", H, 2,
      [&](const std::vector<std::size_t>& t) {
        Scalar lhs = counit_of(H, multiply(H, svec_unit(t[0]), svec_unit(t[1])));
        Scalar rhs = H.counit[t[0]] * H.counit[t[1]];
        return svec_unit(0, lhs - rhs);
      },
      opts));

  return rep;
}

VerificationReport check_hopf(const HopfData& H, const VerifyOptions& opts) {
  VerificationReport rep = check_bialgebra(H, opts);
  rep.set_subject("hopf axioms");
  if (!H.antipode) throw MissingAntipode("hopf check requires an antipode");
  const std::size_t n = H.dim;

  rep.add(sweep_check(
      "antipode_left", H, 1,
      [&, n](const std::vector<std::size_t>& t) {
        // T(a1) a2 = ε(a) 1
        SVec acc;
        for (const auto& [jk, c] : H.comul[t[0]]) {
          std::size_t j = jk / n, k = jk % n;
          svec_add(acc, multiply(H, antipode_apply(H, svec_unit(j)), svec_unit(k)), c);
        }
        return svec_diff(acc, svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));

  rep.add(sweep_check(
      "antipode_right", H, 1,
      [&, n](const std::vector<std::size_t>& t) {
        SVec acc;
        for (const auto& [jk, c] : H.comul[t[0]]) {
          std::size_t j = jk / n, k = jk % n;
          svec_add(acc, multiply(H, svec_unit(j), antipode_apply(H, svec_unit(k))), c);
        }
        return svec_diff(acc, svec_scaled(H.unit, H.counit[t[0]]));
      },
      opts));

  return rep;
}

HopfData substitute_hopf(const HopfData& H, const std::map<std::string, Scalar>& bindings) {
  HopfData r = H;
  auto sub_svec = [&](const SVec& v) {
    SVec out;
    for (const auto& [i, c] : v) {
      Scalar s = c.substitute(bindings);
      if (!s.is_zero()) out.emplace(i, s);
    }
    return out;
  };
  for (auto& row : r.mul)
    for (auto& e : row)
      if (e) e = sub_svec(*e);
  r.unit = sub_svec(H.unit);
  for (std::size_t i = 0; i < H.dim; ++i) r.comul[i] = sub_svec(H.comul[i]);
  for (auto& c : r.counit) c = c.substitute(bindings);
  if (r.antipode)
    for (auto& col : *r.antipode) col = sub_svec(col);

  std::set<std::string> names;
  auto collect = [&](const Scalar& s) {
    for (const auto& v : s.num().vars()) names.insert(v);
    for (const auto& v : s.den().vars()) names.insert(v);
  };
  for (const auto& row : r.mul)
    for (const auto& e : row)
      if (e)
        for (const auto& [i, c] : *e) collect(c);
  for (const auto& [i, c] : r.unit) collect(c);
  for (const auto& v : r.comul)
    for (const auto& [i, c] : v) collect(c);
  for (const auto& c : r.counit) collect(c);
  if (r.antipode)
    for (const auto& col : *r.antipode)
      for (const auto& [i, c] : col) collect(c);
  r.params.assign(names.begin(), names.end());
  return r;
}

}  // namespace ydforge
