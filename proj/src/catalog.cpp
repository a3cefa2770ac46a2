#include "ydforge/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "catalog_golden.hpp"
#include "ydforge/errors.hpp"
#include "ydforge/presentation.hpp"

namespace ydforge {

namespace {

std::string xname(std::size_t n, std::size_t i) {
  return n == 1 ? "x" : "x" + std::to_string(i);
}

// g, x_1..x_n with g g = 1, g x_i = -x_i g, x_i x_j = -x_j x_i, x_i^2 = 0.
Presentation en_presentation(std::size_t n) {
  Presentation P;
  P.name = "en_" + std::to_string(n);
  P.generators.push_back({"g", 1});
  for (std::size_t i = 1; i <= n; ++i) P.generators.push_back({xname(n, i), 1});
  P.rewrite_order.push_back(0);
  for (int i = static_cast<int>(n); i >= 1; --i) P.rewrite_order.push_back(i);

  P.rules.push_back({{0, 0}, {{{}, Scalar(1)}}});
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    P.rules.push_back({{0, i}, {{{i, 0}, Scalar(-1)}}});
    P.rules.push_back({{i, i}, {}});
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      P.rules.push_back({{j, i}, {{{i, j}, Scalar(-1)}}});
  }

  P.comul_gen.push_back({{{0}, {0}, Scalar(1)}});
  P.counit_gen.push_back(Scalar(1));
  P.antipode_gen.push_back({{{0}, Scalar(1)}});
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    P.comul_gen.push_back({{{i}, {}, Scalar(1)}, {{0}, {i}, Scalar(1)}});
    P.counit_gen.push_back(Scalar(0));
    P.antipode_gen.push_back({{{i, 0}, Scalar(1)}});
  }
  return P;
}

// a, b, c, d with the quantum determinant relation, q = s^2, truncated.
Presentation slq2_presentation(int cap) {
  Presentation P;
  P.name = "slq2";
  P.params = {"s"};
  P.generators = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  P.rewrite_order = {3, 2, 1, 0};
  P.degree_cap = cap;

  const Scalar q = Scalar::param("s").pow(2);
  const Scalar q2 = q * q;
  P.rules.push_back({{1, 0}, {{{0, 1}, q}}});
  P.rules.push_back({{2, 0}, {{{0, 2}, q}}});
  P.rules.push_back({{2, 1}, {{{1, 2}, Scalar(1)}}});
  P.rules.push_back({{3, 1}, {{{1, 3}, q}}});
  P.rules.push_back({{3, 2}, {{{2, 3}, q}}});
  P.rules.push_back({{1, 2}, {{{0, 3}, q}, {{}, -q}}});
  P.rules.push_back({{3, 0}, {{{0, 3}, q2}, {{}, Scalar(1) - q2}}});

  P.comul_gen = {
      {{{0}, {0}, Scalar(1)}, {{1}, {2}, Scalar(1)}},
      {{{0}, {1}, Scalar(1)}, {{1}, {3}, Scalar(1)}},
      {{{2}, {0}, Scalar(1)}, {{3}, {2}, Scalar(1)}},
      {{{2}, {1}, Scalar(1)}, {{3}, {3}, Scalar(1)}},
  };
  P.counit_gen = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  P.antipode_gen = {{{{3}, Scalar(1)}},
                    {{{1}, -q}},
                    {{{2}, -q.inverse()}},
                    {{{0}, Scalar(1)}}};
  return P;
}

// a, b, c, d with diagonal-pair vanishing, closes at dimension eight.
Presentation suzuki_presentation(int nu, int lambda) {
  Presentation P;
  P.name = "suzuki";
  P.params = {"alpha", "beta"};
  P.generators = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  P.rewrite_order = {3, 2, 0, 1};

  for (const auto& w : {Word{0, 1}, Word{1, 0}, Word{0, 2}, Word{2, 0},
                        Word{1, 3}, Word{3, 1}, Word{2, 3}, Word{3, 2}})
    P.rules.push_back({w, {}});
  P.rules.push_back({{2, 1}, {{{1, 2}, Scalar(lambda)}}});
  P.rules.push_back({{3, 0}, {{{0, 3}, Scalar(1)}}});
  P.rules.push_back({{0, 0}, {{{}, Scalar(1)}, {{1, 1}, Scalar(-nu)}}});
  P.rules.push_back({{2, 2}, {{{1, 1}, Scalar(1)}}});
  P.rules.push_back({{3, 3}, {{{}, Scalar(1)}, {{1, 1}, Scalar(-nu)}}});
  P.rules.push_back({{1, 1, 1}, {{{1}, Scalar(nu)}}});
  P.rules.push_back({{1, 1, 2}, {{{2}, Scalar(nu)}}});

  P.comul_gen = {
      {{{0}, {0}, Scalar(1)}, {{1}, {2}, Scalar(1)}},
      {{{0}, {1}, Scalar(1)}, {{1}, {3}, Scalar(1)}},
      {{{2}, {0}, Scalar(1)}, {{3}, {2}, Scalar(1)}},
      {{{2}, {1}, Scalar(1)}, {{3}, {3}, Scalar(1)}},
  };
  P.counit_gen = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  P.antipode_gen = {{{{0, 0, 0}, Scalar(1)}},
                    {{{2, 2, 2}, Scalar(1)}},
                    {{{1, 1, 1}, Scalar(1)}},
                    {{{3, 3, 3}, Scalar(1)}}};
  return P;
}

struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
};

GroupTable c2_table() { return {{"1", "g"}, {{0, 1}, {1, 0}}, {0, 1}}; }

GroupTable s3_table() {
  using P3 = std::array<int, 3>;
  const std::vector<P3> elems = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1},  // 1, r, r^2
      {0, 2, 1}, {2, 1, 0}, {1, 0, 2},  // s, sr, sr^2
  };
  const auto index_of = [&](const P3& p) -> std::size_t {
    return static_cast<std::size_t>(
        std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  GroupTable t;
  t.labels = {"1", "r", "r^2", "s", "sr", "sr^2"};
  t.mul.assign(6, std::vector<std::size_t>(6));
  t.inv.assign(6, 0);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      P3 comp;
      for (int p = 0; p < 3; ++p) comp[p] = elems[i][elems[j][p]];
      t.mul[i][j] = index_of(comp);
    }
    P3 inv;
    for (int p = 0; p < 3; ++p) inv[elems[i][p]] = p;
    t.inv[i] = index_of(inv);
  }
  return t;
}

HopfData group_hopf(const GroupTable& t) {
  const std::size_t n = t.labels.size();
  HopfData H;
  H.dim = n;
  H.basis = t.labels;
  H.mul.assign(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H.mul[i][j] = svec_unit(t.mul[i][j]);
  H.unit = svec_unit(0);
  H.comul.resize(n);
  for (std::size_t i = 0; i < n; ++i) H.comul[i] = svec_unit(i * n + i);
  H.counit.assign(n, Scalar(1));
  std::vector<SVec> S(n);
  for (std::size_t i = 0; i < n; ++i) S[i] = svec_unit(t.inv[i]);
  H.antipode = std::move(S);
  H.validate();
  return H;
}

std::string dual_label(std::string l) {
  l.erase(std::remove(l.begin(), l.end(), '^'), l.end());
  return "d_" + l;
}

HopfData dual_group_hopf(const GroupTable& t) {
  const std::size_t n = t.labels.size();
  HopfData H;
  H.dim = n;
  for (const auto& l : t.labels) H.basis.push_back(dual_label(l));
  H.mul.assign(n, std::vector<std::optional<SVec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      H.mul[i][j] = (i == j) ? svec_unit(i) : SVec{};
  for (std::size_t i = 0; i < n; ++i) svec_add(H.unit, i, Scalar(1));
  H.comul.resize(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      svec_add(H.comul[t.mul[h][k]], h * n + k, Scalar(1));
  H.counit.assign(n, Scalar(0));
  H.counit[0] = Scalar(1);
  std::vector<SVec> S(n);
  for (std::size_t i = 0; i < n; ++i) S[i] = svec_unit(t.inv[i]);
  H.antipode = std::move(S);
  H.validate();
  return H;
}

BilinearForm trivial_form(const HopfData& H) {
  BilinearForm R = BilinearForm::zero(H.dim);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j)
      R.values[i][j] = H.counit[i] * H.counit[j];
  return R;
}

std::vector<std::string> collect_params(const std::vector<std::vector<Scalar>>& A) {
  std::set<std::string> names;
  for (const auto& row : A)
    for (const auto& v : row) {
      for (const auto& x : v.num().vars()) names.insert(x);
      for (const auto& x : v.den().vars()) names.insert(x);
    }
  return {names.begin(), names.end()};
}

}  // namespace

SVec golden_to_svec(const HopfData& H, const GoldenVec& g) {
  SVec v;
  for (const auto& [label, text] : g) {
    const auto it = std::find(H.basis.begin(), H.basis.end(), label);
    if (it == H.basis.end()) throw InputError("unknown basis label " + label);
    svec_add(v, static_cast<std::size_t>(it - H.basis.begin()),
             Scalar::parse(text));
  }
  return v;
}

CatalogEntry build_sweedler() {
  Presentation P = en_presentation(1);
  P.name = "sweedler";
  P.params = {"k"};
  const RewriteEngine E(P);

  CatalogEntry e;
  e.name = "sweedler";
  e.hopf = E.structure_constants();
  const Scalar k = Scalar::param("k");
  e.R = BilinearForm::zero(4);
  e.R.values = {{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                {Scalar(1), Scalar(-1), Scalar(0), Scalar(0)},
                {Scalar(0), Scalar(0), k, -k},
                {Scalar(0), Scalar(0), k, k}};
  e.R_inverse = e.R.transpose();
  e.golden = golden::sweedler();
  e.golden.cotriangular = true;
  e.golden.dot_commutative = true;
  e.golden.dot_antipode_involutive = true;
  return e;
}

CatalogEntry build_en(std::size_t n, std::vector<std::vector<Scalar>> A,
                      bool symbolic_symmetric) {
  if (n < 1 || n > 4)
    throw BadDimension("supported generator counts are 1 through 4, got " +
                       std::to_string(n));
  if (A.empty()) {
    A.assign(n, std::vector<Scalar>(n));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t lo = symbolic_symmetric ? std::min(i, j) : i;
        const std::size_t hi = symbolic_symmetric ? std::max(i, j) : j;
        A[i - 1][j - 1] =
            Scalar::param("A" + std::to_string(lo) + std::to_string(hi));
      }
  } else {
    if (symbolic_symmetric)
      throw InputError("symbolic_symmetric needs an empty coefficient matrix");
    if (A.size() != n) throw InputError("coefficient matrix must be n by n");
    for (const auto& row : A)
      if (row.size() != n) throw InputError("coefficient matrix must be n by n");
  }
  bool symmetric = true;
  for (std::size_t i = 0; i < n && symmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (A[i][j] != A[j][i]) {
        symmetric = false;
        break;
      }

  Presentation P = en_presentation(n);
  P.params = collect_params(A);
  const RewriteEngine E(P);

  CatalogEntry e;
  e.name = "en_" + std::to_string(n);
  e.hopf = E.structure_constants();
  std::vector<std::vector<Scalar>> gen_values(
      n + 1, std::vector<Scalar>(n + 1, Scalar(0)));
  gen_values[0][0] = Scalar(-1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) gen_values[i][j] = A[i - 1][j - 1];
  e.R = extend_bilinear_form(E, e.hopf, gen_values);
  if (symmetric) e.R_inverse = e.R.transpose();
  e.golden = golden::en(n, A, symmetric);
  e.golden.cotriangular = symmetric;
  e.golden.dot_commutative = (n == 1);
  if (symmetric) e.golden.dot_antipode_involutive = true;
  return e;
}

CatalogEntry build_slq2(int degree_cap) {
  if (degree_cap < 2)
    throw PreconditionFail("the quantum 2x2 entry needs degree cap at least 2");
  const RewriteEngine E(slq2_presentation(degree_cap));

  CatalogEntry e;
  e.name = "slq2";
  e.hopf = E.structure_constants();
  const Scalar s = Scalar::param("s");
  const Scalar si = s.inverse();
  std::vector<std::vector<Scalar>> gv(4, std::vector<Scalar>(4, Scalar(0)));
  gv[0][0] = s;
  gv[0][3] = si;
  gv[3][0] = si;
  gv[3][3] = s;
  gv[1][2] = (s.pow(4) - 1) / s.pow(3);
  e.R = extend_bilinear_form(E, e.hopf, gv);
  std::vector<std::vector<Scalar>> gi(4, std::vector<Scalar>(4, Scalar(0)));
  gi[0][0] = si;
  gi[0][3] = s;
  gi[3][0] = s;
  gi[3][3] = si;
  gi[1][2] = (Scalar(1) - s.pow(4)) / s;
  e.R_inverse = extend_bilinear_form(E, e.hopf, gi, true);
  e.golden = golden::slq2();
  e.golden.cotriangular = false;
  e.golden.dot_commutative = false;
  e.golden.dot_antipode_involutive = false;
  return e;
}

CatalogEntry build_suzuki(int nu, int lambda) {
  if ((nu != 1 && nu != -1) || (lambda != 1 && lambda != -1))
    throw InputError("sign parameters must be +1 or -1");
  const RewriteEngine E(suzuki_presentation(nu, lambda));

  CatalogEntry e;
  e.name = "suzuki";
  e.hopf = E.structure_constants();
  const Scalar al = Scalar::param("alpha");
  const Scalar be = Scalar::param("beta");
  std::vector<std::vector<Scalar>> gv(4, std::vector<Scalar>(4, Scalar(0)));
  gv[1][1] = al;
  gv[2][2] = al;
  gv[1][2] = be;
  gv[2][1] = be;
  e.R = extend_bilinear_form(E, e.hopf, gv);
  std::vector<std::vector<Scalar>> gi(4, std::vector<Scalar>(4, Scalar(0)));
  gi[1][1] = al.inverse();
  gi[2][2] = al.inverse();
  gi[1][2] = be.inverse();
  gi[2][1] = be.inverse();
  e.R_inverse = extend_bilinear_form(E, e.hopf, gi, true);
  e.golden = golden::suzuki(nu, lambda);
  e.golden.cotriangular = false;
  e.golden.dot_commutative = true;
  e.golden.dot_antipode_involutive = false;
  return e;
}

CatalogEntry build_group_algebra(const std::string& which) {
  CatalogEntry e;
  if (which == "C2") {
    e.name = "c2";
    e.hopf = group_hopf(c2_table());
    e.golden = golden::group_c2();
    e.golden.cotriangular = true;
    e.golden.dot_commutative = true;
    e.golden.dot_antipode_involutive = true;
  } else if (which == "S3") {
    e.name = "s3";
    e.hopf = group_hopf(s3_table());
    e.golden = golden::group_s3();
  } else {
    throw InputError("unknown group algebra " + which);
  }
  e.R = trivial_form(e.hopf);
  e.R_inverse = e.R;
  return e;
}

CatalogEntry build_dual_group_algebra(const std::string& which) {
  if (which != "S3") throw InputError("unknown dual group algebra " + which);
  CatalogEntry e;
  e.name = "s3_dual";
  e.hopf = dual_group_hopf(s3_table());
  e.R = trivial_form(e.hopf);
  e.R_inverse = e.R;
  e.golden = golden::dual_s3();
  e.golden.cotriangular = true;
  e.golden.dot_commutative = true;
  e.golden.dot_antipode_involutive = true;
  return e;
}

std::vector<std::string> catalog_names() {
  return {"sweedler", "en", "slq2", "suzuki", "c2", "s3", "s3_dual"};
}

CatalogEntry build_by_name(const std::string& name) {
  if (name == "sweedler") return build_sweedler();
  if (name == "en") return build_en(2, {}, true);
  if (name == "slq2") return build_slq2(3);
  if (name == "suzuki") return build_suzuki();
  if (name == "c2") return build_group_algebra("C2");
  if (name == "s3") return build_group_algebra("S3");
  if (name == "s3_dual") return build_dual_group_algebra("S3");
  throw InputError("unknown catalog entry " + name);
}

}  // namespace ydforge
