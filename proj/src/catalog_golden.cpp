#include "catalog_golden.hpp"

#include <string>

namespace ydforge::golden {

namespace {

using GV = GoldenVec;

GV lbl(const std::string& l) { return {{l, "1"}}; }
GV neg(const std::string& l) { return {{l, "-1"}}; }
GV zero() { return {}; }

std::string xname(std::size_t n, std::size_t i) {
  return n == 1 ? "x" : "x" + std::to_string(i);
}

}  // namespace

GoldenTables en(std::size_t n, const std::vector<std::vector<Scalar>>& A,
                bool with_tables) {
  GoldenTables t;
  t.labels = {"1", "g"};
  for (std::size_t i = 1; i <= n; ++i) t.labels.push_back(xname(n, i));
  for (std::size_t i = 1; i <= n; ++i) t.labels.push_back(xname(n, i) + "g");
  if (!with_tables) return t;

  const std::size_t m = t.labels.size();
  // cell helpers on generator indices 1..n
  const auto a = [&](std::size_t i, std::size_t j) { return A[i - 1][j - 1]; };
  // A_ij(1-g) and A_ij(g-1)
  const auto one_minus_g = [&](std::size_t i, std::size_t j) -> GV {
    return {{"1", a(i, j).str()}, {"g", (-a(i, j)).str()}};
  };
  const auto g_minus_one = [&](std::size_t i, std::size_t j) -> GV {
    return {{"1", (-a(i, j)).str()}, {"g", a(i, j).str()}};
  };
  // x_i x_j reduced against the anticommutation rules, empty for i = j
  const auto xx = [&](std::size_t i, std::size_t j, bool with_g) -> GV {
    if (i == j) return {};
    const std::string tail = with_g ? "g" : "";
    if (i < j) return {{xname(n, i) + xname(n, j) + tail, "1"}};
    return {{xname(n, j) + xname(n, i) + tail, "-1"}};
  };
  const auto append = [](GV base, const GV& extra) {
    for (const auto& p : extra) base.push_back(p);
    return base;
  };

  t.left_action.assign(m, std::vector<GV>(m));
  t.dot.assign(m, std::vector<GV>(m));

  // row "1": both tables act as the identity on the column
  for (std::size_t c = 0; c < m; ++c) {
    t.left_action[0][c] = lbl(t.labels[c]);
    t.dot[0][c] = lbl(t.labels[c]);
  }
  // row "g"
  t.left_action[1][0] = lbl("1");
  t.left_action[1][1] = lbl("g");
  t.dot[1][0] = lbl("g");
  t.dot[1][1] = lbl("1");
  for (std::size_t j = 1; j <= n; ++j) {
    t.left_action[1][1 + j] = neg(xname(n, j));
    t.left_action[1][1 + n + j] = neg(xname(n, j) + "g");
    t.dot[1][1 + j] = lbl(xname(n, j) + "g");
    t.dot[1][1 + n + j] = lbl(xname(n, j));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t rx = 1 + i;       // row of x_i
    const std::size_t rxg = 1 + n + i;  // row of x_i g
    t.left_action[rx][0] = zero();
    t.left_action[rx][1] = zero();
    t.left_action[rxg][0] = zero();
    t.left_action[rxg][1] = zero();
    t.dot[rx][0] = lbl(xname(n, i));
    t.dot[rx][1] = lbl(xname(n, i) + "g");
    t.dot[rxg][0] = lbl(xname(n, i) + "g");
    t.dot[rxg][1] = lbl(xname(n, i));
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t cx = 1 + j;
      const std::size_t cxg = 1 + n + j;
      t.left_action[rx][cx] = one_minus_g(i, j);
      t.left_action[rx][cxg] = g_minus_one(i, j);
      t.left_action[rxg][cx] = g_minus_one(i, j);
      t.left_action[rxg][cxg] = one_minus_g(i, j);
      t.dot[rx][cx] = append(one_minus_g(i, j), xx(i, j, false));
      t.dot[rx][cxg] = append(g_minus_one(i, j), xx(i, j, true));
      t.dot[rxg][cx] = append(g_minus_one(i, j), xx(i, j, true));
      t.dot[rxg][cxg] = append(one_minus_g(i, j), xx(i, j, false));
    }
  }

  t.dot_antipode.assign(m, GV{});
  t.dot_antipode[0] = lbl("1");
  t.dot_antipode[1] = lbl("g");
  for (std::size_t i = 1; i <= n; ++i) {
    t.dot_antipode[1 + i] = neg(xname(n, i) + "g");
    t.dot_antipode[1 + n + i] = neg(xname(n, i));
  }
  return t;
}

GoldenTables sweedler() {
  GoldenTables t = en(1, {{Scalar::param("k")}}, true);
  const std::string k = "k";
  const std::string mk = "-k";
  // the one entry with a printed right action table
  t.right_action = {
      {lbl("1"), lbl("1"), zero(), zero()},
      {lbl("g"), lbl("g"), zero(), zero()},
      {lbl("x"), neg("x"), {{"1", k}, {"g", mk}}, {{"1", k}, {"g", mk}}},
      {lbl("xg"), neg("xg"), {{"1", k}, {"g", mk}}, {{"1", k}, {"g", mk}}},
  };
  return t;
}

GoldenTables slq2() {
  GoldenTables t;
  t.labels = {"a", "b", "c", "d"};
  const Scalar q = Scalar::param("s").pow(2);
  const Scalar qi = q.inverse();
  const auto s1 = [](const Scalar& v) { return v.str(); };

  t.dot = {
      {{{"a^2", "1"}},
       {{"ab", s1(q)}},
       {{"ac", s1(qi)}},
       {{"ad", "1"}}},
      // the listed basis eliminates bc = q*ad - q, so cells quoted with a bc
      // term carry it in reduced form
      {{{"ab", s1(qi)}},
       {{"b^2", s1(qi)}},
       {{"a^2", s1(q * q - 1)}, {"ad", "1"}, {"1", s1(-(q * q))}},
       {{"ab", s1(q * q * q - q)}, {"bd", "1"}}},
      {{{"ac", s1(q)}},
       {{"ad", s1(q * q)}, {"1", s1(-(q * q))}},
       {{"c^2", s1(qi)}},
       {{"cd", "1"}}},
      {{{"ad", "1"}},
       {{"bd", "1"}},
       {{"ac", s1(q * q * q - q)}, {"cd", "1"}},
       {{"d^2", "1"}}},
  };
  t.left_action = {
      {lbl("a"), {{"b", s1(qi)}}, {{"c", s1(q)}}, lbl("d")},
      {{{"b", s1(Scalar(1) - qi * qi)}},
       zero(),
       {{"d", s1(q - qi)}, {"a", s1(qi - q)}},
       {{"b", s1(Scalar(1) - q * q)}}},
      {zero(), zero(), zero(), zero()},
      {lbl("a"), {{"b", s1(q)}}, {{"c", s1(qi)}}, lbl("d")},
  };
  t.dot_antipode = {
      {{"d", s1(qi * qi)}, {"a", s1(Scalar(1) - qi * qi)}},
      {{"b", s1(-(qi * qi))}},
      {{"c", s1(-(qi * qi))}},
      {{"a", "1"}},
  };
  return t;
}

GoldenTables suzuki(int nu, int lambda) {
  GoldenTables t;
  t.labels = {"a", "b", "c", "d"};
  const Scalar al = Scalar::param("alpha");
  const Scalar be = Scalar::param("beta");
  const Scalar i22 = (al.pow(2) * be.pow(2)).inverse();
  const Scalar i31 = (al.pow(3) * be).inverse();
  const Scalar i13 = Scalar(lambda) * (al * be.pow(3)).inverse();
  const auto s1 = [](const Scalar& v) { return v.str(); };

  // a^2 is not a listed basis element; cells quoted with it carry the
  // reduced form a^2 = 1 - nu*b^2
  const Scalar mn = Scalar(-nu);
  t.dot = {
      {{{"ad", s1(i22)}}, zero(), zero(), {{"1", s1(i22)}, {"b^2", s1(mn * i22)}}},
      {zero(), {{"bc", s1(i22)}}, {{"b^2", s1(i31)}}, zero()},
      {zero(), {{"b^2", s1(i31)}}, {{"bc", s1(i13)}}, zero()},
      {{{"1", s1(i22)}, {"b^2", s1(mn * i22)}}, zero(), zero(), {{"ad", s1(i22)}}},
  };
  t.left_action = {
      {lbl("d"), {{"c", s1(be / al)}}, {{"b", s1(al / be)}}, lbl("a")},
      {zero(), zero(), zero(), zero()},
      {zero(), zero(), zero(), zero()},
      {lbl("d"), {{"c", s1(al / be)}}, {{"b", s1(be / al)}}, lbl("a")},
  };
  // cubes reduce: a^3 = a, d^3 = d, b^3 = nu b, c^3 = nu c
  const Scalar p22 = al.pow(2) * be.pow(2);
  const Scalar p31 = Scalar(nu) * al.pow(3) * be;
  t.dot_antipode = {
      {{"d", s1(p22)}},
      {{"b", s1(p31)}},
      {{"c", s1(p31)}},
      {{"a", s1(p22)}},
  };
  return t;
}

GoldenTables group_c2() {
  GoldenTables t;
  t.labels = {"1", "g"};
  t.left_action = {{lbl("1"), lbl("g")}, {lbl("1"), lbl("g")}};
  t.right_action = {{lbl("1"), lbl("1")}, {lbl("g"), lbl("g")}};
  t.dot = {{lbl("1"), lbl("g")}, {lbl("g"), lbl("1")}};
  t.dot_antipode = {lbl("1"), lbl("g")};
  return t;
}

GoldenTables group_s3() {
  GoldenTables t;
  // the trivial form is not coquasitriangular here (the algebra is not
  // commutative), so no transmutation expectations are frozen
  t.labels = {"1", "r", "r^2", "s", "sr", "sr^2"};
  return t;
}

GoldenTables dual_s3() {
  GoldenTables t;
  t.labels = {"d_1", "d_r", "d_r2", "d_s", "d_sr", "d_sr2"};
  const std::size_t m = 6;
  t.left_action.assign(m, std::vector<GV>(m, zero()));
  t.right_action.assign(m, std::vector<GV>(m, zero()));
  t.dot.assign(m, std::vector<GV>(m, zero()));
  for (std::size_t c = 0; c < m; ++c) t.left_action[0][c] = lbl(t.labels[c]);
  for (std::size_t r = 0; r < m; ++r) t.right_action[r][0] = lbl(t.labels[r]);
  for (std::size_t i = 0; i < m; ++i) t.dot[i][i] = lbl(t.labels[i]);
  // inversion: r <-> r^2, the three reflections are involutions
  t.dot_antipode = {lbl("d_1"),  lbl("d_r2"), lbl("d_r"),
                    lbl("d_s"),  lbl("d_sr"), lbl("d_sr2")};
  return t;
}

}  // namespace ydforge::golden
