#pragma once

// Hand-computed structure constants of the 4-dimensional Hopf algebra with
// generators g, x subject to g^2 = 1, x^2 = 0, xg = -gx, used as an
// independent oracle by several test suites. Basis order: 1, g, x, xg.
//
// Multiplication facts used below, all derived by hand from the relations:
//   g*x = -xg,  g*xg = -x,  x*g = xg,  xg*g = x,
//   x*x = x*xg = xg*x = xg*xg = 0
// Coproduct: D(g) = g(x)g, D(x) = x(x)1 + g(x)x, D(xg) = xg(x)g + 1(x)xg.
// Antipode: S(1)=1, S(g)=g, S(x)=xg, S(xg)=-x.

#include <vector>

#include "ydforge/hopf.hpp"

inline ydforge::HopfData oracle_sweedler() {
  using ydforge::Scalar;
  using ydforge::SVec;
  ydforge::HopfData H;
  H.dim = 4;
  H.basis = {"1", "g", "x", "xg"};
  H.params = {"k"};
  auto sv = [](std::initializer_list<std::pair<std::size_t, long>> entries) {
    SVec v;
    for (const auto& [i, c] : entries)
      if (c) v.emplace(i, Scalar(c));
    return v;
  };
  H.mul.assign(4, std::vector<std::optional<SVec>>(4));
  for (std::size_t j = 0; j < 4; ++j) {
    H.mul[0][j] = sv({{j, 1}});
    if (j) H.mul[j][0] = sv({{j, 1}});
  }
  H.mul[1][1] = sv({{0, 1}});
  H.mul[1][2] = sv({{3, -1}});
  H.mul[1][3] = sv({{2, -1}});
  H.mul[2][1] = sv({{3, 1}});
  H.mul[3][1] = sv({{2, 1}});
  H.mul[2][2] = sv({});
  H.mul[2][3] = sv({});
  H.mul[3][2] = sv({});
  H.mul[3][3] = sv({});
  H.unit = sv({{0, 1}});
  H.comul = {
      sv({{0 * 4 + 0, 1}}),
      sv({{1 * 4 + 1, 1}}),
      sv({{2 * 4 + 0, 1}, {1 * 4 + 2, 1}}),
      sv({{3 * 4 + 1, 1}, {0 * 4 + 3, 1}}),
  };
  H.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  H.antipode = std::vector<SVec>{
      sv({{0, 1}}),
      sv({{1, 1}}),
      sv({{3, 1}}),
      sv({{2, -1}}),
  };
  return H;
}

// Left action table of the oracle algebra on itself (a->b rows by a, columns
// by b), hand-derived: 1 acts as identity; g fixes 1,g and negates x,xg;
// x sends x to k(1-g), xg to k(g-1), kills 1,g; xg sends x to k(g-1),
// xg to k(1-g).
inline std::vector<std::vector<ydforge::SVec>> oracle_sweedler_left_action() {
  using ydforge::Scalar;
  using ydforge::SVec;
  Scalar k = Scalar::param("k");
  SVec zero;
  SVec one = {{0, Scalar(1)}};
  SVec g = {{1, Scalar(1)}};
  SVec x = {{2, Scalar(1)}};
  SVec xg = {{3, Scalar(1)}};
  SVec mx = {{2, Scalar(-1)}};
  SVec mxg = {{3, Scalar(-1)}};
  SVec k_one_minus_g = {{0, k}, {1, -k}};
  SVec k_g_minus_one = {{0, -k}, {1, k}};
  return {
      {one, g, x, xg},
      {one, g, mx, mxg},
      {zero, zero, k_one_minus_g, k_g_minus_one},
      {zero, zero, k_g_minus_one, k_one_minus_g},
  };
}

// Right action table (a<-b rows by a, columns by b), hand-derived.
inline std::vector<std::vector<ydforge::SVec>> oracle_sweedler_right_action() {
  using ydforge::Scalar;
  using ydforge::SVec;
  Scalar k = Scalar::param("k");
  SVec zero;
  SVec one = {{0, Scalar(1)}};
  SVec g = {{1, Scalar(1)}};
  SVec x = {{2, Scalar(1)}};
  SVec xg = {{3, Scalar(1)}};
  SVec mx = {{2, Scalar(-1)}};
  SVec mxg = {{3, Scalar(-1)}};
  SVec k_one_minus_g = {{0, k}, {1, -k}};
  return {
      {one, one, zero, zero},
      {g, g, zero, zero},
      {x, mx, k_one_minus_g, k_one_minus_g},
      {xg, mxg, k_one_minus_g, k_one_minus_g},
  };
}

// The coquasitriangular form R(e_i, e_j) and its convolution inverse on the
// oracle algebra, as 4x4 matrices.
inline std::vector<std::vector<ydforge::Scalar>> oracle_sweedler_R() {
  using ydforge::Scalar;
  Scalar k = Scalar::param("k");
  Scalar o(1), z(0);
  return {
      {o, o, z, z},
      {o, -o, z, z},
      {z, z, k, -k},
      {z, z, k, k},
  };
}

inline std::vector<std::vector<ydforge::Scalar>> oracle_sweedler_R_inverse() {
  using ydforge::Scalar;
  Scalar k = Scalar::param("k");
  Scalar o(1), z(0);
  return {
      {o, o, z, z},
      {o, -o, z, z},
      {z, z, k, k},
      {z, z, -k, k},
  };
}

// Transmuted product table (rows a, columns b, entry a.b) and transmuted
// antipode on the oracle algebra, hand-derived.
inline std::vector<std::vector<ydforge::SVec>> oracle_sweedler_dot() {
  using ydforge::Scalar;
  using ydforge::SVec;
  Scalar k = Scalar::param("k");
  SVec one = {{0, Scalar(1)}};
  SVec g = {{1, Scalar(1)}};
  SVec x = {{2, Scalar(1)}};
  SVec xg = {{3, Scalar(1)}};
  SVec k_one_minus_g = {{0, k}, {1, -k}};
  SVec k_g_minus_one = {{0, -k}, {1, k}};
  return {
      {one, g, x, xg},
      {g, one, xg, x},
      {x, xg, k_one_minus_g, k_g_minus_one},
      {xg, x, k_g_minus_one, k_one_minus_g},
  };
}

inline std::vector<ydforge::SVec> oracle_sweedler_dot_antipode() {
  using ydforge::Scalar;
  using ydforge::SVec;
  return {
      {{0, Scalar(1)}},
      {{1, Scalar(1)}},
      {{3, Scalar(-1)}},
      {{2, Scalar(-1)}},
  };
}
