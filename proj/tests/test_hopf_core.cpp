#include <random>

#include "doctest.h"
#include "oracle_sweedler.hpp"
#include "ydforge/errors.hpp"
#include "ydforge/hopf.hpp"

using namespace ydforge;

TEST_CASE("oracle algebra satisfies all hopf axioms") {
  HopfData H = oracle_sweedler();
  H.validate();
  VerificationReport rep = check_hopf(H);
  for (const auto& c : rep.checks()) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK_FALSE(c.witness.has_value());
  }
  CHECK(rep.all_passed());
}

TEST_CASE("structure arithmetic on basis elements") {
  HopfData H = oracle_sweedler();
  // g*x = -xg
  CHECK(multiply(H, svec_unit(1), svec_unit(2)) == svec_unit(3, Scalar(-1)));
  // D(x) = x(x)1 + g(x)x
  SVec dx = comultiply(H, svec_unit(2));
  CHECK(dx == SVec{{2 * 4 + 0, Scalar(1)}, {1 * 4 + 2, Scalar(1)}});
  // unit law through the dense overload
  std::vector<Scalar> v = {Scalar(2), Scalar(0), Scalar::param("k"), Scalar(0)};
  std::vector<Scalar> e = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  CHECK(multiply(H, e, v) == to_svec(v));
  CHECK_THROWS_AS(multiply(H, std::vector<Scalar>(3, Scalar(1)), v), ShapeError);
}

TEST_CASE("corrupted product is caught with the first failing triple") {
  HopfData H = oracle_sweedler();
  H.mul[1][2] = SVec{{3, Scalar(1)}};  // flip the sign of g*x
  VerificationReport rep = check_bialgebra(H);
  const Check* assoc = rep.find("associativity");
  REQUIRE(assoc);
  CHECK_FALSE(assoc->passed);
  REQUIRE(assoc->witness.has_value());
  CHECK(assoc->witness->tuple == std::vector<std::size_t>{1, 1, 2});
  CHECK_FALSE(assoc->witness->diff.empty());
}

TEST_CASE("corrupted unit square is caught") {
  HopfData H = oracle_sweedler();
  H.mul[1][1] = SVec{{1, Scalar(1)}};  // g*g = g
  VerificationReport rep = check_hopf(H);
  const Check* assoc = rep.find("associativity");
  REQUIRE(assoc);
  CHECK_FALSE(assoc->passed);
  CHECK(assoc->witness->tuple == std::vector<std::size_t>{1, 1, 2});
  const Check* anti = rep.find("antipode_left");
  REQUIRE(anti);
  CHECK_FALSE(anti->passed);
  CHECK(anti->witness->tuple == std::vector<std::size_t>{1});
}

TEST_CASE("corrupted counit is caught at the first failing element") {
  HopfData H = oracle_sweedler();
  H.counit[1] = Scalar(0);
  VerificationReport rep = check_bialgebra(H);
  const Check* cu = rep.find("counit");
  REQUIRE(cu);
  CHECK_FALSE(cu->passed);
  CHECK(cu->witness->tuple == std::vector<std::size_t>{1});
  const Check* cm = rep.find("counit_algebra_morphism");
  REQUIRE(cm);
  CHECK_FALSE(cm->passed);
  CHECK(cm->witness->tuple == std::vector<std::size_t>{1, 1});
}

TEST_CASE("convolution with the antipode gives the convolution unit") {
  HopfData H = oracle_sweedler();
  LinMap id = LinMap::identity(4);
  LinMap T = antipode_map(H);
  LinMap ue = conv_unit(H, 1, 1);
  CHECK(convolution(H, id, T) == ue);
  CHECK(convolution(H, T, id) == ue);
  CHECK(convolution(H, ue, T) == T);
  CHECK(convolution(H, id, ue) == id);
}

TEST_CASE("convolution inverse of the identity is the antipode") {
  HopfData H = oracle_sweedler();
  LinMap inv = convolution_inverse(H, LinMap::identity(4));
  CHECK(inv == antipode_map(H));
}

TEST_CASE("convolution inverse of the antipode is the identity") {
  // S*Id = Id*S = u(eps) is the antipode axiom itself, so Id inverts S.
  HopfData H = oracle_sweedler();
  LinMap inv = convolution_inverse(H, antipode_map(H));
  CHECK(inv == LinMap::identity(4));
}

TEST_CASE("convolution inverse of the convolution unit is itself") {
  HopfData H = oracle_sweedler();
  LinMap ue = conv_unit(H, 1, 1);
  CHECK(convolution_inverse(H, ue) == ue);
}

TEST_CASE("zero map is not convolution invertible") {
  HopfData H = oracle_sweedler();
  LinMap zero;
  zero.n = 4;
  zero.dom_pow = zero.cod_pow = 1;
  zero.cols.resize(4);
  CHECK_THROWS_AS(convolution_inverse(H, zero), NotConvolutionInvertible);
}

TEST_CASE("hopf check without antipode raises") {
  HopfData H = oracle_sweedler();
  H.antipode.reset();
  CHECK_THROWS_AS(check_hopf(H), MissingAntipode);
  CHECK_THROWS_AS(antipode_apply(H, svec_unit(2)), MissingAntipode);
  // bialgebra checks still work
  CHECK(check_bialgebra(H).all_passed());
}

TEST_CASE("antipode squared is conjugation by the grouplike, not identity") {
  HopfData H = oracle_sweedler();
  LinMap T = antipode_map(H);
  LinMap T2 = compose(T, T);
  CHECK(T2.cols[2] == svec_unit(2, Scalar(-1)));
  CHECK(T2.cols[3] == svec_unit(3, Scalar(-1)));
  CHECK(compose(T2, T2) == LinMap::identity(4));
}

TEST_CASE("iterated coproduct agrees with both parenthesizations") {
  HopfData H = oracle_sweedler();
  const std::size_t n = 4;
  for (std::size_t i = 0; i < n; ++i) {
    SVec lhs = iterated_comul(H, svec_unit(i), 3);
    // (Id x D) D
    SVec rhs;
    for (const auto& [jk, c] : H.comul[i]) {
      std::size_t j = jk / n, k = jk % n;
      for (const auto& [pq, x] : H.comul[k]) svec_add(rhs, j * n * n + pq, c * x);
    }
    CHECK(lhs == rhs);
  }
  // triple splits of x: x(x)1(x)1 + g(x)x(x)1 + g(x)g(x)x
  auto splits = comul_splits(H, 2, 3);
  REQUIRE(splits.size() == 3);
  SVec d3 = iterated_comul(H, svec_unit(2), 3);
  CHECK(d3 == SVec{{std::size_t(2) * 16, Scalar(1)},
                   {std::size_t(1) * 16 + 2 * 4, Scalar(1)},
                   {std::size_t(1) * 16 + 1 * 4 + 2, Scalar(1)}});
  // m = 0 collapses to the counit
  CHECK(iterated_comul(H, svec_unit(1), 0) == svec_unit(0, Scalar(1)));
  CHECK(iterated_comul(H, svec_unit(2), 0).empty());
}

TEST_CASE("componentwise tensor product") {
  HopfData H = oracle_sweedler();
  // (g(x)x) * (x(x)g) = gx (x) xg = -xg (x) xg
  SVec a = svec_unit(1 * 4 + 2);
  SVec b = svec_unit(2 * 4 + 1);
  CHECK(power_multiply(H, a, b, 2) == svec_unit(std::size_t(3) * 4 + 3, Scalar(-1)));
  // scalar slot
  CHECK(power_multiply(H, svec_unit(0, Scalar(2)), svec_unit(0, Scalar(3)), 0) ==
        svec_unit(0, Scalar(6)));
}

namespace {

LinMap random_map(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> pick(0, 3);
  LinMap f;
  f.n = n;
  f.dom_pow = f.cod_pow = 1;
  f.cols.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (pick(rng) == 0) svec_add(f.cols[j], i, Scalar(coef(rng)));
  return f;
}

}  // namespace

TEST_CASE("convolution is associative with the convolution unit") {
  HopfData H = oracle_sweedler();
  std::mt19937_64 rng(4207);
  LinMap ue = conv_unit(H, 1, 1);
  for (int iter = 0; iter < 25; ++iter) {
    LinMap f = random_map(rng, 4);
    LinMap g = random_map(rng, 4);
    LinMap h = random_map(rng, 4);
    CHECK(convolution(H, convolution(H, f, g), h) == convolution(H, f, convolution(H, g, h)));
    CHECK(convolution(H, ue, f) == f);
    CHECK(convolution(H, f, ue) == f);
  }
}

TEST_CASE("parallel sweeps report the same witness as sequential") {
  HopfData H = oracle_sweedler();
  H.mul[1][2] = SVec{{3, Scalar(1)}};
  VerifyOptions seq, par;
  par.jobs = 3;
  VerificationReport a = check_bialgebra(H, seq);
  VerificationReport b = check_bialgebra(H, par);
  CHECK(a.to_json_string() == b.to_json_string());
  CHECK(a.to_markdown() == b.to_markdown());
}

TEST_CASE("substitution specializes every structure constant") {
  HopfData H = oracle_sweedler();
  // introduce a parameter, then substitute it away
  H.mul[2][2] = SVec{{0, Scalar::param("k")}};
  HopfData Hs = substitute_hopf(H, {{"k", Scalar(0)}});
  CHECK(Hs.mul[2][2]->empty());
  CHECK(Hs.params.empty());
}

TEST_CASE("report renderings are deterministic and sorted") {
  HopfData H = oracle_sweedler();
  H.counit[1] = Scalar(0);
  VerificationReport rep = check_bialgebra(H);
  std::string js = rep.to_json_string();
  CHECK(js.find("\"counit\"") != std::string::npos);
  CHECK(js.find("\"all_passed\": false") != std::string::npos);
  // check entries are sorted by name: associativity precedes coassociativity
  CHECK(js.find("associativity") < js.find("coassociativity"));
  std::string md = rep.to_markdown();
  CHECK(md.find("SOME CHECKS FAILED") != std::string::npos);
  CHECK(md.find("- counit: FAIL") != std::string::npos);
}
