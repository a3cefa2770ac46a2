#include "ydforge/presentation.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle_sweedler.hpp"
#include "ydforge/errors.hpp"
#include "ydforge/hopf.hpp"

using namespace ydforge;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

// Radford's four-dimensional algebra: g^2 = 1, x^2 = 0, gx = -xg.
Presentation sweedler_presentation() {
  Presentation P;
  P.name = "sweedler4";
  P.generators = {{"g", 1}, {"x", 1}};
  P.rewrite_order = {0, 1};
  P.rules = {
      {{0, 0}, {{{}, Scalar(1)}}},
      {{1, 1}, {}},
      {{0, 1}, {{{1, 0}, Scalar(-1)}}},
  };
  P.comul_gen = {
      {{{0}, {0}, Scalar(1)}},
      {{{1}, {}, Scalar(1)}, {{0}, {1}, Scalar(1)}},
  };
  P.counit_gen = {Scalar(1), Scalar(0)};
  // S(g) = g and S(x) = -gx; the engine reduces the latter to xg.
  P.antipode_gen = {{{{0}, Scalar(1)}}, {{{0, 1}, Scalar(-1)}}};
  return P;
}

// Anticommuting x1..xn with a grouplike involution g.
Presentation en_presentation(int n) {
  Presentation P;
  P.name = "e" + std::to_string(n);
  P.generators.push_back({"g", 1});
  for (int i = 1; i <= n; ++i)
    P.generators.push_back({"x" + std::to_string(i), 1});
  P.rewrite_order.push_back(0);
  for (int i = n; i >= 1; --i) P.rewrite_order.push_back(i);
  P.rules.push_back({{0, 0}, {{{}, Scalar(1)}}});
  for (int i = 1; i <= n; ++i) {
    P.rules.push_back({{0, i}, {{{i, 0}, Scalar(-1)}}});
    P.rules.push_back({{i, i}, {}});
    for (int j = i + 1; j <= n; ++j)
      P.rules.push_back({{j, i}, {{{i, j}, Scalar(-1)}}});
  }
  P.comul_gen.push_back({{{0}, {0}, Scalar(1)}});
  P.counit_gen.push_back(Scalar(1));
  P.antipode_gen.push_back({{{0}, Scalar(1)}});
  for (int i = 1; i <= n; ++i) {
    P.comul_gen.push_back({{{i}, {}, Scalar(1)}, {{0}, {i}, Scalar(1)}});
    P.counit_gen.push_back(Scalar(0));
    P.antipode_gen.push_back({{{i, 0}, Scalar(1)}});
  }
  return P;
}

// Quantum 2x2 matrix entries a,b,c,d with q = s^2, det relation eliminating
// bc, truncated at the given total degree.
Presentation slq2_presentation(int cap) {
  Presentation P;
  P.name = "slq2";
  P.params = {"s"};
  P.generators = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  P.rewrite_order = {3, 2, 1, 0};
  P.degree_cap = cap;
  const Scalar q = S("s^2");
  P.rules = {
      {{1, 0}, {{{0, 1}, q}}},
      {{2, 0}, {{{0, 2}, q}}},
      {{2, 1}, {{{1, 2}, Scalar(1)}}},
      {{3, 1}, {{{1, 3}, q}}},
      {{3, 2}, {{{2, 3}, q}}},
      {{1, 2}, {{{0, 3}, q}, {{}, -q}}},
      {{3, 0}, {{{0, 3}, q * q}, {{}, Scalar(1) - q * q}}},
  };
  P.comul_gen = {
      {{{0}, {0}, Scalar(1)}, {{1}, {2}, Scalar(1)}},
      {{{0}, {1}, Scalar(1)}, {{1}, {3}, Scalar(1)}},
      {{{2}, {0}, Scalar(1)}, {{3}, {2}, Scalar(1)}},
      {{{2}, {1}, Scalar(1)}, {{3}, {3}, Scalar(1)}},
  };
  P.counit_gen = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  P.antipode_gen = {
      {{{3}, Scalar(1)}},
      {{{1}, -q}},
      {{{2}, -q.inverse()}},
      {{{0}, Scalar(1)}},
  };
  return P;
}

// Eight-dimensional matrix-entry algebra with signs lam, nu; lam must be a
// concrete unit root for the relations to close up.
Presentation suzuki_presentation(const Scalar& lam) {
  Presentation P;
  P.name = "suzuki";
  P.params = {"nu"};
  P.generators = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  P.rewrite_order = {3, 2, 0, 1};
  const Scalar nu = Scalar::param("nu");
  P.rules = {
      {{0, 1}, {}},
      {{1, 0}, {}},
      {{0, 2}, {}},
      {{2, 0}, {}},
      {{1, 3}, {}},
      {{3, 1}, {}},
      {{2, 3}, {}},
      {{3, 2}, {}},
      {{2, 1}, {{{1, 2}, lam}}},
      {{3, 0}, {{{0, 3}, Scalar(1)}}},
      {{0, 0}, {{{}, Scalar(1)}, {{1, 1}, -nu}}},
      {{2, 2}, {{{1, 1}, Scalar(1)}}},
      {{3, 3}, {{{}, Scalar(1)}, {{1, 1}, -nu}}},
      {{1, 1, 1}, {{{1}, nu.inverse()}}},
      {{1, 1, 2}, {{{2}, nu.inverse()}}},
  };
  P.comul_gen = {
      {{{0}, {0}, Scalar(1)}, {{1}, {2}, Scalar(1)}},
      {{{0}, {1}, Scalar(1)}, {{1}, {3}, Scalar(1)}},
      {{{2}, {0}, Scalar(1)}, {{3}, {2}, Scalar(1)}},
      {{{2}, {1}, Scalar(1)}, {{3}, {3}, Scalar(1)}},
  };
  P.counit_gen = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  P.antipode_gen = {
      {{{0, 0, 0}, Scalar(1)}},
      {{{2, 2, 2}, Scalar(1)}},
      {{{1, 1, 1}, Scalar(1)}},
      {{{3, 3, 3}, Scalar(1)}},
  };
  return P;
}

std::vector<std::string> labels_of(const RewriteEngine& E) {
  std::vector<std::string> out;
  for (const auto& w : E.basis()) out.push_back(E.label(w));
  return out;
}

}  // namespace

TEST_CASE("four dimensional presentation reproduces the hand built tables") {
  RewriteEngine E(sweedler_presentation());
  const HopfData H = E.structure_constants();
  const HopfData O = oracle_sweedler();

  CHECK(H.dim == 4);
  CHECK(H.basis == O.basis);
  CHECK(H.degrees == std::vector<int>{0, 1, 1, 2});
  CHECK_FALSE(H.degree_cap.has_value());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      REQUIRE(H.mul[i][j].has_value());
      CHECK(*H.mul[i][j] == *O.mul[i][j]);
    }
  CHECK(H.unit == O.unit);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(H.comul[i] == O.comul[i]);
    CHECK(H.counit[i] == O.counit[i]);
  }
  REQUIRE(H.antipode.has_value());
  for (std::size_t i = 0; i < 4; ++i)
    CHECK((*H.antipode)[i] == (*O.antipode)[i]);

  const auto rep = check_hopf(H);
  CHECK(rep.all_passed());
}

TEST_CASE("normal forms reduce words the way the relations read") {
  RewriteEngine E(sweedler_presentation());
  CHECK(E.normal_form(Word{1, 1}).empty());
  CHECK(E.normal_form(Word{1, 0}) == WordPoly{{{1, 0}, Scalar(1)}});
  CHECK(E.normal_form(Word{0, 1}) == WordPoly{{{1, 0}, Scalar(-1)}});
  CHECK(E.normal_form(Word{0, 1, 0, 1}).empty());  // gxgx = -x^2 = 0
  // gxg = -xgg = -x
  CHECK(E.normal_form(Word{0, 1, 0}) == WordPoly{{{1}, Scalar(-1)}});

  RewriteEngine Q(slq2_presentation(4));
  CHECK(Q.normal_form(Word{1, 0}) == WordPoly{{{0, 1}, S("s^2")}});
  CHECK(Q.normal_form(Word{3, 0}) ==
        WordPoly{{{0, 3}, S("s^4")}, {{}, S("1-s^4")}});
  // da - q^2 ad stays central: (da)d = d(ad) in normal form.
  Word dad{3, 0, 3};
  CHECK(Q.normal_form(dad) ==
        WordPoly{{{0, 3, 3}, S("s^4")}, {{3}, S("1-s^4")}});
}

TEST_CASE("normal form is idempotent on reduced combinations") {
  RewriteEngine Q(slq2_presentation(5));
  const Word ws[] = {{2, 1, 0}, {3, 3, 0}, {1, 2, 1, 2}, {3, 2, 1, 0}, {0, 1, 2, 3}};
  for (const auto& w : ws) {
    const WordPoly nf = Q.normal_form(w);
    CHECK(Q.normal_form(nf) == nf);
    for (const auto& [u, c] : nf) Q.index_of(u);  // every support word is basic
  }
}

TEST_CASE("anticommuting family lists its basis in table order") {
  RewriteEngine E(en_presentation(2));
  CHECK(labels_of(E) == std::vector<std::string>{"1", "g", "x1", "x2", "x1g",
                                                 "x2g", "x1x2", "x1x2g"});
  const HopfData H = E.structure_constants();
  CHECK(H.dim == 8);
  CHECK(check_hopf(H).all_passed());

  CHECK(RewriteEngine(en_presentation(1)).basis().size() == 4);
  CHECK(RewriteEngine(en_presentation(3)).basis().size() == 16);
  CHECK(RewriteEngine(en_presentation(4)).basis().size() == 32);
}

TEST_CASE("basis words are closed under taking subwords") {
  RewriteEngine E(en_presentation(3));
  for (const auto& w : E.basis())
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        Word sub(w.begin() + static_cast<long>(i),
                 w.begin() + static_cast<long>(i + len));
        CHECK_NOTHROW(E.index_of(sub));
      }
}

TEST_CASE("quantum 2x2 truncations have the expected dimensions") {
  RewriteEngine Q2(slq2_presentation(2));
  CHECK(labels_of(Q2) ==
        std::vector<std::string>{"1", "a", "b", "c", "d", "a^2", "ab", "b^2",
                                 "ac", "c^2", "ad", "bd", "cd", "d^2"});
  CHECK(RewriteEngine(slq2_presentation(3)).basis().size() == 30);
  CHECK(RewriteEngine(slq2_presentation(4)).basis().size() == 55);
}

TEST_CASE("truncated structure constants leave deep products undetermined") {
  RewriteEngine Q(slq2_presentation(2));
  const HopfData H = Q.structure_constants();
  CHECK(H.dim == 14);
  CHECK(H.degree_cap == 2);
  CHECK(H.truncated());
  const auto ia = Q.index_of(Word{0});
  const auto iaa = Q.index_of(Word{0, 0});
  CHECK_FALSE(H.mul[iaa][ia].has_value());
  CHECK(H.mul[ia][ia].has_value());
  CHECK_THROWS_AS((void)multiply(H, svec_unit(iaa), svec_unit(ia)),
                  DegreeCapExceeded);
  CHECK_THROWS_AS(Q.normal_form(Word{3, 0, 3}), DegreeCapExceeded);

  const auto rep = check_hopf(H);
  CHECK(rep.all_passed());
  REQUIRE(rep.find("associativity") != nullptr);
  CHECK(rep.find("associativity")->verified_up_to_degree == 2);
  CHECK(rep.find("associativity")->skipped_tuples > 0);
}

TEST_CASE("degree three truncation passes every axiom sweep below the cap") {
  RewriteEngine Q(slq2_presentation(3));
  const HopfData H = Q.structure_constants();
  CHECK(H.dim == 30);
  const auto rep = check_hopf(H);
  CHECK(rep.all_passed());
  CHECK(rep.find("antipode_left")->verified_up_to_degree == 3);
}

TEST_CASE("sign algebra closes at dimension eight for both unit signs") {
  for (int sgn : {1, -1}) {
    RewriteEngine E(suzuki_presentation(Scalar(sgn)));
    CHECK(labels_of(E) == std::vector<std::string>{"1", "a", "b", "c", "d",
                                                   "b^2", "bc", "ad"});
    // a^3 = a, c^3 = c/nu, d^3 = d
    CHECK(E.normal_form(Word{0, 0, 0}) == WordPoly{{{0}, Scalar(1)}});
    CHECK(E.normal_form(Word{2, 2, 2}) ==
          WordPoly{{{2}, Scalar::param("nu").inverse()}});
    CHECK(E.normal_form(Word{3, 3, 3}) == WordPoly{{{3}, Scalar(1)}});
  }
}

TEST_CASE("a free sign parameter breaks confluence of the sign algebra") {
  CHECK_THROWS_AS(RewriteEngine(suzuki_presentation(Scalar::param("lambda"))),
                  NonConfluent);
}

TEST_CASE("a dropped correction term in the det relation is caught") {
  Presentation P = slq2_presentation(4);
  P.rules[6].rhs = {{{0, 3}, Scalar(1)}};  // pretend da -> ad
  CHECK_THROWS_AS(RewriteEngine(std::move(P)), NonConfluent);
}

TEST_CASE("rule validation rejects broken orientations") {
  Presentation P = sweedler_presentation();
  P.rules.push_back({{1, 0}, {{{0, 1}, Scalar(-1)}}});  // xg -> -gx increases
  CHECK_THROWS_AS(RewriteEngine(std::move(P)), InvalidPresentation);

  Presentation Q = sweedler_presentation();
  Q.rules.push_back({{1}, {{{1, 1, 1}, Scalar(1)}}});  // raises the degree
  CHECK_THROWS_AS(RewriteEngine(std::move(Q)), InvalidPresentation);

  Presentation Z = sweedler_presentation();
  Z.rules[0].rhs = {{{}, Scalar(0)}};
  CHECK_THROWS_AS(RewriteEngine(std::move(Z)), InvalidPresentation);

  Presentation W = sweedler_presentation();
  W.rewrite_order = {0, 0};
  CHECK_THROWS_AS(RewriteEngine(std::move(W)), InvalidPresentation);
}

TEST_CASE("an uncapped free monoid trips the enumeration guard") {
  Presentation P;
  P.name = "free2";
  P.generators = {{"u", 1}, {"v", 1}};
  CHECK_THROWS_AS(RewriteEngine(std::move(P)), NonTerminating);
}

TEST_CASE("structure constants demand complete generator data") {
  Presentation P = slq2_presentation(2);
  P.comul_gen.pop_back();
  CHECK_THROWS_AS(RewriteEngine(std::move(P)).structure_constants(),
                  MissingGeneratorData);

  Presentation Q = slq2_presentation(2);
  Q.antipode_gen.clear();
  const HopfData H = RewriteEngine(std::move(Q)).structure_constants();
  CHECK_FALSE(H.antipode.has_value());
  CHECK(check_bialgebra(H).all_passed());
}
