#include "ydforge/matched_pairs.hpp"

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle_sweedler.hpp"
#include "ydforge/catalog.hpp"
#include "ydforge/coqt.hpp"
#include "ydforge/errors.hpp"
#include "ydforge/hopf.hpp"

using namespace ydforge;

namespace {

ActionTensor make_action(ActionSide side, std::vector<std::vector<SVec>> vals) {
  ActionTensor A;
  A.side = side;
  A.n = vals.size();
  A.values = std::move(vals);
  return A;
}

ActionTensor table_left() { return make_action(ActionSide::Left, oracle_sweedler_left_action()); }
ActionTensor table_right() {
  return make_action(ActionSide::Right, oracle_sweedler_right_action());
}

std::size_t basis_index(const HopfData& H, const std::string& lbl) {
  for (std::size_t i = 0; i < H.dim; ++i)
    if (H.basis[i] == lbl) return i;
  FAIL("no basis label ", lbl);
  return 0;
}

const Check& failing(const VerificationReport& rep, const std::string& name) {
  const Check* c = rep.find(name);
  REQUIRE(c != nullptr);
  REQUIRE_FALSE(c->passed);
  REQUIRE(c->witness.has_value());
  return *c;
}

}  // namespace

TEST_CASE("trivial actions weight the kept slot by the counit") {
  const HopfData H = oracle_sweedler();
  const ActionTensor L = ActionTensor::trivial(H, ActionSide::Left);
  const ActionTensor R = ActionTensor::trivial(H, ActionSide::Right);
  CHECK(L.side == ActionSide::Left);
  CHECK(R.side == ActionSide::Right);
  CHECK(L.values[1][2] == svec_unit(2));   // g acts as its counit
  CHECK(L.values[2][3].empty());           // x has counit zero
  CHECK(R.values[3][1] == svec_unit(3, Scalar(-1) * Scalar(-1)));
  CHECK(R.values[1][2].empty());
  CHECK(act(L, SVec{{1, Scalar(2)}}, SVec{{2, Scalar(3)}}) == SVec{{2, Scalar(6)}});
}

TEST_CASE("the tabulated action pair is a matched pair") {
  const HopfData H = oracle_sweedler();
  const VerificationReport rep = check_matched_pair(H, table_left(), table_right(), true, true);
  CHECK(rep.all_passed());
  const std::vector<std::string> want = {
      "left_action_unit",  "left_action_associativity",  "left_action_comul",
      "left_action_counit", "right_action_unit",         "right_action_associativity",
      "right_action_comul", "right_action_counit",       "mp1",
      "mp2",                "mp3",                        "mp4",
      "star",               "mp5"};
  REQUIRE(rep.checks().size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(rep.checks()[i].name == want[i]);
  // flags off: the optional checks are simply absent
  const VerificationReport bare = check_matched_pair(H, table_left(), table_right());
  CHECK(bare.checks().size() == 12);
  CHECK(bare.find("star") == nullptr);
  CHECK(bare.find("mp5") == nullptr);
}

TEST_CASE("trivial actions fail braided commutativity when the product does not commute") {
  const HopfData H = oracle_sweedler();
  const ActionTensor L = ActionTensor::trivial(H, ActionSide::Left);
  const ActionTensor R = ActionTensor::trivial(H, ActionSide::Right);
  const VerificationReport rep = check_matched_pair(H, L, R, true, true);
  CHECK_FALSE(rep.all_passed());
  for (const char* name : {"mp1", "mp2", "mp3", "mp4", "mp5"}) CHECK(rep.passed(name));
  // gx = -xg but the trivial split multiplies the other way around
  const Check& star = failing(rep, "star");
  CHECK(star.witness->tuple == std::vector<std::size_t>{1, 2});
  CHECK(star.witness->diff == SVec{{3, Scalar(-2)}});
  CHECK(star.witness->tuple_labels == std::vector<std::string>{"g", "x"});
}

TEST_CASE("module coalgebra corruption is caught in every law it breaks") {
  const HopfData H = oracle_sweedler();
  ActionTensor bad = table_left();
  const Scalar k = Scalar::param("k");
  bad.values[2][2] = SVec{{0, k}, {1, k}};
  const VerificationReport rep = check_module_coalgebra(H, bad);
  CHECK(rep.passed("left_action_unit"));
  CHECK(failing(rep, "left_action_associativity").witness->tuple ==
        std::vector<std::size_t>{1, 2, 2});
  const Check& cm = failing(rep, "left_action_comul");
  CHECK(cm.witness->tuple == std::vector<std::size_t>{2, 2});
  CHECK(cm.witness->diff == SVec{{4, Scalar(-2) * k}});
  const Check& cu = failing(rep, "left_action_counit");
  CHECK(cu.witness->tuple == std::vector<std::size_t>{2, 2});
  CHECK(cu.witness->diff == SVec{{0, Scalar(2) * k}});
}

TEST_CASE("counit contractions of the bicomodule braiding recover the action tables") {
  const HopfData H = oracle_sweedler();
  const BilinearForm R{4, oracle_sweedler_R()};
  const LinMap sigma = braiding_bicomodule(H, R).sigma;
  const auto [L, Rt] = actions_from_braiding(H, sigma);
  CHECK(L.side == ActionSide::Left);
  CHECK(Rt.side == ActionSide::Right);
  CHECK(L.values == oracle_sweedler_left_action());
  CHECK(Rt.values == oracle_sweedler_right_action());

  CHECK_THROWS_AS(actions_from_braiding(H, LinMap::identity(4, 2)), BrAxiomsFail);

  // the flip braiding contracts to the trivial pair
  LinMap flip;
  flip.n = 4;
  flip.dom_pow = flip.cod_pow = 2;
  flip.cols.resize(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) flip.cols[i * 4 + j] = svec_unit(j * 4 + i);
  const auto [fl, fr] = actions_from_braiding(H, flip);
  CHECK(fl.values == ActionTensor::trivial(H, ActionSide::Left).values);
  CHECK(fr.values == ActionTensor::trivial(H, ActionSide::Right).values);
}

TEST_CASE("actions derived from the form agree with the braiding contraction") {
  const HopfData H = oracle_sweedler();
  const BilinearForm R{4, oracle_sweedler_R()};
  const auto [L, Rt] = actions_from_R(H, R);
  CHECK(L.values == oracle_sweedler_left_action());
  CHECK(Rt.values == oracle_sweedler_right_action());
  CHECK_THROWS_AS(actions_from_R(H, BilinearForm::zero(3)), ShapeError);
}

TEST_CASE("the action pair rebuilds the braiding it came from") {
  const HopfData H = oracle_sweedler();
  const BilinearForm R{4, oracle_sweedler_R()};
  const LinMap sigma = braiding_bicomodule(H, R).sigma;
  const LinMap rebuilt = braiding_from_actions(H, table_left(), table_right());
  CHECK(rebuilt == sigma);
  const auto [L, Rt] = actions_from_braiding(H, rebuilt);
  CHECK(L.values == table_left().values);
  CHECK(Rt.values == table_right().values);
}

TEST_CASE("comodule-extracted actions need not respect the product") {
  const HopfData H = oracle_sweedler();
  const BilinearForm R{4, oracle_sweedler_R()};
  const VerificationReport rep = check_mp3_counterexample(H, R);
  const Check& mp3 = failing(rep, "mp3");
  CHECK(mp3.witness->tuple == std::vector<std::size_t>{1, 1, 0});
  CHECK(mp3.witness->diff == SVec{{1, Scalar(-2)}});

  // the group algebra with the counit-square form has no such defect
  const CatalogEntry c2 = build_group_algebra("C2");
  CHECK(check_mp3_counterexample(c2.hopf, BilinearForm::counit_square(c2.hopf)).all_passed());

  // killing the free parameter does not cure it
  const CatalogEntry e0 = build_en(1, {{Scalar(0)}});
  const VerificationReport repz = check_mp3_counterexample(e0.hopf, e0.R);
  CHECK(failing(repz, "mp3").witness->tuple == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("double cross product of the tabulated pair") {
  const HopfData H = oracle_sweedler();
  bool mp5 = false;
  const HopfData D = double_cross_product(H, table_left(), table_right(), &mp5);
  CHECK(mp5);
  CHECK(D.dim == 16);
  CHECK(D.basis[0] == "1|1");
  CHECK(D.basis[6] == "g|x");
  CHECK(D.basis[15] == "xg|xg");
  CHECK(D.unit == svec_unit(0));
  CHECK(D.params == H.params);
  CHECK(check_bialgebra(D).all_passed());

  // (1|h)(b|1) lands on the braiding of h(x)b
  const LinMap sigma = braiding_from_actions(H, table_left(), table_right());
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t j = 0; j < 4; ++j) CHECK(*D.mul[h][j * 4] == sigma.cols[h * 4 + j]);

  // (a|1)(b|g) multiplies the left legs and keeps the right leg
  CHECK(*D.mul[2 * 4][2 * 4 + 1] == SVec{});  // x.x = 0
  CHECK(*D.mul[1 * 4][2 * 4 + 1] == svec_unit(3 * 4 + 1, Scalar(-1)));  // g.x = -xg
}

TEST_CASE("trivial actions produce the tensor product bialgebra") {
  const HopfData H = oracle_sweedler();
  bool mp5 = false;
  const HopfData D = double_cross_product(H, ActionTensor::trivial(H, ActionSide::Left),
                                          ActionTensor::trivial(H, ActionSide::Right), &mp5);
  CHECK(mp5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t h = 0; h < 4; ++h)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t g = 0; g < 4; ++g)
          CHECK(*D.mul[i * 4 + h][j * 4 + g] ==
                svec_tensor(multiply(H, svec_unit(i), svec_unit(j)),
                            multiply(H, svec_unit(h), svec_unit(g)), 4));
}

TEST_CASE("double cross product rejections") {
  const HopfData H = oracle_sweedler();
  const CatalogEntry sl = build_slq2(2);
  CHECK_THROWS_AS(double_cross_product(sl.hopf, ActionTensor::trivial(sl.hopf, ActionSide::Left),
                                       ActionTensor::trivial(sl.hopf, ActionSide::Right)),
                  PreconditionFail);

  ActionTensor bad = table_left();
  bad.values[2][2] = SVec{{0, Scalar::param("k")}, {1, Scalar::param("k")}};
  CHECK_THROWS_WITH_AS(double_cross_product(H, bad, table_right()),
                       "matched pair law left_action_associativity fails",
                       MatchedPairAxiomsFail);

  // a right action in the left slot is a caller mistake, not a failed law
  CHECK_THROWS_AS(check_matched_pair(H, table_right(), table_right()), ShapeError);
}

TEST_CASE("catalog golden action tables equal the form-derived actions") {
  for (const char* name : {"sweedler", "en", "slq2", "suzuki", "c2", "s3_dual"}) {
    const CatalogEntry e = build_by_name(name);
    CAPTURE(e.name);
    REQUIRE_FALSE(e.golden.left_action.empty());
    const auto [L, R] = actions_from_R(e.hopf, e.R);
    for (std::size_t r = 0; r < e.golden.left_action.size(); ++r)
      for (std::size_t c = 0; c < e.golden.left_action[r].size(); ++c) {
        CAPTURE(r);
        CAPTURE(c);
        CHECK(golden_to_svec(e.hopf, e.golden.left_action[r][c]) ==
              L.values[basis_index(e.hopf, e.golden.labels[r])]
                      [basis_index(e.hopf, e.golden.labels[c])]);
      }
    for (std::size_t r = 0; r < e.golden.right_action.size(); ++r)
      for (std::size_t c = 0; c < e.golden.right_action[r].size(); ++c) {
        CAPTURE(r);
        CAPTURE(c);
        CHECK(golden_to_svec(e.hopf, e.golden.right_action[r][c]) ==
              R.values[basis_index(e.hopf, e.golden.labels[r])]
                      [basis_index(e.hopf, e.golden.labels[c])]);
      }
  }
  CHECK(build_group_algebra("S3").golden.left_action.empty());
}

TEST_CASE("form-derived actions satisfy the matched pair laws with star") {
  for (const char* name : {"sweedler", "c2", "s3_dual"}) {
    const CatalogEntry e = build_by_name(name);
    CAPTURE(e.name);
    const auto [L, R] = actions_from_R(e.hopf, e.R);
    CHECK(check_matched_pair(e.hopf, L, R, true, true).all_passed());
  }

  // below the cap every law holds; the rest of the sweep is skipped
  const CatalogEntry sl = build_slq2(2);
  const auto [L, R] = actions_from_R(sl.hopf, sl.R);
  const VerificationReport rep = check_matched_pair(sl.hopf, L, R, true, true);
  CHECK(rep.all_passed());
  const Check* mp3 = rep.find("mp3");
  REQUIRE(mp3 != nullptr);
  CHECK(mp3->skipped_tuples == 2142);
  CHECK(mp3->verified_up_to_degree == 2);

  const CatalogEntry sz = build_suzuki();
  const std::map<std::string, Scalar> at{{"alpha", Scalar(1)}, {"beta", Scalar(1)}};
  BilinearForm R1 = sz.R;
  for (auto& row : R1.values)
    for (auto& s : row) s = s.substitute(at);
  const HopfData H1 = substitute_hopf(sz.hopf, at);
  const auto [sl1, sr1] = actions_from_R(H1, R1);
  CHECK(check_matched_pair(H1, sl1, sr1, true, true).all_passed());
}

TEST_CASE("five shapes of colinearity agree") {
  const HopfData H = oracle_sweedler();
  const VerificationReport rep = check_colinearity_equivalences(H, table_left(), table_right());
  CHECK(rep.all_passed());
  const std::vector<std::string> want = {"colinear",      "colinear_product_form",
                                         "exchange_form", "first_leg_form",
                                         "mp5",           "five_way_agreement"};
  REQUIRE(rep.checks().size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(rep.checks()[i].name == want[i]);

  const CatalogEntry ds3 = build_dual_group_algebra("S3");
  CHECK(check_colinearity_equivalences(ds3.hopf,
                                       ActionTensor::trivial(ds3.hopf, ActionSide::Left),
                                       ActionTensor::trivial(ds3.hopf, ActionSide::Right))
            .all_passed());

  // a counit-breaking cell stops the evaluation before any shape is judged
  ActionTensor pert = table_right();
  pert.values[2][2] = SVec{{0, Scalar::param("k")}, {1, Scalar::param("k")}};
  CHECK_THROWS_WITH_AS(check_colinearity_equivalences(H, table_left(), pert),
                       "precondition fails: the right action must respect the counit",
                       PreconditionFail);

  // so does a pair that fails braided commutativity
  CHECK_THROWS_WITH_AS(
      check_colinearity_equivalences(H, ActionTensor::trivial(H, ActionSide::Left),
                                     ActionTensor::trivial(H, ActionSide::Right)),
      "precondition fails: the product must split through the two actions", PreconditionFail);
}

TEST_CASE("the braiding laws mirror the matched pair laws") {
  const HopfData H = oracle_sweedler();

  // a pair of module coalgebras that is not a matched pair: both sides fail
  const ActionTensor L = table_left();
  const ActionTensor TR = ActionTensor::trivial(H, ActionSide::Right);
  const VerificationReport mp = check_matched_pair(H, L, TR);
  CHECK(check_module_coalgebra(H, L).all_passed());
  CHECK(check_module_coalgebra(H, TR).all_passed());
  const Check& mp3 = failing(mp, "mp3");
  CHECK(mp3.witness->tuple == std::vector<std::size_t>{2, 1, 2});
  const VerificationReport br = check_br_axioms(H, braiding_from_actions(H, L, TR));
  const Check& br3 = failing(br, "br3");
  CHECK(br3.witness->tuple == std::vector<std::size_t>{2, 1, 2});
  CHECK(br.passed("br1"));
  CHECK(br.passed("br2"));
  CHECK(br.passed("br4"));

  // and the genuine pair passes both
  const LinMap sigma = braiding_from_actions(H, table_left(), table_right());
  CHECK(check_br_axioms(H, sigma).all_passed());
}
