#include <doctest.h>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

TEST_SUITE("oracle") {
  const ModelSpace& space() {
    static const ModelSpace s(EnumerationBudget{binary_signature(2), 3, {}});
    return s;
  }

  TEST_CASE("range exhaustion is valid") {
    const auto t = tce_model();
    CHECK(check_validity(parse(t, "X=0 \\/ X=1"), space()).holds);
    const auto v = check_validity(parse(t, "X=0 || X=1"), space());
    CHECK_FALSE(v.holds);
    REQUIRE(v.countermodel);
    CHECK_FALSE(eval_pco(*v.countermodel, parse(t, "X=0 || X=1")));
    CHECK(space().model(v.countermodel_index) == *v.countermodel);
  }

  TEST_CASE("excluded middle for the tensor disjunction") {
    FormulaGenerator gen(binary_signature(2), 3);
    for (int i = 0; i < 40; ++i) {
      const Formula a = gen.co();
      CHECK(check_validity(tensor_or(a, dual_neg(a)), space()).holds);
    }
  }

  TEST_CASE("material conditional does not give the selective one") {
    const auto t = tce_model();
    const Formula premise = parse(t, "X=0 -> Y=1");
    const Formula goal = parse(t, "X=0 => Y=1");
    const auto v = check_entailment({premise}, goal, space());
    CHECK_FALSE(v.holds);
    bool found = false;
    for (const auto& m : find_countermodels({premise}, goal, space(), 1000)) found = found || isomorphic(m, t);
    CHECK(found);
    CHECK_FALSE(check_validity(implies(premise, goal), space()).holds);
  }

  TEST_CASE("selective implication with its antecedent entails the consequent") {
    FormulaGenerator gen(binary_signature(2), 4);
    for (int i = 0; i < 30; ++i) {
      const Formula a = gen.co(2);
      const Formula psi = gen.pco(2);
      CHECK(check_entailment({Formula::sel(a, psi), a}, psi, space()).holds);
    }
  }

  TEST_CASE("no premises and bottom") {
    const auto v = check_validity(bot(), space());
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.countermodel->empty());
  }

  TEST_CASE("thread count does not change the verdict") {
    const auto t = tce_model();
    const Formula f = parse(t, "P(X=0) >= 1/2 || [Y=1] X=1");
    const auto one = check_validity(f, space(), OracleOptions{1});
    const auto four = check_validity(f, space(), OracleOptions{4});
    CHECK(one.holds == four.holds);
    CHECK(one.countermodel_index == four.countermodel_index);
  }

  TEST_CASE("isomorphism up to value renaming") {
    const auto t = tce_model();
    Multiteam swapped;
    swapped.add(Assignment{{1, 0}});
    swapped.add(Assignment{{0, 1}});
    CHECK(isomorphic(t, validate_model(swapped, t.laws())));
    Multiteam same;
    same.add(Assignment{{0, 0}}, 2);
    CHECK_FALSE(isomorphic(t, validate_model(same, t.laws())));
  }
}
