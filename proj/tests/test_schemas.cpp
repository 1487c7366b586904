#include <doctest.h>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

TEST_SUITE("schemas") {
  TEST_CASE("instance shapes") {
    const auto sig = binary_signature(2);
    const Formula a = Formula::eq(0, 1);
    CHECK(build_schema("P2", *sig, SchemaArgs{.co = {a}}) == prob_ge(a, Rational(0)));
    const InterventionSpec xy({{0, 1}, {1, 0}});
    CHECK(build_schema("C6", *sig, SchemaArgs{.specs = {InterventionSpec({{0, 1}})}, .vars = {1}, .vals = {0}}) ==
          Formula::cf(xy, Formula::eq(1, 0)));
    CHECK_FALSE(build_schema("P3", *sig, SchemaArgs{.co = {a, Formula::eq(1, 1)}, .q = {Rational(2, 3), Rational(1, 2)}}));
    CHECK_THROWS_AS(build_schema("Z9", *sig, SchemaArgs{}), Error);
  }

  TEST_CASE("instantiation is deterministic and respects the sample count") {
    const auto sig = binary_signature(2);
    for (const auto& id : schema_ids()) {
      const auto a = instantiate_schema(id, sig, 10, 99);
      const auto b = instantiate_schema(id, sig, 10, 99);
      CHECK_MESSAGE(a == b, id);
      CHECK_MESSAGE(!a.empty(), id);
      CHECK_MESSAGE(a.size() <= 10, id);
      for (const auto& f : a) CHECK_NOTHROW(check_formula(*sig, f));
    }
  }

  TEST_CASE("every schema holds on a small budget") {
    const ModelSpace space(EnumerationBudget{binary_signature(2), 2, {}});
    for (const auto& id : schema_ids()) {
      const auto report = check_schema(id, space, 8, 5);
      CHECK_MESSAGE(report.ok(), id);
    }
  }

  TEST_CASE("a false schema instance is caught") {
    const ModelSpace space(EnumerationBudget{binary_signature(2), 2, {}});
    const auto t = tce_model();
    CHECK_FALSE(check_validity(parse(t, "P(X=0) >= 1/2"), space).holds);
  }
}

TEST_SUITE("rules") {
  TEST_CASE("rule instances") {
    const Formula t = top();
    const auto to_sel = to_sel_instance(t, t);
    CHECK(to_sel.premises.front() == implies(t, t));
    CHECK(to_sel.conclusion == Formula::sel(t, t));
    const Formula psi = prob_ge(Formula::eq(0, 0), Rational(1, 2));
    const InterventionSpec x1({{0, 1}});
    const auto mon = mon_cf_instance(x1, psi, psi);
    CHECK(mon.conclusion == implies(Formula::cf(x1, psi), Formula::cf(x1, psi)));
    CHECK(substitute(Formula::conj(psi, psi), psi, t) == Formula::conj(t, t));
  }

  TEST_CASE("instances with valid premises have valid conclusions") {
    const ModelSpace space(EnumerationBudget{binary_signature(2), 3, {}});
    const Formula t = top();
    CHECK(check_rule_instance("→to⊃", to_sel_instance(t, t), space).verdict.holds);
    const Formula psi = prob_ge(Formula::eq(0, 0), Rational(1, 2));
    const auto c = check_rule_instance("Mon▷", mon_cf_instance(InterventionSpec({{1, 0}}), psi, psi), space);
    CHECK(c.premises_valid);
    CHECK(c.verdict.holds);
  }

  TEST_CASE("sampled soundness on a small budget") {
    const ModelSpace space(EnumerationBudget{binary_signature(2), 2, {}});
    for (const auto& rule : rule_ids()) {
      const auto report = check_rule_soundness(rule, space, 10, 3);
      CHECK_MESSAGE(report.ok(), rule);
    }
    CHECK_THROWS_AS(check_rule_soundness("XYZ", space, 1, 1), Error);
  }
}
