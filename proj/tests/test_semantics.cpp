#include <doctest.h>

#include "reference.hpp"
#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

const ModelSpace& xy_space() {
  static const ModelSpace space(EnumerationBudget{binary_signature(2), 4, {}});
  return space;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("assignment-level examples") {
    const auto t = tex_model();
    const auto s = row(t.signature(), {"1", "2", "2"});
    CHECK(eval_co_at(s, t.laws(), parse(t, "Y=2")));
    CHECK(eval_co_at(s, t.laws(), parse(t, "[Y=1] Z=1")));
    CHECK_FALSE(eval_co_at(s, t.laws(), parse(t, "[Y=1] Z=2")));
    CHECK(eval_co_at(s, t.laws(), Formula::cf(InterventionSpec({{0, 0}, {0, 1}}), bot())));
  }

  TEST_CASE("team-level examples") {
    const auto t = tex_model();
    CHECK(eval_pco(validate_model(Multiteam{}, t.laws()), bot()));
    CHECK_FALSE(eval_pco(t, parse(t, "X=1")));
    CHECK(eval_pco(t, parse(t, "[Y=1] Y=1")));
    CHECK(eval_pco(t, parse(t, "P(Z=2) >= 1/2")));
    CHECK_FALSE(eval_pco(t, parse(t, "P(Z=2) > 1/2")));
    CHECK(eval_pco(t, parse(t, "[Y=1] P(Z=2) >= 1/4")));
    CHECK_FALSE(eval_pco(t, parse(t, "[Y=1] P(Z=2) >= 1/2")));
  }

  TEST_CASE("probabilities on the example") {
    const auto t = tex_model();
    CHECK(prob(t, parse(t, "Z=2")) == Rational(1, 2));
    CHECK(prob(intervene(t, InterventionSpec({{1, 0}})), parse(t, "Z=2")) == Rational(1, 4));
    CHECK(prob(t, top()) == Rational(1));
    CHECK(prob(t, bot()) == Rational(0));
    CHECK_THROWS_AS(prob(validate_model(Multiteam{}, t.laws()), top()), Error);
  }

  TEST_CASE("conditional probability") {
    const auto t = tex_model();
    CHECK(cond_prob(t, parse(t, "Z=2"), parse(t, "X=1")) == Rational(1));
    CHECK(cond_prob(t, parse(t, "Z=2"), parse(t, "X!=2")) == Rational(2, 3));
    CHECK_FALSE(cond_prob(t, parse(t, "Z=2"), bot()).has_value());
  }

  TEST_CASE("material and selective implication differ") {
    const auto t = tce_model();
    CHECK(eval_pco(t, parse(t, "X=0 -> Y=1")));
    CHECK_FALSE(eval_pco(t, parse(t, "X=0 => Y=1")));
  }

  TEST_CASE("empty model with a certain atom") {
    const auto m = validate_model(Multiteam{}, FunctionComponent(binary_signature(2)));
    CHECK(eval_pco(m, prob_ge(Formula::eq(0, 0), Rational(1))));
    CHECK(eval_pco(m, prob_gt(Formula::eq(0, 0), Rational(1))));
  }

  TEST_CASE("agreement with the reference evaluator") {
    FormulaGenerator gen(binary_signature(2), 11);
    std::vector<Formula> fs;
    for (int i = 0; i < 120; ++i) fs.push_back(gen.pco());
    std::size_t mismatches = 0;
    xy_space().for_each([&](std::uint64_t, const CausalMultiteam& m) {
      for (const auto& f : fs) mismatches += eval_pco(m, f) != ref::holds(m, f);
      return true;
    });
    CHECK(mismatches == 0);

    const ModelSpace xyz(EnumerationBudget{binary_signature(3), 2, {}});
    FormulaGenerator gen3(binary_signature(3), 12);
    std::vector<Formula> fs3;
    for (int i = 0; i < 20; ++i) fs3.push_back(gen3.pco());
    xyz.for_each([&](std::uint64_t i, const CausalMultiteam& m) {
      if (i % 7 != 0) return true;
      for (const auto& f : fs3) mismatches += eval_pco(m, f) != ref::holds(m, f);
      return true;
    });
    CHECK(mismatches == 0);

    const auto t = tex_model();
    FormulaGenerator gent(t.signature_ptr(), 13);
    for (int i = 0; i < 300; ++i) {
      const Formula f = gent.pco();
      CHECK(eval_pco(t, f) == ref::holds(t, f));
    }
  }

  TEST_CASE("CO formulas are flat") {
    FormulaGenerator gen(binary_signature(2), 21);
    std::vector<Formula> fs;
    for (int i = 0; i < 100; ++i) fs.push_back(gen.co());
    std::size_t violations = 0;
    xy_space().for_each([&](std::uint64_t, const CausalMultiteam& m) {
      for (const auto& a : fs) {
        bool every = true;
        for (const auto& [s, n] : m.team().rows()) every = every && eval_co_at(s, m.laws(), a);
        violations += eval_co(m, a) != every;
        violations += eval_pco(m, a) != every;
      }
      return true;
    });
    CHECK(violations == 0);
  }

  TEST_CASE("empty team property") {
    FormulaGenerator gen(binary_signature(2), 31);
    for (const auto& laws : enumerate_law_sets(binary_signature(2))) {
      const auto m = validate_model(Multiteam{}, laws);
      for (int i = 0; i < 50; ++i) CHECK(eval_pco(m, gen.pco()));
    }
  }

  TEST_CASE("additivity, guard coherence and modus ponens for selective implication") {
    FormulaGenerator gen(binary_signature(2), 41);
    std::size_t bad_add = 0, bad_guard = 0, bad_mp = 0, dichotomy = 0;
    for (int i = 0; i < 40; ++i) {
      const Formula a = gen.co(), b = gen.co();
      const Formula psi = gen.pco(3);
      xy_space().for_each([&](std::uint64_t, const CausalMultiteam& m) {
        if (!m.empty()) {
          bad_add += prob(m, tensor_or(a, b)) + prob(m, Formula::conj(a, b)) != prob(m, a) + prob(m, b);
          dichotomy += eval_pco(m, psi) == eval_pco(m, neg_c(psi));
        }
        bad_guard += eval_pco(m, prob_gt(a, Rational(0))) != (m.empty() || !observe(m, a).empty());
        bad_mp += eval_pco(m, Formula::sel(a, psi)) && eval_pco(m, a) && !eval_pco(m, psi);
        return true;
      });
    }
    CHECK(bad_add == 0);
    CHECK(bad_guard == 0);
    CHECK(bad_mp == 0);
    CHECK(dichotomy == 0);
  }

  TEST_CASE("double weak negation is equivalent to the original") {
    FormulaGenerator gen(binary_signature(2), 51);
    for (int i = 0; i < 30; ++i) {
      const Formula phi = prob_gt(gen.co(), gen.rational() * Rational(1, 2));
      const auto v = check_validity(iff(neg_c(neg_c(phi)), phi), xy_space());
      CHECK(v.holds);
    }
  }
}
