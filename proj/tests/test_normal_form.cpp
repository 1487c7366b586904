#include <doctest.h>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

// Counterfactuals end in probability atoms; selective implications end in those or in counterfactuals.
bool pearl_shape(const Formula& f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::GOr:
      return pearl_shape(f.left()) && pearl_shape(f.right());
    case Kind::Cf:
      return f.body().is_prob_atom();
    case Kind::SelImp:
      return f.consequent().is_prob_atom() ||
             (f.consequent().kind() == Kind::Cf && pearl_shape(f.consequent()));
    default:
      return true;
  }
}

// Counterfactuals survive only inside probability atoms.
bool cf_only_in_atoms(const Formula& f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::GOr:
      return cf_only_in_atoms(f.left()) && cf_only_in_atoms(f.right());
    case Kind::SelImp:
      return cf_only_in_atoms(f.consequent());
    case Kind::Cf:
      return false;
    default:
      return true;
  }
}

Formula p(const std::string& text) {
  static const auto sig =
      make_signature({{"X", {"0", "1"}}, {"Y", {"0", "1", "2"}}, {"Z", {"0", "1", "2", "3"}}});
  return parse_formula(text, *sig);
}

}  // namespace

TEST_SUITE("normal-form") {

  TEST_CASE("counterfactual distributes over conjunction") {
    CHECK(normal_form(p("[X=1] (P(Y=2) >= 1 & P(Z=3) >= 1)")) ==
          p("([X=1] P(Y=2) >= 1) & ([X=1] P(Z=3) >= 1)"));
  }

  TEST_CASE("nested selective implications merge") {
    CHECK(normal_form(p("X=1 => (Y=0 => P(Z=1) >= 1/2)")) == p("(X=1 & Y=0) => P(Z=1) >= 1/2"));
  }

  TEST_CASE("normal forms are fixed points") {
    const Formula f = p("([X=1] P(Y=2) >= 1) & (X=0 => P(Z=3) > 1/3)");
    CHECK(is_normal_form(f));
    CHECK(normal_form(f) == f);
  }

  TEST_CASE("probabilities absorb counterfactuals") {
    CHECK(push_prob_inward(p("[X=1] P(Y=2) >= 1/2")) == p("P([X=1] Y=2) >= 1/2"));
    CHECK(push_prob_inward(p("[X=1] P(Y=2) > P(Z=0)")) == p("P([X=1] Y=2) > P([X=1] Z=0)"));
    const Formula plain = p("P(Y=2) >= 1/2 || (X=0 => P(Z=1) > 0)");
    CHECK(push_prob_inward(plain) == plain);
    CHECK_THROWS_AS(push_prob_inward(p("[X=1] (P(Y=2) >= 1 & P(Z=3) >= 1)")), Error);
  }

  TEST_CASE("random formulas: structure, equivalence and a decreasing measure") {
    const auto xy = binary_signature(2);
    const ModelSpace space(EnumerationBudget{xy, 3, {}});
    FormulaGenerator gen(xy, 77);
    for (int i = 0; i < 80; ++i) {
      const Formula f = gen.pco();
      std::vector<mpz_class> measures{nf_measure(f)};
      RewriteOptions options;
      options.trace = [&](const RewriteStep& s) { measures.push_back(nf_measure(s.after)); };
      const Formula g = normal_form(f, options);
      CHECK(is_normal_form(g));
      CHECK(pearl_shape(g));
      for (std::size_t k = 1; k < measures.size(); ++k) CHECK(measures[k] < measures[k - 1]);
      CHECK(check_validity(iff(f, g), space).holds);
      const Formula h = push_prob_inward(g);
      CHECK(cf_only_in_atoms(h));
      CHECK(check_validity(iff(f, h), space).holds);
    }
  }
}

TEST_SUITE("normal-form") {
  TEST_CASE("equivalence on larger random models") {
    const auto sig = binary_signature(3);
    EnumerationBudget budget{sig, 7, {}};
    budget.max_models = 100'000'000;
    const ModelSpace space(budget);
    FormulaGenerator gen(sig, 88);
    std::vector<Formula> fs, nfs;
    for (int i = 0; i < 40; ++i) {
      fs.push_back(gen.pco());
      nfs.push_back(normal_form(fs.back()));
    }
    std::size_t disagreements = 0;
    for (int k = 0; k < 500; ++k) {
      const auto m = space.model(gen.engine()() % space.size());
      for (std::size_t i = 0; i < fs.size(); ++i) {
        disagreements += eval_pco(m, fs[i]) != eval_pco(m, nfs[i]);
        disagreements += eval_pco(m, fs[i]) != eval_pco(m, push_prob_inward(nfs[i]));
      }
    }
    CHECK(disagreements == 0);
  }
}
