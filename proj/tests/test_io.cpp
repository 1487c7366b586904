#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Overflow;
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("counterfactual over a probability") {
    const auto t = tex_model();
    const Formula f = parse(t, "[Y=1] P(Z=2) >= 1/4");
    CHECK(f == Formula::cf(InterventionSpec({{1, 0}}), Formula::prob(Formula::eq(2, 2), Cmp::Ge, Rational(1, 4))));
    CHECK(print_formula(f, t.signature()) == "[Y=1] (P(Z=2) >= 1/4)");
    CHECK(parse(t, print_formula(f, t.signature())) == f);
  }

  TEST_CASE("conditional probability sugar") {
    const auto t = tex_model();
    CHECK(parse(t, "P(Z=2 | X=1) >= 1") ==
          Formula::sel(Formula::eq(0, 1), Formula::prob(Formula::eq(2, 2), Cmp::Ge, Rational(1))));
  }

  TEST_CASE("precedence") {
    const auto t = tce_model();
    const Formula a = Formula::eq(0, 0), b = Formula::eq(1, 1), c = Formula::eq(1, 0);
    CHECK(parse(t, "X=0 & Y=1 || Y=0") == Formula::gor(Formula::conj(a, b), c));
    CHECK(parse(t, "X=0 => Y=1 => Y=0") == Formula::sel(a, Formula::sel(b, c)));
    CHECK(parse(t, "~X=0 & Y=1") == Formula::conj(dual_neg(a), b));
    CHECK(parse(t, "[X=1] Y=1 & Y=0") == Formula::conj(Formula::cf(InterventionSpec({{0, 1}}), b), c));
    CHECK(parse(t, "X=0 \\/ Y=1") == tensor_or(a, b));
    CHECK(parse(t, "TOP") == top());
    CHECK(parse(t, "X!=0") == Formula::neq(0, 0));
  }

  TEST_CASE("errors carry codes and spans") {
    const auto t = tce_model();
    CHECK(code_of([&] { parse(t, "P(X=0) \\/ P(X=1)"); }) == ErrorCode::CoFragmentViolation);
    CHECK(code_of([&] { parse(t, "P(X=0) >= 1/2 => X=0"); }) == ErrorCode::CoFragmentViolation);
    CHECK(code_of([&] { parse(t, "Q=0"); }) == ErrorCode::UnknownVariable);
    CHECK(code_of([&] { parse(t, "X=7"); }) == ErrorCode::ValueOutOfRange);
    CHECK(code_of([&] { parse(t, "X=0 &"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([&] { parse(t, "P(X=0) >= 3/2"); }) != ErrorCode::Overflow);
    try {
      parse(t, "X=0 & Q=1");
    } catch (const ParseError& e) {
      CHECK(e.span().start == 6);
      CHECK(e.span().start <= e.span().end);
      CHECK(e.annotate("X=0 & Q=1").find('^') != std::string::npos);
    }
  }

  TEST_CASE("print and parse round trip on random formulas") {
    for (const auto& sig : {binary_signature(2), binary_signature(3), tex_signature()}) {
      FormulaGenerator gen(sig, 2024);
      for (int i = 0; i < 1000; ++i) {
        const Formula f = i % 2 ? gen.pco() : gen.co();
        const std::string text = print_formula(f, *sig);
        CHECK_MESSAGE(parse_formula(text, *sig) == f, text);
      }
    }
  }

  TEST_CASE("intervention lists") {
    const auto t = tex_model();
    CHECK(parse_intervention("X=1,Y=2", t.signature()) == InterventionSpec({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(parse_intervention("X=1,", t.signature()), ParseError);
  }

  TEST_CASE("rationals print reduced") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, 3).str() == "1");
    CHECK(Rational::parse("6/8") == Rational(3, 4));
  }
}

TEST_SUITE("model-io") {
  TEST_CASE("the documented example file") {
    const auto text = slurp(source_dir() + "/docs/examples/tex.model");
    REQUIRE_FALSE(text.empty());
    CHECK(parse_model(text) == tex_model());
    const auto desc = parse_description(slurp(source_dir() + "/docs/examples/tex.desc"));
    CHECK(desc.weights.size() == 3);
    CHECK(parse_signature(slurp(source_dir() + "/docs/examples/xy.sig"))->size() == 2);
  }

  TEST_CASE("write then parse is the identity") {
    CHECK(parse_model(write_model(tex_model())) == tex_model());
    const ModelSpace space(EnumerationBudget{binary_signature(2), 4, {}});
    space.for_each([](std::uint64_t, const CausalMultiteam& m) {
      CHECK(parse_model(write_model(m)) == m);
      return true;
    });
    const auto d = extract_description(tex_model());
    CHECK(parse_description(write_description(d)) == d);
  }

  TEST_CASE("malformed files") {
    const std::string sig = "signature\nX: 0 1\nY: 0 1\n";
    CHECK(code_of([&] { parse_model(sig + "team\n1: 0 1 1\n"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([&] { parse_model(sig + "team\n1: 0 2\n"); }) == ErrorCode::ValueOutOfRange);
    CHECK(code_of([&] { parse_model(sig + "laws\nY <- 0 -> 1, 1 -> 0\nteam\n1: 0 0\n"); }) ==
          ErrorCode::CompatibilityViolation);
    CHECK(code_of([&] { parse_model(sig + "laws\nY <- 0 -> 1\n"); }) != ErrorCode::Overflow);
    try {
      parse_model(sig + "team\n1: 0 1 1\n");
    } catch (const ParseError& e) {
      CHECK(e.span().start >= sig.size());
    }
  }
}
