#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

AtomicDescription tex_description() {
  const auto t = tex_model();
  const auto& sig = t.signature();
  return AtomicDescription{t.laws(),
                           {{row(sig, {"0", "1", "0"}), Rational(1, 4)},
                            {row(sig, {"1", "2", "2"}), Rational(1, 2)},
                            {row(sig, {"2", "3", "6"}), Rational(1, 4)}}};
}

// Independent lcm of denominators with plain integers.
long lcm_of_denominators(const AtomicDescription& d) {
  long l = 1;
  for (const auto& [s, w] : d.weights) l = std::lcm(l, w.denominator().get_si());
  return l;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("building the example from its weights") {
    const auto desc = tex_description();
    CHECK(least_common_denominator(desc) == lcm_of_denominators(desc));
    CHECK(build_canonical(desc) == tex_model());
  }

  TEST_CASE("point mass and bad weights") {
    const auto sig = binary_signature(2);
    const FunctionComponent none(sig);
    const auto one = build_canonical(AtomicDescription{none, {{Assignment{{1, 0}}, Rational(1)}}});
    CHECK(one.size() == 1);
    try {
      build_canonical(AtomicDescription{none, {{Assignment{{1, 0}}, Rational(3, 4)}}});
      FAIL("expected WeightsNotNormalized");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WeightsNotNormalized);
    }
    const FunctionComponent y_copies_x(sig, {LawTable(*sig, 1, {0, 1})});
    try {
      build_canonical(AtomicDescription{y_copies_x, {{Assignment{{1, 0}}, Rational(1)}}});
      FAIL("expected SupportIncompatible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SupportIncompatible);
    }
  }

  TEST_CASE("extraction") {
    CHECK(extract_description(tex_model()) == tex_description());
    const auto t = tex_model();
    Multiteam doubled;
    for (const auto& [s, n] : t.team().rows()) doubled.add(s, 2 * n);
    CHECK(extract_description(validate_model(doubled, t.laws())) == tex_description());
    CHECK_THROWS_AS(extract_description(validate_model(Multiteam{}, t.laws())), Error);
  }

  TEST_CASE("round trip over enumerated models up to five rows") {
    const ModelSpace space(EnumerationBudget{binary_signature(2), 5, {}});
    std::size_t bad = 0, checked = 0;
    space.for_each([&](std::uint64_t, const CausalMultiteam& m) {
      if (m.empty()) return true;
      ++checked;
      std::uint64_t g = 0;
      for (const auto& [s, n] : m.team().rows()) g = std::gcd(g, n);
      Multiteam scaled;
      for (const auto& [s, n] : m.team().rows()) scaled.add(s, n / g);
      const auto back = build_canonical(extract_description(m));
      bad += !(back.team() == scaled && back.laws() == m.laws());
      bad += !(reduce_multiplicities(m) == back);
      return true;
    });
    CHECK(checked > 0);
    CHECK(bad == 0);
  }

  TEST_CASE("canonical properties") {
    const auto t = tex_model();
    FormulaGenerator gen(t.signature_ptr(), 5);
    std::vector<Formula> betas;
    for (int i = 0; i < 20; ++i) betas.push_back(gen.co());
    const auto report = check_canonical_properties(t, betas);
    CHECK_MESSAGE(report.ok(), report.str());
    CHECK(report.items.size() == 6);

    const auto empty = check_canonical_properties(validate_model(Multiteam{}, t.laws()));
    for (const auto& item : empty.items)
      if (item.number >= 3) CHECK(item.status == CanonicalReport::Status::NotApplicable);

    Multiteam corrupted;
    corrupted.add(row(t.signature(), {"1", "3", "2"}));
    const auto bad = check_canonical_properties(CausalMultiteam::assume_valid(corrupted, t.laws()));
    CHECK(bad.items.at(0).number == 1);
    CHECK(bad.items.at(0).status == CanonicalReport::Status::Fail);
    CHECK_FALSE(bad.ok());
  }
}
