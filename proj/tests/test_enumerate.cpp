#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

// Counts models directly: every total table per variable (or no law), kept when
// non-constant and acyclic, times the multisets of compatible rows.
std::uint64_t recursive_count(const SignaturePtr& sig, std::size_t max_rows) {
  const std::size_t n = sig->size();
  const auto rows = all_assignments(*sig);
  std::uint64_t total = 0;
  std::vector<std::optional<LawTable>> chosen(n);
  std::function<void(Var)> choose = [&](Var v) {
    if (v == n) {
      std::vector<LawTable> tables;
      for (const auto& t : chosen)
        if (t) tables.push_back(*t);
      std::optional<FunctionComponent> f;
      try {
        f.emplace(sig, tables);
        f->check_non_constant();
      } catch (const Error&) {
        return;
      }
      std::size_t compatible_rows = 0;
      for (const auto& s : rows) {
        bool ok = true;
        for (const auto& t : tables) ok = ok && t(s) == s[t.target()];
        compatible_rows += ok;
      }
      // multisets of size ≤ max_rows from compatible_rows kinds, by recursion on kinds
      std::function<std::uint64_t(std::size_t, std::size_t)> ms = [&](std::size_t kinds, std::size_t left) {
        if (kinds == 0) return std::uint64_t{1};
        std::uint64_t c = 0;
        for (std::size_t take = 0; take <= left; ++take) c += ms(kinds - 1, left - take);
        return c;
      };
      total += ms(compatible_rows, max_rows);
      return;
    }
    chosen[v].reset();
    choose(v + 1);
    std::size_t entries = 1;
    for (Var w = 0; w < n; ++w)
      if (w != v) entries *= sig->range_size(w);
    std::vector<Val> out(entries, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == entries) {
        chosen[v].emplace(*sig, v, out);
        choose(v + 1);
        return;
      }
      for (Val y = 0; y < sig->range_size(v); ++y) {
        out[i] = y;
        fill(i + 1);
      }
    };
    fill(0);
    chosen[v].reset();
  };
  choose(0);
  return total;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("one binary variable: closed form") {
    const auto sig = make_signature({{"X", {"0", "1"}}});
    for (std::size_t m = 0; m <= 6; ++m) {
      const ModelSpace space(EnumerationBudget{sig, m, {}});
      CHECK(space.size() == (m + 1) * (m + 2) / 2);
      CHECK(space.law_sets().size() == 1);
    }
  }

  TEST_CASE("no rows: one empty model per law set") {
    const auto sig = binary_signature(2);
    const ModelSpace space(EnumerationBudget{sig, 0, {}});
    CHECK(space.size() == space.law_sets().size());
    space.for_each([](std::uint64_t, const CausalMultiteam& m) {
      CHECK(m.empty());
      return true;
    });
  }

  TEST_CASE("counts agree with an independent counter") {
    for (std::size_t m : {0, 1, 2, 3, 4}) {
      const auto sig = binary_signature(2);
      CHECK(ModelSpace(EnumerationBudget{sig, m, {}}).size() == recursive_count(sig, m));
    }
    CHECK(ModelSpace(EnumerationBudget{binary_signature(2), 4, {}}).size() == 130);
    const auto sig3 = binary_signature(3);
    CHECK(ModelSpace(EnumerationBudget{sig3, 2, {}}).size() == recursive_count(sig3, 2));
    const auto mixed = make_signature({{"X", {"0", "1", "2"}}, {"Y", {"0", "1"}}});
    CHECK(ModelSpace(EnumerationBudget{mixed, 2, {}}).size() == recursive_count(mixed, 2));
  }

  TEST_CASE("the estimate matches and models are distinct and valid") {
    EnumerationBudget budget{binary_signature(2), 3, {}};
    const ModelSpace space(budget);
    CHECK(estimate_model_count(budget) >= space.size());
    std::vector<CausalMultiteam> seen;
    space.for_each([&](std::uint64_t i, const CausalMultiteam& m) {
      CHECK(m.size() <= 3);
      CHECK_NOTHROW(validate_model(m.team(), m.laws()));
      CHECK(space.model(i) == m);
      for (const auto& other : seen) CHECK_FALSE(other == m);
      seen.push_back(m);
      return true;
    });
    CHECK(seen.size() == space.size());
    CHECK(enumerate_models(budget).size() == space.size());
  }

  TEST_CASE("law filter and refusal of huge budgets") {
    EnumerationBudget exo{binary_signature(2), 2, [](const FunctionComponent& f) { return f.endogenous().empty(); }};
    CHECK(ModelSpace(exo).size() == multisets_up_to(4, 2));
    EnumerationBudget huge{binary_signature(3), 40, {}};
    huge.max_models = 1000;
    CHECK_THROWS_AS(ModelSpace{huge}, Error);
  }
}
