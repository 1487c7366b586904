#include <benchmark/benchmark.h>

#include "pco/pco.hpp"

using namespace pco;

namespace {

SignaturePtr xy() { return make_signature({{"X", {"0", "1"}}, {"Y", {"0", "1"}}}); }
SignaturePtr xyz() { return make_signature({{"X", {"0", "1"}}, {"Y", {"0", "1"}}, {"Z", {"0", "1"}}}); }

CausalMultiteam example_model() {
  return parse_model(R"(signature
X: 0 1 2
Y: 1 2 3
Z: 0 1 2 3 4 6
laws
Y <- 0 0 -> 1, 0 1 -> 1, 0 2 -> 1, 0 3 -> 1, 0 4 -> 1, 0 6 -> 1, 1 0 -> 2, 1 1 -> 2,
    1 2 -> 2, 1 3 -> 2, 1 4 -> 2, 1 6 -> 2, 2 0 -> 3, 2 1 -> 3, 2 2 -> 3, 2 3 -> 3,
    2 4 -> 3, 2 6 -> 3
Z <- 0 1 -> 0, 0 2 -> 0, 0 3 -> 0, 1 1 -> 1, 1 2 -> 2, 1 3 -> 3, 2 1 -> 2, 2 2 -> 4,
    2 3 -> 6
team
1: 0 1 0
2: 1 2 2
1: 2 3 6
)");
}

void BM_EvalCounterfactualProbability(benchmark::State& state) {
  const auto t = example_model();
  const Formula f = parse_formula("[Y=1] P(Z=2) >= 1/4 & P(Z=2 | X!=0) > 1/2", t.signature());
  for (auto _ : state) benchmark::DoNotOptimize(eval_pco(t, f));
}
BENCHMARK(BM_EvalCounterfactualProbability);

void BM_Intervene(benchmark::State& state) {
  const auto t = example_model();
  const InterventionSpec spec({{1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(intervene(t, spec));
}
BENCHMARK(BM_Intervene);

void BM_EnumerateModels(benchmark::State& state) {
  const auto sig = state.range(0) == 2 ? xy() : xyz();
  const auto rows = static_cast<std::size_t>(state.range(1));
  std::uint64_t n = 0;
  for (auto _ : state) {
    const ModelSpace space(EnumerationBudget{sig, rows, {}});
    space.for_each([&](std::uint64_t, const CausalMultiteam& m) {
      n += m.size();
      return true;
    });
  }
  benchmark::DoNotOptimize(n);
}
BENCHMARK(BM_EnumerateModels)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  FormulaGenerator gen(xy(), 7, RandomFormulaOptions{.max_depth = static_cast<std::size_t>(state.range(0))});
  std::vector<Formula> fs;
  for (int i = 0; i < 100; ++i) fs.push_back(gen.pco());
  for (auto _ : state)
    for (const auto& f : fs) benchmark::DoNotOptimize(normal_form(f));
}
BENCHMARK(BM_NormalForm)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_ValidityCheck(benchmark::State& state) {
  const ModelSpace space(EnumerationBudget{xy(), 4, {}});
  const Formula f = parse_formula("[X=1] P(Y=1) >= 1/2 -> P([X=1] Y=1) >= 1/2", *xy());
  for (auto _ : state) benchmark::DoNotOptimize(check_validity(f, space));
}
BENCHMARK(BM_ValidityCheck)->Unit(benchmark::kMillisecond);

void BM_PhiF(benchmark::State& state) {
  const auto laws = enumerate_law_sets(xyz()).back();
  for (auto _ : state) benchmark::DoNotOptimize(build_phi_f(laws));
}
BENCHMARK(BM_PhiF)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
