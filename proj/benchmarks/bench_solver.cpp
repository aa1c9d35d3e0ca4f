#include <benchmark/benchmark.h>

#include "fuzzyopt/fuzzy_number.hpp"
#include "fuzzyopt/level_calculus.hpp"
#include "fuzzyopt/newton.hpp"
#include "fuzzyopt/problems.hpp"

using namespace fuzzyopt;

namespace {

void BM_Solve(benchmark::State& state, ProblemKind kind) {
  const ProblemSpec spec = builtin_spec(kind);
  const FuzzyFunction f = build_function(spec);
  const NewtonConfig cfg = spec.newton_config();
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, cfg).xstar);
}
BENCHMARK_CAPTURE(BM_Solve, example, ProblemKind::example_4_1);
BENCHMARK_CAPTURE(BM_Solve, crisp, ProblemKind::max_return_crisp);
BENCHMARK_CAPTURE(BM_Solve, fuzzy, ProblemKind::max_return_fuzzy);

void BM_Scalarize(benchmark::State& state) {
  const FuzzyFunction f = build_function(builtin_spec(ProblemKind::max_return_fuzzy));
  ScalarizationConfig cfg;
  cfg.alpha_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scalarize(f, 0.7, cfg));
}
BENCHMARK(BM_Scalarize)->Arg(11)->Arg(101)->Arg(1001);

void BM_FuzzyMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FuzzyNumber a = discretize(TriangularFuzzy(1, 2, 3), n);
  const FuzzyNumber b = discretize(TriangularFuzzy(-1, 0.5, 2), n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_FuzzyMul)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
