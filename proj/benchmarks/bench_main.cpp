#include <benchmark/benchmark.h>

#include "cechspan/fixtures.hpp"
#include "cechspan/verify.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng.below(13)) - 6;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_TorusCohomology(benchmark::State& state) {
  const auto k = fx::grid_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(k, 1, CoefficientSpec::integers(), false));
}
BENCHMARK(BM_TorusCohomology)->Arg(3)->Arg(5);

static void BM_SpansThreeRings(benchmark::State& state) {
  const auto r = fx::three_rings();
  const auto Z = CoefficientSpec::integers();
  const auto L = canonical_L(r.a, 2, Z);
  for (auto _ : state) benchmark::DoNotOptimize(spans(r.x3, r.a, 2, Z, L));
}
BENCHMARK(BM_SpansThreeRings);

static void BM_MinimizeTorus(benchmark::State& state) {
  const auto t = fx::pinched_torus();
  const auto method = state.range(0) == 0 ? Method::BranchAndBound : Method::GreedyPeel;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(t.instance, method, 1));
}
BENCHMARK(BM_MinimizeTorus)->Arg(0)->Arg(1);

static void BM_LemmaSuite(benchmark::State& state) {
  const std::vector<std::string> ids{"L1A", "L8A", "L13A"};
  for (auto _ : state)
    benchmark::DoNotOptimize(run_suite(ids, 0, 9, CoefficientSpec::integers_mod(2), 1));
}
BENCHMARK(BM_LemmaSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
