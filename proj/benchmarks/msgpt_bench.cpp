#include <benchmark/benchmark.h>

#include <sstream>

#include "msgpt/dp.hpp"
#include "msgpt/oracle.hpp"
#include "msgpt/simulate.hpp"
#include "msgpt/table.hpp"

using namespace msgpt;

// Fresh engine per iteration: measures a full bottom-up build.
static void BM_T1Table(benchmark::State& state) {
  const Count n = state.range(0);
  for (auto _ : state) {
    DpEngine engine(SingletonMode::kStrict);
    engine.reserve(n, 7);
    benchmark::DoNotOptimize(engine.t1(n, 7));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_T1Table)->RangeMultiplier(2)->Range(500, 8000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_T2Table(benchmark::State& state) {
  const Count n = state.range(0);
  const int s = static_cast<int>(state.range(1));
  for (auto _ : state) {
    DpEngine engine;
    engine.reserve(n, s);
    benchmark::DoNotOptimize(engine.t2(n, s));
  }
}
BENCHMARK(BM_T2Table)
    ->ArgsProduct({{1000, 2500, 5000}, {3, 7}})
    ->Unit(benchmark::kMillisecond);

static void BM_TdS2(benchmark::State& state) {
  const Count d = state.range(0);
  for (auto _ : state) {
    DpEngine engine;
    for (Count n = 4 * d; n <= 3000; ++n) benchmark::DoNotOptimize(engine.td_s2(n, d));
  }
}
BENCHMARK(BM_TdS2)->DenseRange(1, 6, 5)->Unit(benchmark::kMillisecond);

static void BM_Figure3Csv(benchmark::State& state) {
  SweepSpec spec;
  spec.family = Family::kT2;
  spec.n_max = 5000;
  spec.s_list = {2, 3, 4, 5, 6, 7};
  for (auto _ : state) {
    std::ostringstream os;
    write_csv(os, dp_sweep(spec));
    benchmark::DoNotOptimize(os.str().size());
  }
}
BENCHMARK(BM_Figure3Csv)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_OracleT2(benchmark::State& state) {
  const Count n = state.range(0);
  for (auto _ : state) {
    PartitionOracle oracle({});
    benchmark::DoNotOptimize(oracle.t2(n, 3));
  }
}
BENCHMARK(BM_OracleT2)->Arg(30)->Arg(45)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_WorstCaseAlg3(benchmark::State& state) {
  const Count n = state.range(0);
  const StrategyPlan plan = alg3_plan(n, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(worst_case(plan, n, 2).tests);
  state.SetItemsProcessed(state.iterations() * binomial(n, 2));
}
BENCHMARK(BM_WorstCaseAlg3)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
