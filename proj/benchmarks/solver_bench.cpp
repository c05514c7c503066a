#include <benchmark/benchmark.h>

#include <vector>

#include "ntnoff/bandwidth.hpp"
#include "ntnoff/orchestrator.hpp"
#include "ntnoff/random.hpp"

using namespace ntnoff;

static void BM_AllocateAccess(benchmark::State& state) {
  RandomStream rng(3);
  std::vector<AccessTask> tasks;
  for (int i = 0; i < state.range(0); ++i)
    tasks.push_back({i, 1e3 + 8e4 * rng.uniform(), 0.5, 2.0, 0.005 * rng.uniform(),
                     10.0 * rng.uniform(), 1.0 + 6.0 * rng.uniform()});
  const AccessParams p{1.4e6, 1e3, 1e-13, 40, AccessPruneKey::LocalMargin};
  for (auto _ : state) benchmark::DoNotOptimize(allocate_access(tasks, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllocateAccess)->RangeMultiplier(2)->Range(4, 256)->Complexity();

static void BM_Snapshot(benchmark::State& state) {
  const Scenario s = validate_scenario(default_scenario_config());
  const auto draw = draw_snapshot(s, 1);
  const auto method = static_cast<Method>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_snapshot(s, draw, method));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Snapshot)->DenseRange(0, 2);

static void BM_DefaultSweep(benchmark::State& state) {
  const Scenario s = validate_scenario(default_scenario_config());
  const std::vector<double> grid{10, 1e2, 1e3, 1e4, 1e5};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(s, grid, 20));
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
