#include <benchmark/benchmark.h>

#include "postsel/simulate.hpp"

namespace {
postsel::SimulationConfig table_config(postsel::ScreeningDesign design) {
  postsel::SimulationConfig cfg;
  cfg.design = design;
  cfg.reps = 10000;
  cfg.seed = 42;
  return cfg;
}
}  // namespace

static void BM_ReplicationSameSample(benchmark::State& state) {
  const auto cfg = table_config(postsel::ScreeningDesign::same_sample());
  int r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::run_replication(cfg, r));
    r = (r + 1) % cfg.reps;
  }
}
BENCHMARK(BM_ReplicationSameSample);

static void BM_ReplicationNoisy(benchmark::State& state) {
  const auto cfg = table_config(postsel::ScreeningDesign::noisy(0.25));
  int r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::run_replication(cfg, r));
    r = (r + 1) % cfg.reps;
  }
}
BENCHMARK(BM_ReplicationNoisy);

static void BM_SimulationSmall(benchmark::State& state) {
  postsel::SimulationConfig cfg;
  cfg.n = 50;
  cfg.p = 5;
  cfg.reps = static_cast<int>(state.range(0));
  cfg.design = postsel::ScreeningDesign::same_sample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::run_simulation(cfg));
  }
}
BENCHMARK(BM_SimulationSmall)->Arg(100)->Arg(1000);
