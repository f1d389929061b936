#include <benchmark/benchmark.h>

#include "postsel/normal.hpp"
#include "postsel/rng.hpp"

static void BM_NormalQuantile(benchmark::State& state) {
  double u = 1e-9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::normal_quantile(u));
    u += 1e-7;
    if (u >= 1.0) u -= 1.0 - 1e-9;
  }
}
BENCHMARK(BM_NormalQuantile);

static void BM_NormalCdf(benchmark::State& state) {
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::normal_cdf(x));
    x += 1e-4;
    if (x > 8.0) x = -8.0;
  }
}
BENCHMARK(BM_NormalCdf);

static void BM_StreamNormalDraw(benchmark::State& state) {
  postsel::RandomStream stream(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.next_normal());
  }
}
BENCHMARK(BM_StreamNormalDraw);

BENCHMARK_MAIN();
