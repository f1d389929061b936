#include <benchmark/benchmark.h>

#include <random>

#include "postsel/joint_model.hpp"
#include "postsel/symmetric_matrix.hpp"

namespace {
postsel::JointModel random_model(int ns, int nd) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::string> sl(ns), dl(nd);
  for (int s = 0; s < ns; ++s) sl[s] = "s" + std::to_string(s);
  for (int d = 0; d < nd; ++d) dl[d] = "d" + std::to_string(d);
  std::vector<std::vector<double>> joint(ns, std::vector<double>(nd));
  std::vector<std::vector<bool>> nc(ns, std::vector<bool>(nd));
  double total = 0.0;
  for (auto& row : joint) {
    for (double& x : row) {
      x = unif(rng);
      total += x;
    }
  }
  for (auto& row : joint) {
    for (double& x : row) x /= total;
  }
  return postsel::JointModel(sl, dl, joint, nc);
}
}  // namespace

static void BM_TvLeakage(benchmark::State& state) {
  const auto m = random_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::tv_leakage(m));
  }
}
BENCHMARK(BM_TvLeakage)->Args({5, 8})->Args({50, 200});

static void BM_MutualInformation(benchmark::State& state) {
  const auto m = random_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::mutual_information(m));
  }
}
BENCHMARK(BM_MutualInformation)->Args({5, 8})->Args({50, 200});

static void BM_LogDetScaled(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(q * q);
  for (double& x : a) x = normal(rng);
  std::vector<double> m(q * q, 0.0);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      double s = 0.0;
      for (int k = 0; k < q; ++k) s += a[k * q + i] * a[k * q + j];
      m[i * q + j] = s;
    }
  }
  const postsel::SymmetricMatrix sigma(static_cast<std::size_t>(q), m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(postsel::log_det_scaled(sigma, 0.5));
  }
}
BENCHMARK(BM_LogDetScaled)->Arg(10)->Arg(100);
