#include "postsel/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "postsel/errors.hpp"
#include "postsel/normal.hpp"
#include "postsel/rng.hpp"

namespace postsel {

ScreeningDesign ScreeningDesign::fixed_coordinate(int j) {
  return ScreeningDesign{Kind::FixedCoordinate, j, 0.0};
}
ScreeningDesign ScreeningDesign::same_sample() { return ScreeningDesign{Kind::SameSample, 1, 0.0}; }
ScreeningDesign ScreeningDesign::split_sample() { return ScreeningDesign{Kind::SplitSample, 1, 0.0}; }
ScreeningDesign ScreeningDesign::noisy(double tau) {
  return ScreeningDesign{Kind::NoisyScreening, 1, tau};
}

std::string ScreeningDesign::name() const {
  switch (kind) {
    case Kind::FixedCoordinate:
      return "fixed coordinate " + std::to_string(coordinate);
    case Kind::SameSample:
      return "same-sample selection";
    case Kind::SplitSample:
      return "split-sample selection";
    case Kind::NoisyScreening: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "noisy screening, tau = %g", tau);
      return buf;
    }
  }
  return "unknown";
}

void SimulationConfig::validate() const {
  if (n < 1) throw ValidationError("simulation: n must be positive");
  if (p < 1) throw ValidationError("simulation: p must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("simulation: alpha must lie in (0, 1)");
  if (reps < 1) throw ValidationError("simulation: reps must be positive");
  if (design.kind == ScreeningDesign::Kind::SplitSample && n % 2 != 0) {
    throw ValidationError("simulation: split-sample design requires even n");
  }
  if (design.kind == ScreeningDesign::Kind::FixedCoordinate &&
      (design.coordinate < 1 || design.coordinate > p)) {
    throw ValidationError("simulation: fixed coordinate index out of [1, p]");
  }
  if (design.kind == ScreeningDesign::Kind::NoisyScreening && !(design.tau > 0.0)) {
    throw ValidationError("simulation: noisy screening requires tau > 0");
  }
}

namespace {

// Lowest index wins ties (probability zero under the continuous model,
// but the rule must be total).
std::size_t argmax(const std::vector<double>& x) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    if (x[j] > x[best]) best = j;
  }
  return best;
}

bool replicate(const SimulationConfig& cfg, int rep_index, double z_crit) {
  RandomStream stream(cfg.seed, static_cast<std::uint64_t>(rep_index));
  const int n = cfg.n, p = cfg.p;
  const bool split = cfg.design.kind == ScreeningDesign::Kind::SplitSample;

  // Draw the n x p matrix row by row; only column sums are retained.
  std::vector<double> col_sum(p, 0.0);
  std::vector<double> half_sum;
  if (split) half_sum.assign(p, 0.0);
  for (int i = 0; i < n; ++i) {
    if (split && i < n / 2) {
      for (int j = 0; j < p; ++j) {
        const double z = stream.next_normal();
        col_sum[j] += z;
        half_sum[j] += z;
      }
    } else {
      for (int j = 0; j < p; ++j) col_sum[j] += stream.next_normal();
    }
  }

  std::size_t sel = 0;
  double mean, half_width;
  switch (cfg.design.kind) {
    case ScreeningDesign::Kind::FixedCoordinate:
      sel = static_cast<std::size_t>(cfg.design.coordinate - 1);
      mean = col_sum[sel] / n;
      half_width = z_crit / std::sqrt(static_cast<double>(n));
      break;
    case ScreeningDesign::Kind::SameSample:
      sel = argmax(col_sum);
      mean = col_sum[sel] / n;
      half_width = z_crit / std::sqrt(static_cast<double>(n));
      break;
    case ScreeningDesign::Kind::SplitSample: {
      sel = argmax(half_sum);
      const int half = n / 2;
      mean = (col_sum[sel] - half_sum[sel]) / half;
      half_width = z_crit / std::sqrt(static_cast<double>(half));
      break;
    }
    case ScreeningDesign::Kind::NoisyScreening: {
      std::vector<double> noisy(p);
      for (int j = 0; j < p; ++j) {
        noisy[j] = col_sum[j] / n + cfg.design.tau * stream.next_normal();
      }
      sel = argmax(noisy);
      mean = col_sum[sel] / n;
      half_width = z_crit / std::sqrt(static_cast<double>(n));
      break;
    }
    default:
      throw ComputationError("simulation: unknown design");
  }
  // every population target is zero; covered iff 0 is inside the interval
  return std::fabs(mean) <= half_width;
}

}  // namespace

bool run_replication(const SimulationConfig& config, int rep_index) {
  config.validate();
  if (rep_index < 0 || rep_index >= config.reps) {
    throw ValidationError("run_replication: rep_index out of [0, reps)");
  }
  return replicate(config, rep_index, normal_quantile(1.0 - config.alpha / 2.0));
}

CoverageReport run_simulation(const SimulationConfig& config, int threads) {
  config.validate();
  const double z_crit = normal_quantile(1.0 - config.alpha / 2.0);

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.reps));

  // Each replication's stream depends only on (seed, rep_index), and the
  // reduction is an integer count, so any partition of the index range
  // yields the same report.
  std::vector<long> counts(workers, 0);
  auto work = [&](unsigned w) {
    long covered = 0;
    for (int r = static_cast<int>(w); r < config.reps; r += static_cast<int>(workers)) {
      if (replicate(config, r, z_crit)) ++covered;
    }
    counts[w] = covered;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  long covered = 0;
  for (long c : counts) covered += c;

  CoverageReport report;
  report.reps = config.reps;
  report.design = config.design;
  report.coverage = static_cast<double>(covered) / config.reps;
  report.mc_se = std::sqrt(report.coverage * (1.0 - report.coverage) / config.reps);
  return report;
}

double exact_same_sample_coverage(int p, double alpha) {
  if (p < 1) throw ValidationError("exact_same_sample_coverage: p must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("exact_same_sample_coverage: alpha must lie in (0, 1)");
  }
  return std::pow(normal_cdf(normal_quantile(1.0 - alpha / 2.0)), static_cast<double>(p));
}

std::vector<CoverageReport> table1(std::uint64_t seed, int reps, int threads) {
  if (reps < 1) throw ValidationError("table1: reps must be positive");
  const std::vector<ScreeningDesign> designs = {
      ScreeningDesign::fixed_coordinate(1), ScreeningDesign::same_sample(),
      ScreeningDesign::noisy(0.25),         ScreeningDesign::noisy(0.5),
      ScreeningDesign::noisy(1.0),          ScreeningDesign::split_sample(),
  };
  std::vector<CoverageReport> rows;
  rows.reserve(designs.size());
  for (const auto& d : designs) {
    SimulationConfig cfg;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.design = d;
    CoverageReport r = run_simulation(cfg, threads);
    if (d.kind == ScreeningDesign::Kind::FixedCoordinate) {
      r.exact_coverage = 1.0 - cfg.alpha;
    } else if (d.kind == ScreeningDesign::Kind::SameSample) {
      r.exact_coverage = exact_same_sample_coverage(cfg.p, cfg.alpha);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace postsel
