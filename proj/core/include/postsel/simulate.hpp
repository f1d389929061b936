#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace postsel {

/// How the reported coordinate is chosen in a replication.
struct ScreeningDesign {
  enum class Kind { FixedCoordinate, SameSample, SplitSample, NoisyScreening };

  Kind kind = Kind::FixedCoordinate;
  int coordinate = 1;  // 1-based, FixedCoordinate only
  double tau = 0.0;    // NoisyScreening only

  static ScreeningDesign fixed_coordinate(int j);
  static ScreeningDesign same_sample();
  static ScreeningDesign split_sample();
  static ScreeningDesign noisy(double tau);

  std::string name() const;
};

struct SimulationConfig {
  int n = 400;
  int p = 50;
  double alpha = 0.05;
  int reps = 10000;
  std::uint64_t seed = 42;
  ScreeningDesign design;

  void validate() const;
};

struct CoverageReport {
  double coverage = 0.0;
  double mc_se = 0.0;
  int reps = 0;
  ScreeningDesign design;
  std::optional<double> exact_coverage;
};

/// Runs replication rep_index of the config: draws the n x p standard
/// normal matrix from the stream determined by (seed, rep_index), applies
/// the screening design, and reports whether the interval for the selected
/// coordinate mean covers zero. Pure function of (config, rep_index).
bool run_replication(const SimulationConfig& config, int rep_index);

/// Empirical coverage over all replications with its Monte Carlo standard
/// error. Bit-identical for identical (config, seed) at any thread count;
/// threads = 0 picks the hardware concurrency.
CoverageReport run_simulation(const SimulationConfig& config, int threads = 1);

/// Closed-form same-sample coverage Phi(z_{alpha/2})^p.
double exact_same_sample_coverage(int p, double alpha);

/// The six-row coverage study at n = 400, p = 50, alpha = 0.05:
/// fixed coordinate, same-sample, noisy tau in {0.25, 0.5, 1.0}, and
/// split-sample; exact coverage attached where the closed form exists.
std::vector<CoverageReport> table1(std::uint64_t seed, int reps, int threads = 1);

}  // namespace postsel
