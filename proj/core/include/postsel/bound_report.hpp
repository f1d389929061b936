#pragma once

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

namespace postsel {

/// Which bound produced a report.
enum class Provenance {
  Tv,
  Pinsker,
  GaussianFull,
  GaussianTrace,
  FiniteMessageEntropy,
  FiniteMessageAlphabet,
  AsymptoticTransfer,
};

std::string_view to_string(Provenance p);

/// Uniform result record for every noncoverage bound: the clamped value,
/// the raw (unclamped) sum, the leakage term on its own, and an echo of
/// the inputs that produced it.
struct BoundReport {
  double value = 0.0;         // min(1, raw)
  double raw = 0.0;           // alpha + leakage_term when alpha is supplied
  double leakage_term = 0.0;  // >= 0
  std::optional<double> alpha;
  Provenance provenance = Provenance::Tv;
  nlohmann::json inputs = nlohmann::json::object();
};

/// Assembles a clamped report from alpha and a leakage term.
BoundReport make_bound_report(double alpha, double leakage_term, Provenance provenance,
                              nlohmann::json inputs);

}  // namespace postsel
