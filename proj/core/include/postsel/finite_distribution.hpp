#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace postsel {

/// A probability vector over labeled atoms.
///
/// Construction validates nonnegativity, label uniqueness, and that the
/// probabilities sum to 1 within 1e-12; inputs inside that tolerance are
/// renormalized exactly once. Instances are immutable afterwards.
class FiniteDistribution {
 public:
  FiniteDistribution(std::vector<std::string> labels, std::vector<double> probs);

  static FiniteDistribution uniform(std::size_t k);
  static FiniteDistribution point_mass(std::vector<std::string> labels, std::size_t at);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// True iff the other distribution lives on the identical ordered label set.
  bool same_support(const FiniteDistribution& other) const;

  static constexpr double kSumTolerance = 1e-12;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

}  // namespace postsel
