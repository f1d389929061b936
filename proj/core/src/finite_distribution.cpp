#include "postsel/finite_distribution.hpp"

#include <cmath>
#include <unordered_set>

#include "postsel/errors.hpp"

namespace postsel {

FiniteDistribution::FiniteDistribution(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw ValidationError("distribution: label count != probability count");
  }
  if (probs_.empty()) {
    throw ValidationError("distribution: empty support");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw ValidationError("distribution: duplicate label '" + l + "'");
    }
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw ValidationError("distribution: negative probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("distribution: probabilities sum to " + std::to_string(sum) +
                          ", not 1 within 1e-12");
  }
  // renormalize exactly once at construction
  for (double& p : probs_) p /= sum;
}

FiniteDistribution FiniteDistribution::uniform(std::size_t k) {
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "w" + std::to_string(i);
  return FiniteDistribution(std::move(labels), std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

FiniteDistribution FiniteDistribution::point_mass(std::vector<std::string> labels, std::size_t at) {
  std::vector<double> probs(labels.size(), 0.0);
  if (at >= probs.size()) throw ValidationError("point_mass: atom index out of range");
  probs[at] = 1.0;
  return FiniteDistribution(std::move(labels), std::move(probs));
}

bool FiniteDistribution::same_support(const FiniteDistribution& other) const {
  return labels_ == other.labels_;
}

}  // namespace postsel
