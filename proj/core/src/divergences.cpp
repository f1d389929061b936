#include "postsel/divergences.hpp"

#include <cmath>
#include <limits>

#include "postsel/errors.hpp"

namespace postsel {

namespace {
void require_same_support(const FiniteDistribution& p, const FiniteDistribution& q,
                          const char* op) {
  if (!p.same_support(q)) {
    throw ValidationError(std::string(op) + ": distributions live on different label sets");
  }
}
}  // namespace

double tv_distance(const FiniteDistribution& p, const FiniteDistribution& q) {
  require_same_support(p, q, "tv_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::fabs(p[i] - q[i]);
  return 0.5 * sum;
}

double kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q) {
  require_same_support(p, q, "kl_divergence");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;  // 0 log 0 = 0
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum < 0.0 ? 0.0 : sum;  // guard against rounding at p == q
}

double entropy(const FiniteDistribution& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log(p[i]);
  }
  return h < 0.0 ? 0.0 : h;
}

}  // namespace postsel
