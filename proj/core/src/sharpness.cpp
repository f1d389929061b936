#include "postsel/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "postsel/errors.hpp"

namespace postsel {

SharpnessInstance build_sharpness_instance(double alpha, double delta) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw ValidationError("sharpness: alpha must lie in (0, 1/2]");
  }
  if (!(delta >= 0.0 && delta <= alpha)) {
    throw ValidationError("sharpness: delta must lie in [0, alpha]");
  }
  // Two equally likely selections; each conditional law tilts delta of
  // mass towards that selection's own noncoverage atom. Zero-probability
  // atoms are kept in the support so shapes stay fixed.
  const double rest = std::max(0.0, 1.0 - 2.0 * alpha);
  std::vector<std::vector<double>> joint{
      {0.5 * (alpha + delta), 0.5 * (alpha - delta), 0.5 * rest},
      {0.5 * (alpha - delta), 0.5 * (alpha + delta), 0.5 * rest},
  };
  std::vector<std::vector<bool>> noncoverage{
      {true, false, false},   // selection 0 misses exactly at a0
      {false, true, false},   // selection 1 misses exactly at a1
  };
  JointModel model({"s0", "s1"}, {"a0", "a1", "b"}, std::move(joint), std::move(noncoverage));
  return SharpnessInstance{alpha, delta, std::move(model)};
}

SharpnessCertification certify_sharpness(const SharpnessInstance& instance) {
  const JointModel& m = instance.model;
  SharpnessCertification cert{};

  const FiniteDistribution mu = marginal_data(m);
  const double expected[3] = {instance.alpha, instance.alpha, 1.0 - 2.0 * instance.alpha};
  double marg = 0.0;
  for (std::size_t d = 0; d < 3 && d < mu.size(); ++d) {
    marg = std::max(marg, std::fabs(mu[d] - expected[d]));
  }
  cert.marginal_residual = marg;

  cert.fixed_target_alpha = fixed_target_alpha(m);
  cert.tv_leakage = tv_leakage(m);
  cert.selected_noncoverage = selected_noncoverage(m);
  cert.tv_bound_raw = noncoverage_bounds(m).tv.raw;

  cert.leakage_residual = std::fabs(cert.tv_leakage - instance.delta);
  cert.alpha_residual = std::fabs(cert.fixed_target_alpha - instance.alpha);
  cert.attainment_residual =
      std::fabs(cert.selected_noncoverage - (cert.fixed_target_alpha + cert.tv_leakage));

  cert.pass = cert.marginal_residual <= SharpnessCertification::kTolerance &&
              cert.leakage_residual <= SharpnessCertification::kTolerance &&
              cert.alpha_residual <= SharpnessCertification::kTolerance &&
              cert.attainment_residual <= SharpnessCertification::kTolerance;
  return cert;
}

}  // namespace postsel
