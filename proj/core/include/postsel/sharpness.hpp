#pragma once

#include "postsel/joint_model.hpp"

namespace postsel {

/// The three-point instance on which the additive leakage bound is an
/// equality: two equally likely selections whose conditional data laws
/// tilt mass delta towards their own noncoverage atom.
struct SharpnessInstance {
  double alpha;
  double delta;
  JointModel model;
};

/// Residuals of the four defining equalities, recomputed from the model
/// alone. Certification passes when every residual is at most 1e-12.
struct SharpnessCertification {
  double marginal_residual;     // max atom-wise |marginal - (alpha, alpha, 1-2*alpha)|
  double leakage_residual;      // |tv_leakage - delta|
  double alpha_residual;        // |fixed_target_alpha - alpha|
  double attainment_residual;   // |selected_noncoverage - (fixed_target_alpha + tv_leakage)|
  double fixed_target_alpha;
  double tv_leakage;
  double selected_noncoverage;
  double tv_bound_raw;
  bool pass;

  static constexpr double kTolerance = 1e-12;
};

/// Requires 0 < alpha <= 1/2 and 0 <= delta <= alpha.
SharpnessInstance build_sharpness_instance(double alpha, double delta);

SharpnessCertification certify_sharpness(const SharpnessInstance& instance);

}  // namespace postsel
