#include "postsel/audit.hpp"

#include "postsel/errors.hpp"
#include "postsel/json_io.hpp"

namespace postsel {

nlohmann::json audit_model(const JointModel& model, std::optional<double> alpha_override) {
  const double alpha_min = fixed_target_alpha(model);
  double alpha = alpha_min;
  if (alpha_override) {
    if (*alpha_override < alpha_min - 1e-12) {
      throw ValidationError(
          "audit: alpha override " + std::to_string(*alpha_override) +
          " is below the model's fixed-target noncoverage " + std::to_string(alpha_min) +
          "; the fixed-target premise would be violated");
    }
    alpha = *alpha_override;
  }

  const double leakage = tv_leakage(model);
  const double mi = mutual_information(model);
  const double pinsker = pinsker_bound(model);
  const double selected = selected_noncoverage(model);
  const NoncoverageBounds bounds = noncoverage_bounds(model, alpha);

  const bool holds = selected <= bounds.tv.raw + 1e-12 && leakage <= pinsker + 1e-12;

  nlohmann::json out;
  out["fixed_target_alpha"] = alpha_min;
  if (alpha_override) out["alpha_override"] = *alpha_override;
  out["tv_leakage"] = leakage;
  out["mutual_information"] = mi;
  out["pinsker_bound"] = pinsker;
  out["selected_noncoverage"] = selected;
  out["bounds"] = {{"tv", to_json(bounds.tv)}, {"pinsker", to_json(bounds.pinsker)}};
  out["bound_holds"] = holds;
  return out;
}

}  // namespace postsel
