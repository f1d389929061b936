#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "postsel/joint_model.hpp"

namespace postsel {

/// Full leakage audit of a joint model: exact quantities, both noncoverage
/// bounds, and a self-check that the bounds hold. When alpha_override is
/// supplied it must be at least fixed_target_alpha(model) - 1e-12, since a
/// smaller value would violate the fixed-target premise.
nlohmann::json audit_model(const JointModel& model, std::optional<double> alpha_override);

}  // namespace postsel
