#pragma once

#include <nlohmann/json.hpp>

#include "postsel/bound_report.hpp"
#include "postsel/joint_model.hpp"
#include "postsel/sharpness.hpp"
#include "postsel/simulate.hpp"
#include "postsel/symmetric_matrix.hpp"

namespace postsel {

// JointModel: {"selection_labels": [...], "data_labels": [...],
//              "joint": [[...]], "noncoverage": [[...]]}
nlohmann::json to_json(const JointModel& model);
JointModel joint_model_from_json(const nlohmann::json& j);

// SymmetricMatrix: {"dim": q, "entries": [[...]]}
nlohmann::json to_json(const SymmetricMatrix& m);
SymmetricMatrix symmetric_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const ScreeningDesign& design);
nlohmann::json to_json(const CoverageReport& report);
nlohmann::json to_json(const SharpnessInstance& instance);
nlohmann::json to_json(const SharpnessCertification& cert);

}  // namespace postsel
