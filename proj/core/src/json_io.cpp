#include "postsel/json_io.hpp"

#include "postsel/errors.hpp"

namespace postsel {

namespace {

template <typename T>
T require_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const JointModel& model) {
  nlohmann::json joint = nlohmann::json::array();
  nlohmann::json noncoverage = nlohmann::json::array();
  for (std::size_t s = 0; s < model.n_selections(); ++s) {
    nlohmann::json jrow = nlohmann::json::array();
    nlohmann::json nrow = nlohmann::json::array();
    for (std::size_t d = 0; d < model.n_data(); ++d) {
      jrow.push_back(model.joint(s, d));
      nrow.push_back(model.noncovered(s, d));
    }
    joint.push_back(std::move(jrow));
    noncoverage.push_back(std::move(nrow));
  }
  return {{"selection_labels", model.selection_labels()},
          {"data_labels", model.data_labels()},
          {"joint", std::move(joint)},
          {"noncoverage", std::move(noncoverage)}};
}

JointModel joint_model_from_json(const nlohmann::json& j) {
  return JointModel(require_field<std::vector<std::string>>(j, "selection_labels"),
                    require_field<std::vector<std::string>>(j, "data_labels"),
                    require_field<std::vector<std::vector<double>>>(j, "joint"),
                    require_field<std::vector<std::vector<bool>>>(j, "noncoverage"));
}

nlohmann::json to_json(const SymmetricMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

SymmetricMatrix symmetric_matrix_from_json(const nlohmann::json& j) {
  const auto dim = require_field<std::size_t>(j, "dim");
  const auto rows = require_field<std::vector<std::vector<double>>>(j, "entries");
  if (rows.size() != dim) throw ValidationError("sigma file: row count does not match dim");
  std::vector<double> flat;
  flat.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw ValidationError("sigma file: ragged entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SymmetricMatrix(dim, std::move(flat));
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json out{{"value", report.value},
                     {"raw", report.raw},
                     {"leakage_term", report.leakage_term},
                     {"provenance", std::string(to_string(report.provenance))},
                     {"inputs", report.inputs}};
  if (report.alpha) out["alpha"] = *report.alpha;
  return out;
}

nlohmann::json to_json(const ScreeningDesign& design) {
  nlohmann::json out{{"name", design.name()}};
  switch (design.kind) {
    case ScreeningDesign::Kind::FixedCoordinate:
      out["kind"] = "fixed";
      out["coordinate"] = design.coordinate;
      break;
    case ScreeningDesign::Kind::SameSample:
      out["kind"] = "same";
      break;
    case ScreeningDesign::Kind::SplitSample:
      out["kind"] = "split";
      break;
    case ScreeningDesign::Kind::NoisyScreening:
      out["kind"] = "noisy";
      out["tau"] = design.tau;
      break;
  }
  return out;
}

nlohmann::json to_json(const CoverageReport& report) {
  nlohmann::json out{{"design", to_json(report.design)},
                     {"coverage", report.coverage},
                     {"mc_se", report.mc_se},
                     {"reps", report.reps}};
  if (report.exact_coverage) out["exact_coverage"] = *report.exact_coverage;
  return out;
}

nlohmann::json to_json(const SharpnessInstance& instance) {
  return {{"alpha", instance.alpha},
          {"delta", instance.delta},
          {"model", to_json(instance.model)}};
}

nlohmann::json to_json(const SharpnessCertification& cert) {
  return {{"quantities",
           {{"fixed_target_alpha", cert.fixed_target_alpha},
            {"tv_leakage", cert.tv_leakage},
            {"selected_noncoverage", cert.selected_noncoverage},
            {"tv_bound_raw", cert.tv_bound_raw}}},
          {"residuals",
           {{"marginal", cert.marginal_residual},
            {"leakage", cert.leakage_residual},
            {"alpha", cert.alpha_residual},
            {"attainment", cert.attainment_residual}}},
          {"pass", cert.pass}};
}

}  // namespace postsel
