#include "postsel/joint_model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "postsel/divergences.hpp"
#include "postsel/errors.hpp"

namespace postsel {

namespace {
void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ValidationError(std::string("joint model: duplicate ") + what + " label '" + l + "'");
    }
  }
}
}  // namespace

JointModel::JointModel(std::vector<std::string> selection_labels,
                       std::vector<std::string> data_labels,
                       std::vector<std::vector<double>> joint,
                       std::vector<std::vector<bool>> noncoverage)
    : selection_labels_(std::move(selection_labels)), data_labels_(std::move(data_labels)) {
  const std::size_t ns = selection_labels_.size();
  const std::size_t nd = data_labels_.size();
  if (ns == 0 || nd == 0) throw ValidationError("joint model: empty selection or data space");
  require_unique(selection_labels_, "selection");
  require_unique(data_labels_, "data");
  if (joint.size() != ns || noncoverage.size() != ns) {
    throw ValidationError("joint model: row count does not match selection labels");
  }
  joint_.reserve(ns * nd);
  noncoverage_.reserve(ns * nd);
  double total = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    if (joint[s].size() != nd || noncoverage[s].size() != nd) {
      throw ValidationError("joint model: row " + std::to_string(s) +
                            " has wrong number of columns");
    }
    double row = 0.0;
    for (std::size_t d = 0; d < nd; ++d) {
      const double x = joint[s][d];
      if (!(x >= 0.0)) {
        throw ValidationError("joint model: negative mass at (" + std::to_string(s) + "," +
                              std::to_string(d) + ")");
      }
      row += x;
      joint_.push_back(x);
      noncoverage_.push_back(noncoverage[s][d]);
    }
    row_sums_.push_back(row);
    total += row;
  }
  if (std::fabs(total - 1.0) > kSumTolerance) {
    throw ValidationError("joint model: total mass is " + std::to_string(total) +
                          ", not 1 within 1e-12");
  }
  // renormalize once, mirroring FiniteDistribution
  for (double& x : joint_) x /= total;
  for (double& r : row_sums_) r /= total;
}

FiniteDistribution marginal_data(const JointModel& j) {
  std::vector<double> col(j.n_data(), 0.0);
  for (std::size_t s = 0; s < j.n_selections(); ++s) {
    for (std::size_t d = 0; d < j.n_data(); ++d) col[d] += j.joint(s, d);
  }
  return FiniteDistribution(j.data_labels(), std::move(col));
}

FiniteDistribution marginal_selection(const JointModel& j) {
  std::vector<double> rows(j.n_selections());
  for (std::size_t s = 0; s < j.n_selections(); ++s) rows[s] = j.selection_prob(s);
  return FiniteDistribution(j.selection_labels(), std::move(rows));
}

FiniteDistribution conditional_data(const JointModel& j, std::size_t s) {
  if (s >= j.n_selections()) throw ValidationError("conditional_data: selection index out of range");
  const double ps = j.selection_prob(s);
  if (!(ps > 0.0)) {
    throw ValidationError("conditional_data: selection '" + j.selection_labels()[s] +
                          "' has probability zero; conditional law is undefined");
  }
  std::vector<double> row(j.n_data());
  for (std::size_t d = 0; d < j.n_data(); ++d) row[d] = j.joint(s, d) / ps;
  return FiniteDistribution(j.data_labels(), std::move(row));
}

FiniteDistribution conditional_data(const JointModel& j, const std::string& selection_label) {
  const auto& labels = j.selection_labels();
  const auto it = std::find(labels.begin(), labels.end(), selection_label);
  if (it == labels.end()) {
    throw ValidationError("conditional_data: unknown selection label '" + selection_label + "'");
  }
  return conditional_data(j, static_cast<std::size_t>(it - labels.begin()));
}

double tv_leakage(const JointModel& j) {
  const FiniteDistribution mu = marginal_data(j);
  double leakage = 0.0;
  for (std::size_t s = 0; s < j.n_selections(); ++s) {
    const double ps = j.selection_prob(s);
    if (ps == 0.0) continue;
    // p(s) * tv(conditional, marginal) = (1/2) sum_d |joint(s,d) - p(s) mu(d)|
    double sum = 0.0;
    for (std::size_t d = 0; d < j.n_data(); ++d) {
      sum += std::fabs(j.joint(s, d) - ps * mu[d]);
    }
    leakage += 0.5 * sum;
  }
  return std::min(leakage, 1.0);
}

double mutual_information(const JointModel& j) {
  const FiniteDistribution mu = marginal_data(j);
  double mi = 0.0;
  for (std::size_t s = 0; s < j.n_selections(); ++s) {
    const double ps = j.selection_prob(s);
    if (ps == 0.0) continue;
    for (std::size_t d = 0; d < j.n_data(); ++d) {
      const double pi = j.joint(s, d);
      if (pi == 0.0) continue;
      mi += pi * std::log(pi / (ps * mu[d]));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double pinsker_bound(const JointModel& j) {
  return std::sqrt(mutual_information(j) / 2.0);
}

double fixed_target_alpha(const JointModel& j) {
  const FiniteDistribution mu = marginal_data(j);
  double worst = 0.0;
  for (std::size_t s = 0; s < j.n_selections(); ++s) {
    double miss = 0.0;
    for (std::size_t d = 0; d < j.n_data(); ++d) {
      if (j.noncovered(s, d)) miss += mu[d];
    }
    worst = std::max(worst, miss);
  }
  return std::min(worst, 1.0);
}

double selected_noncoverage(const JointModel& j) {
  double total = 0.0;
  for (std::size_t s = 0; s < j.n_selections(); ++s) {
    for (std::size_t d = 0; d < j.n_data(); ++d) {
      if (j.noncovered(s, d)) total += j.joint(s, d);
    }
  }
  return std::min(total, 1.0);
}

NoncoverageBounds noncoverage_bounds(const JointModel& j) {
  return noncoverage_bounds(j, fixed_target_alpha(j));
}

NoncoverageBounds noncoverage_bounds(const JointModel& j, double alpha) {
  nlohmann::json inputs{{"alpha", alpha}};
  NoncoverageBounds out;
  out.tv = make_bound_report(alpha, tv_leakage(j), Provenance::Tv, inputs);
  out.pinsker = make_bound_report(alpha, pinsker_bound(j), Provenance::Pinsker, inputs);
  return out;
}

}  // namespace postsel
