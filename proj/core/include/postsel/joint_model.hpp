#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "postsel/bound_report.hpp"
#include "postsel/finite_distribution.hpp"

namespace postsel {

/// Finite joint law of (selected object, inferential data) together with
/// the per-selection noncoverage indicator table: entry (s, d) is true iff
/// data value d makes the confidence set for selection s miss its target.
class JointModel {
 public:
  JointModel(std::vector<std::string> selection_labels, std::vector<std::string> data_labels,
             std::vector<std::vector<double>> joint, std::vector<std::vector<bool>> noncoverage);

  std::size_t n_selections() const { return selection_labels_.size(); }
  std::size_t n_data() const { return data_labels_.size(); }
  const std::vector<std::string>& selection_labels() const { return selection_labels_; }
  const std::vector<std::string>& data_labels() const { return data_labels_; }

  double joint(std::size_t s, std::size_t d) const { return joint_[s * n_data() + d]; }
  bool noncovered(std::size_t s, std::size_t d) const { return noncoverage_[s * n_data() + d]; }

  /// Probability of a selection row (sum of the row of the joint).
  double selection_prob(std::size_t s) const { return row_sums_[s]; }

  static constexpr double kSumTolerance = 1e-12;

 private:
  std::vector<std::string> selection_labels_;
  std::vector<std::string> data_labels_;
  std::vector<double> joint_;       // row-major |S| x |D|
  std::vector<bool> noncoverage_;   // same shape
  std::vector<double> row_sums_;
};

/// Marginal law of the data (column sums).
FiniteDistribution marginal_data(const JointModel& j);

/// Marginal law of the selection (row sums).
FiniteDistribution marginal_selection(const JointModel& j);

/// Conditional law of the data given selection s. Requires pr(s) > 0.
FiniteDistribution conditional_data(const JointModel& j, std::size_t s);
FiniteDistribution conditional_data(const JointModel& j, const std::string& selection_label);

/// Average, over selections, of the TV distance between the conditional
/// data law and the marginal data law. Rows with pr(s) = 0 contribute 0.
double tv_leakage(const JointModel& j);

/// Mutual information between selection and data, in nats. Finite for
/// every valid finite joint model.
double mutual_information(const JointModel& j);

/// sqrt(mutual_information / 2): upper bound on tv_leakage.
double pinsker_bound(const JointModel& j);

/// Smallest alpha for which every fixed selection's noncoverage event has
/// marginal probability at most alpha: max over s of mu(E_s).
double fixed_target_alpha(const JointModel& j);

/// Exact probability that the selected target is not covered:
/// sum over (s, d) of joint(s, d) * noncoverage(s, d).
double selected_noncoverage(const JointModel& j);

/// Both leakage-based noncoverage bounds for a joint model, using
/// fixed_target_alpha(j) (or an explicit alpha) as the fixed-target level.
struct NoncoverageBounds {
  BoundReport tv;
  BoundReport pinsker;
};
NoncoverageBounds noncoverage_bounds(const JointModel& j);
NoncoverageBounds noncoverage_bounds(const JointModel& j, double alpha);

}  // namespace postsel
