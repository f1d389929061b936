#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "postsel/divergences.hpp"
#include "postsel/errors.hpp"
#include "postsel/joint_model.hpp"
#include "test_oracles.hpp"

using namespace postsel;

namespace {

JointModel from_random(const oracles::RandomJoint& r) {
  return JointModel(r.sel_labels, r.data_labels, r.joint, r.noncoverage);
}

// product joint of selection probs x data probs
JointModel product_joint(std::vector<double> sel, std::vector<double> data,
                         std::vector<std::vector<bool>> noncoverage) {
  std::vector<std::string> sl(sel.size()), dl(data.size());
  for (std::size_t i = 0; i < sel.size(); ++i) sl[i] = "s" + std::to_string(i);
  for (std::size_t i = 0; i < data.size(); ++i) dl[i] = "d" + std::to_string(i);
  std::vector<std::vector<double>> joint(sel.size(), std::vector<double>(data.size()));
  for (std::size_t s = 0; s < sel.size(); ++s) {
    for (std::size_t d = 0; d < data.size(); ++d) joint[s][d] = sel[s] * data[d];
  }
  return JointModel(sl, dl, joint, std::move(noncoverage));
}

// the three-point tilted instance used throughout
JointModel tilted_instance(double alpha, double delta) {
  return JointModel(
      {"s0", "s1"}, {"a0", "a1", "b"},
      {{0.5 * (alpha + delta), 0.5 * (alpha - delta), 0.5 * (1 - 2 * alpha)},
       {0.5 * (alpha - delta), 0.5 * (alpha + delta), 0.5 * (1 - 2 * alpha)}},
      {{true, false, false}, {false, true, false}});
}

}  // namespace

TEST_CASE("joint model validation") {
  CHECK_THROWS_AS(JointModel({"s"}, {"a", "b"}, {{0.5, 0.4}}, {{false, false}}), ValidationError);
  CHECK_THROWS_AS(JointModel({"s"}, {"a", "b"}, {{1.2, -0.2}}, {{false, false}}), ValidationError);
  CHECK_THROWS_AS(JointModel({"s"}, {"a", "b"}, {{0.5, 0.5}}, {{false}}), ValidationError);
}

TEST_CASE("marginal_data examples") {
  const auto prod = product_joint({0.5, 0.5}, {0.3, 0.7},
                                  {{false, false}, {false, false}});
  const auto mu = marginal_data(prod);
  CHECK(mu[0] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(mu[1] == doctest::Approx(0.7).epsilon(1e-14));

  const auto prop1 = tilted_instance(0.05, 0.03);
  const auto mu1 = marginal_data(prop1);
  CHECK(mu1[0] == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(mu1[1] == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(mu1[2] == doctest::Approx(0.90).epsilon(1e-13));

  const JointModel one({"s"}, {"a", "b"}, {{0.4, 0.6}}, {{false, false}});
  const auto mu2 = marginal_data(one);
  CHECK(mu2[0] == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("conditional_data examples") {
  const auto prod = product_joint({0.2, 0.8}, {0.3, 0.7}, {{false, false}, {false, false}});
  const auto mu = marginal_data(prod);
  for (std::size_t s = 0; s < 2; ++s) {
    CHECK(tv_distance(conditional_data(prod, s), mu) <= 1e-14);
  }

  const auto prop1 = tilted_instance(0.05, 0.03);
  const auto cond0 = conditional_data(prop1, std::string("s0"));
  CHECK(cond0[0] == doctest::Approx(0.08).epsilon(1e-13));
  CHECK(cond0[1] == doctest::Approx(0.02).epsilon(1e-13));
  CHECK(cond0[2] == doctest::Approx(0.90).epsilon(1e-13));

  // deterministic injective selection: conditionals are point masses
  const JointModel det({"s0", "s1"}, {"a", "b"}, {{0.3, 0.0}, {0.0, 0.7}},
                       {{false, false}, {false, false}});
  CHECK(conditional_data(det, std::size_t{0})[0] == 1.0);
  CHECK(conditional_data(det, std::size_t{1})[1] == 1.0);

  const JointModel null_row({"s0", "s1"}, {"a", "b"}, {{0.5, 0.5}, {0.0, 0.0}},
                            {{false, false}, {false, false}});
  CHECK_THROWS_AS(conditional_data(null_row, std::size_t{1}), ValidationError);
}

TEST_CASE("tv_leakage examples") {
  const auto prod = product_joint({0.4, 0.6}, {0.1, 0.9}, {{true, false}, {false, true}});
  CHECK(tv_leakage(prod) <= 1e-14);

  CHECK(tv_leakage(tilted_instance(0.05, 0.03)) == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(tv_leakage(tilted_instance(0.25, 0.1)) == doctest::Approx(0.1).epsilon(1e-12));

  // injective deterministic selection of uniform data over k atoms
  for (int k : {2, 4, 7}) {
    std::vector<std::string> labels(k);
    std::vector<std::vector<double>> joint(k, std::vector<double>(k, 0.0));
    std::vector<std::vector<bool>> nc(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
      labels[i] = "x" + std::to_string(i);
      joint[i][i] = 1.0 / k;
    }
    const JointModel diag(labels, labels, joint, nc);
    CHECK(tv_leakage(diag) == doctest::Approx(1.0 - 1.0 / k).epsilon(1e-12));
    CHECK(mutual_information(diag) == doctest::Approx(std::log(k)).epsilon(1e-12));
  }
}

TEST_CASE("mutual information of a deterministic selection is the selection entropy") {
  // S = phi(D) with a non-injective phi and non-uniform data
  const JointModel m({"lo", "hi"}, {"d0", "d1", "d2"},
                     {{0.2, 0.3, 0.0}, {0.0, 0.0, 0.5}},
                     {{false, false, false}, {false, false, false}});
  CHECK(mutual_information(m) ==
        doctest::Approx(entropy(marginal_selection(m))).epsilon(1e-12));
}

TEST_CASE("pinsker_bound examples") {
  const auto prod = product_joint({0.5, 0.5}, {0.5, 0.5}, {{false, true}, {true, false}});
  CHECK(pinsker_bound(prod) <= 1e-7);

  const JointModel diag({"s0", "s1"}, {"d0", "d1"}, {{0.5, 0.0}, {0.0, 0.5}},
                        {{false, false}, {false, false}});
  CHECK(pinsker_bound(diag) == doctest::Approx(std::sqrt(std::log(2.0) / 2.0)).epsilon(1e-12));
}

TEST_CASE("fixed_target_alpha and selected_noncoverage examples") {
  const auto all_false = tilted_instance(0.05, 0.0);
  const JointModel none({"s"}, {"a", "b"}, {{0.5, 0.5}}, {{false, false}});
  CHECK(fixed_target_alpha(none) == 0.0);
  CHECK(selected_noncoverage(none) == 0.0);

  const JointModel all({"s"}, {"a", "b"}, {{0.5, 0.5}}, {{true, true}});
  CHECK(fixed_target_alpha(all) == 1.0);
  CHECK(selected_noncoverage(all) == 1.0);

  const auto prop1 = tilted_instance(0.05, 0.03);
  CHECK(fixed_target_alpha(prop1) == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(selected_noncoverage(prop1) == doctest::Approx(0.08).epsilon(1e-13));
  (void)all_false;
}

TEST_CASE("noncoverage_bounds examples") {
  const auto prod = product_joint({0.5, 0.5}, {0.05, 0.95}, {{true, false}, {true, false}});
  const auto b = noncoverage_bounds(prod);
  CHECK(b.tv.value == doctest::Approx(0.05).epsilon(1e-12));

  const auto sharp = noncoverage_bounds(tilted_instance(0.05, 0.05));
  CHECK(sharp.tv.raw == doctest::Approx(0.10).epsilon(1e-12));
  CHECK(selected_noncoverage(tilted_instance(0.05, 0.05)) ==
        doctest::Approx(sharp.tv.raw).epsilon(1e-12));

  const JointModel all({"s"}, {"a"}, {{1.0}}, {{true}});
  CHECK(noncoverage_bounds(all).tv.value == 1.0);
  CHECK(noncoverage_bounds(all).tv.raw >= 1.0);
}

TEST_CASE("leakage bound oracle over 1000 random joint models") {
  std::mt19937_64 rng(20250823);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = from_random(oracles::random_joint(rng));
    const double sel = selected_noncoverage(m);
    const double alpha = fixed_target_alpha(m);
    const double tv = tv_leakage(m);
    const double pinsker = pinsker_bound(m);
    CHECK(sel <= alpha + tv + 1e-12);
    CHECK(tv <= pinsker + 1e-12);
  }
}

TEST_CASE("coarsening the data partition never increases mutual information") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = oracles::random_joint(rng, 4, 6);
    if (r.data_labels.size() < 2) continue;
    const auto fine = from_random(r);
    // merge the first two data atoms
    oracles::RandomJoint merged = r;
    merged.data_labels.erase(merged.data_labels.begin());
    merged.data_labels[0] = "merged";
    for (std::size_t s = 0; s < r.joint.size(); ++s) {
      merged.joint[s].erase(merged.joint[s].begin());
      merged.joint[s][0] = r.joint[s][0] + r.joint[s][1];
      merged.noncoverage[s].erase(merged.noncoverage[s].begin());
    }
    const auto coarse = from_random(merged);
    CHECK(mutual_information(coarse) <= mutual_information(fine) + 1e-12);
  }
}

TEST_CASE("product joint: selected noncoverage is the weighted fixed-target average") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int ns = 1 + static_cast<int>(rng() % 4), nd = 1 + static_cast<int>(rng() % 6);
    std::vector<double> sel(ns), data(nd);
    double ssum = 0, dsum = 0;
    for (double& x : sel) { x = unif(rng); ssum += x; }
    for (double& x : data) { x = unif(rng); dsum += x; }
    for (double& x : sel) x /= ssum;
    for (double& x : data) x /= dsum;
    std::vector<std::vector<bool>> nc(ns, std::vector<bool>(nd));
    for (auto& row : nc) for (std::size_t d = 0; d < row.size(); ++d) row[d] = coin(rng);
    const auto m = product_joint(sel, data, nc);
    double expected = 0.0;
    for (int s = 0; s < ns; ++s) {
      double miss = 0.0;
      for (int d = 0; d < nd; ++d) {
        if (nc[s][d]) miss += data[d];
      }
      expected += sel[s] * miss;
    }
    CHECK(selected_noncoverage(m) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(selected_noncoverage(m) <= fixed_target_alpha(m) + 1e-12);
  }
}

TEST_CASE("all quantities invariant under simultaneous label permutation") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = oracles::random_joint(rng);
    const auto m = from_random(r);
    // reverse both axes
    oracles::RandomJoint p = r;
    std::reverse(p.sel_labels.begin(), p.sel_labels.end());
    std::reverse(p.data_labels.begin(), p.data_labels.end());
    std::reverse(p.joint.begin(), p.joint.end());
    std::reverse(p.noncoverage.begin(), p.noncoverage.end());
    for (auto& row : p.joint) std::reverse(row.begin(), row.end());
    for (auto& row : p.noncoverage) std::reverse(row.begin(), row.end());
    const auto mp = from_random(p);
    CHECK(tv_leakage(mp) == doctest::Approx(tv_leakage(m)).epsilon(1e-12));
    CHECK(mutual_information(mp) == doctest::Approx(mutual_information(m)).epsilon(1e-12));
    CHECK(fixed_target_alpha(mp) == doctest::Approx(fixed_target_alpha(m)).epsilon(1e-12));
    CHECK(selected_noncoverage(mp) == doctest::Approx(selected_noncoverage(m)).epsilon(1e-12));
  }
}
