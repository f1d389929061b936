#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "postsel/divergences.hpp"
#include "postsel/errors.hpp"
#include "postsel/finite_distribution.hpp"
#include "postsel/normal.hpp"
#include "postsel/symmetric_matrix.hpp"
#include "test_oracles.hpp"

using namespace postsel;

namespace {
FiniteDistribution dist(std::vector<double> p) {
  std::vector<std::string> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) labels[i] = "x" + std::to_string(i);
  return FiniteDistribution(std::move(labels), std::move(p));
}

FiniteDistribution random_dist(std::mt19937_64& rng, int k, bool full_support) {
  std::uniform_real_distribution<double> unif(full_support ? 0.05 : 0.0, 1.0);
  std::vector<double> p(k);
  double sum = 0.0;
  for (double& x : p) {
    x = unif(rng);
    sum += x;
  }
  for (double& x : p) x /= sum;
  return dist(std::move(p));
}
}  // namespace

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(dist({0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(dist({1.2, -0.2}), ValidationError);
  CHECK_THROWS_AS(FiniteDistribution({"a", "a"}, {0.5, 0.5}), ValidationError);
  // within the 1e-12 sum tolerance: accepted and renormalized
  const auto d = dist({0.5 + 4e-13, 0.5});
  CHECK(d[0] + d[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("tv_distance examples") {
  CHECK(tv_distance(dist({0.3, 0.7}), dist({0.3, 0.7})) == 0.0);
  CHECK(tv_distance(dist({1.0, 0.0}), dist({0.0, 1.0})) == 1.0);
  const double alpha = 0.05, delta = 0.03;
  const auto mu0 = dist({alpha + delta, alpha - delta, 1 - 2 * alpha});
  const auto mu = dist({alpha, alpha, 1 - 2 * alpha});
  CHECK(tv_distance(mu0, mu) == doctest::Approx(delta).epsilon(1e-14));
  CHECK_THROWS_AS(tv_distance(dist({0.5, 0.5}), FiniteDistribution({"a", "b"}, {0.5, 0.5})),
                  ValidationError);
}

TEST_CASE("tv_distance is a metric on a fixed label set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto a = random_dist(rng, k, false);
    const auto b = random_dist(rng, k, false);
    const auto c = random_dist(rng, k, false);
    CHECK(tv_distance(a, b) == tv_distance(b, a));
    CHECK(tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-14);
    CHECK(tv_distance(a, a) == 0.0);
    CHECK(tv_distance(a, b) >= 0.0);
    CHECK(tv_distance(a, b) <= 1.0);
  }
}

TEST_CASE("kl_divergence examples") {
  const auto p = dist({1.0, 0.0});
  const auto q = dist({0.5, 0.5});
  CHECK(kl_divergence(q, q) == 0.0);
  CHECK(kl_divergence(p, q) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::isinf(kl_divergence(q, p)));
}

TEST_CASE("pinsker inequality at the primitive level") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto p = random_dist(rng, k, true);
    const auto q = random_dist(rng, k, true);
    CHECK(tv_distance(p, q) <= std::sqrt(kl_divergence(p, q) / 2.0) + 1e-12);
  }
}

TEST_CASE("entropy examples and range") {
  CHECK(entropy(dist({1.0, 0.0, 0.0})) == 0.0);
  CHECK(entropy(FiniteDistribution::uniform(8)) == doctest::Approx(std::log(8.0)).epsilon(1e-15));
  CHECK(entropy(dist({0.5, 0.25, 0.25})) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 8);
    const auto p = random_dist(rng, k, false);
    const double h = entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(static_cast<double>(k)) + 1e-12);
    // invariant under label permutation (reverse the atoms)
    std::vector<double> rev(p.probs().rbegin(), p.probs().rend());
    CHECK(entropy(dist(std::move(rev))) == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("normal_cdf against the series oracle") {
  CHECK(normal_cdf(0.0) == 0.5);
  for (double x : {-6.0, -3.0, -1.0, -0.1, 0.3, 1.0, 1.96, 2.5, 4.0, 7.0}) {
    const double expected = static_cast<double>(oracles::normal_cdf_series(x));
    CHECK(std::fabs(normal_cdf(x) - expected) <= 1e-14);
  }
}

TEST_CASE("normal_quantile round trip and oracle value") {
  CHECK_THROWS_AS(normal_quantile(0.0), ValidationError);
  CHECK_THROWS_AS(normal_quantile(1.0), ValidationError);

  const double z975 = normal_quantile(0.975);
  CHECK(z975 == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(std::fabs(z975 - static_cast<double>(oracles::normal_quantile_bisect(0.975L))) <= 1e-12);

  // dense round-trip sweep including the contract endpoints
  double worst = 0.0;
  for (double u : {1e-10, 1e-8, 1e-5, 1e-3, 0.01, 0.2, 0.425, 0.5, 0.7, 0.975, 0.999,
                   1 - 1e-5, 1 - 1e-8, 1 - 1e-10}) {
    worst = std::max(worst, std::fabs(normal_cdf(normal_quantile(u)) - u));
  }
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> unif(1e-10, 1.0 - 1e-10);
  for (int i = 0; i < 20000; ++i) {
    const double u = unif(rng);
    worst = std::max(worst, std::fabs(normal_cdf(normal_quantile(u)) - u));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("cross-check: Phi(z_{0.025})^50 is about 0.28") {
  CHECK(std::pow(normal_cdf(1.959964), 50.0) == doctest::Approx(0.2820).epsilon(2e-4));
}

TEST_CASE("symmetric matrix validation") {
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 0.5, -0.5, 1.0}), ValidationError);
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 0.5, 0.5}), ValidationError);
  const SymmetricMatrix m(2, {2.0, 0.3, 0.3, 1.0});
  CHECK(m.trace() == 3.0);
}

TEST_CASE("log_det_scaled examples") {
  CHECK(log_det_scaled(SymmetricMatrix::zero(3), 0.7) == 0.0);
  CHECK(log_det_scaled(SymmetricMatrix::identity(2), 1.0) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(log_det_scaled(SymmetricMatrix::diagonal({3.0, 0.0}), 1.0) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_det_scaled(SymmetricMatrix::diagonal({-5.0, 1.0}), 1.0), ValidationError);
  CHECK_THROWS_AS(log_det_scaled(SymmetricMatrix::identity(2), 0.0), ValidationError);
}

TEST_CASE("log_det_scaled agrees with 2x2 eigenvalue oracle") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> unif(0.1, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = oracles::random_psd(rng, 2);
    const double tau = unif(rng);
    const auto [l1, l2] = oracles::eig2x2(e[0], e[1], e[3]);
    const double expected =
        std::log1p(l1 / (tau * tau)) + std::log1p(l2 / (tau * tau));
    const double got = log_det_scaled(SymmetricMatrix(2, e), tau);
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("log_det_scaled is nonincreasing in tau") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 5);
    const SymmetricMatrix sigma(q, oracles::random_psd(rng, q));
    double prev = std::numeric_limits<double>::infinity();
    for (double tau : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      const double v = log_det_scaled(sigma, tau);
      CHECK(v <= prev + 1e-12);
      CHECK(v >= 0.0);
      prev = v;
    }
  }
}
