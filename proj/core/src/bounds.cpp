#include "postsel/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "postsel/divergences.hpp"
#include "postsel/errors.hpp"
#include "postsel/finite_distribution.hpp"

namespace postsel {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Tv: return "tv";
    case Provenance::Pinsker: return "pinsker";
    case Provenance::GaussianFull: return "gaussian_full";
    case Provenance::GaussianTrace: return "gaussian_trace";
    case Provenance::FiniteMessageEntropy: return "finite_message_entropy";
    case Provenance::FiniteMessageAlphabet: return "finite_message_alphabet";
    case Provenance::AsymptoticTransfer: return "asymptotic_transfer";
  }
  return "unknown";
}

BoundReport make_bound_report(double alpha, double leakage_term, Provenance provenance,
                              nlohmann::json inputs) {
  BoundReport r;
  r.alpha = alpha;
  r.leakage_term = leakage_term;
  r.raw = alpha + leakage_term;
  r.value = std::min(1.0, r.raw);
  r.provenance = provenance;
  r.inputs = std::move(inputs);
  return r;
}

CovarianceSpec CovarianceSpec::full(SymmetricMatrix sigma) {
  CovarianceSpec s;
  s.q_ = sigma.dim();
  s.sigma_ = std::move(sigma);
  return s;
}

CovarianceSpec CovarianceSpec::trace_bound(std::size_t q, double v) {
  if (q < 1) throw ValidationError("covariance spec: dimension q must be at least 1");
  if (!(v >= 0.0)) throw ValidationError("covariance spec: trace cap must be nonnegative");
  CovarianceSpec s;
  s.q_ = q;
  s.v_ = v;
  return s;
}

const SymmetricMatrix& CovarianceSpec::sigma() const {
  if (!sigma_) throw ValidationError("covariance spec: no full covariance present");
  return *sigma_;
}

double CovarianceSpec::trace_cap() const {
  if (sigma_) throw ValidationError("covariance spec: trace cap requested from full variant");
  return v_;
}

double gaussian_leakage(const CovarianceSpec& spec, double tau) {
  if (!(tau > 0.0)) throw ValidationError("gaussian_leakage: tau must be positive");
  if (spec.is_full()) {
    return std::sqrt(0.25 * log_det_scaled(spec.sigma(), tau));
  }
  const double q = static_cast<double>(spec.q());
  const double v = spec.trace_cap();
  return std::sqrt(0.25 * q * std::log1p(v / (q * tau * tau)));
}

BoundReport gaussian_noncoverage_bound(double alpha, const CovarianceSpec& spec, double tau) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("gaussian_noncoverage_bound: alpha must lie in [0, 1]");
  }
  nlohmann::json inputs{{"alpha", alpha}, {"tau", tau}, {"q", spec.q()}};
  Provenance prov;
  if (spec.is_full()) {
    prov = Provenance::GaussianFull;
    inputs["trace"] = spec.sigma().trace();
  } else {
    prov = Provenance::GaussianTrace;
    inputs["trace_cap"] = spec.trace_cap();
  }
  return make_bound_report(alpha, gaussian_leakage(spec, tau), prov, std::move(inputs));
}

double calibrate_tau(std::size_t q, double v, double epsilon) {
  if (q < 1) throw ValidationError("calibrate_tau: q must be at least 1");
  if (!(v > 0.0)) throw ValidationError("calibrate_tau: trace cap must be positive");
  if (!(epsilon > 0.0)) throw ValidationError("calibrate_tau: epsilon must be positive");
  const double qd = static_cast<double>(q);
  return std::sqrt(v / (qd * std::expm1(4.0 * epsilon * epsilon / qd)));
}

double calibrate_tau(const SymmetricMatrix& sigma, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("calibrate_tau: epsilon must be positive");
  const CovarianceSpec spec = CovarianceSpec::full(sigma);
  if (gaussian_leakage(spec, 1.0) == 0.0) {
    throw ValidationError("calibrate_tau: zero covariance leaks nothing at any tau");
  }
  // leakage is strictly decreasing in tau; bracket, then bisect
  double lo = 1.0, hi = 1.0;
  while (gaussian_leakage(spec, lo) < epsilon) lo *= 0.5;
  while (gaussian_leakage(spec, hi) > epsilon) hi *= 2.0;
  while ((hi - lo) > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (gaussian_leakage(spec, mid) > epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoundReport finite_message_bound(double alpha, double entropy_nats) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("finite_message_bound: alpha must lie in [0, 1]");
  }
  if (!(entropy_nats >= 0.0)) {
    throw ValidationError("finite_message_bound: entropy must be nonnegative");
  }
  return make_bound_report(alpha, std::sqrt(entropy_nats / 2.0),
                           Provenance::FiniteMessageEntropy,
                           {{"alpha", alpha}, {"entropy_nats", entropy_nats}});
}

BoundReport finite_message_alphabet_bound(double alpha, std::uint64_t alphabet_size) {
  if (alphabet_size < 1) {
    throw ValidationError("finite_message_alphabet_bound: alphabet must be nonempty");
  }
  // entropy of the uniform distribution over the alphabet, i.e. log|W|,
  // computed through the same entropy path callers use
  const double h = entropy(FiniteDistribution::uniform(alphabet_size));
  BoundReport r = finite_message_bound(alpha, h);
  r.provenance = Provenance::FiniteMessageAlphabet;
  r.inputs = {{"alpha", alpha}, {"alphabet_size", alphabet_size}, {"entropy_nats", h}};
  return r;
}

BoundReport asymptotic_transfer(double alpha, double r_m, double eta_m) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("asymptotic_transfer: alpha must lie in [0, 1]");
  }
  if (!(r_m >= 0.0) || !(eta_m >= 0.0)) {
    throw ValidationError("asymptotic_transfer: r and eta must be nonnegative");
  }
  BoundReport r;
  r.alpha = alpha;
  r.leakage_term = r_m + std::sqrt(eta_m / 2.0);
  r.raw = alpha + r.leakage_term;
  r.value = std::min(1.0, r.raw);
  r.provenance = Provenance::AsymptoticTransfer;
  r.inputs = {{"alpha", alpha}, {"r", r_m}, {"eta", eta_m}};
  return r;
}

double interval_trace_cap(std::span<const double> lengths) {
  if (lengths.empty()) throw ValidationError("interval_trace_cap: empty length list");
  double cap = 0.0;
  for (double b : lengths) {
    if (!(b > 0.0)) throw ValidationError("interval_trace_cap: lengths must be positive");
    cap += 0.25 * b * b;
  }
  return cap;
}

}  // namespace postsel
