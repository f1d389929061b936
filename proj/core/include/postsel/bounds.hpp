#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "postsel/bound_report.hpp"
#include "postsel/symmetric_matrix.hpp"

namespace postsel {

/// Declared covariance of the screening summary: either the full matrix
/// or a (dimension, trace-cap) pair. These are design quantities, never
/// estimated from data.
class CovarianceSpec {
 public:
  static CovarianceSpec full(SymmetricMatrix sigma);
  static CovarianceSpec trace_bound(std::size_t q, double v);

  bool is_full() const { return sigma_.has_value(); }
  const SymmetricMatrix& sigma() const;
  std::size_t q() const { return q_; }
  double trace_cap() const;

 private:
  CovarianceSpec() = default;
  std::optional<SymmetricMatrix> sigma_;
  std::size_t q_ = 0;
  double v_ = 0.0;
};

/// Leakage term for screening through a Gaussian channel with noise scale
/// tau: sqrt((1/4)·log det(I + τ^{-2}Σ)) for a full covariance, and
/// sqrt((q/4)·log(1 + v/(q·τ²))) for a trace cap.
double gaussian_leakage(const CovarianceSpec& spec, double tau);

/// alpha plus the Gaussian leakage term, clamped to 1.
BoundReport gaussian_noncoverage_bound(double alpha, const CovarianceSpec& spec, double tau);

/// Noise scale tau such that the trace-cap leakage term equals epsilon:
/// tau = sqrt(v / (q·(exp(4ε²/q) − 1))).
double calibrate_tau(std::size_t q, double v, double epsilon);

/// Noise scale for a full covariance, found by bisection on the monotone
/// map tau -> gaussian_leakage(sigma, tau), to 1e-10 relative tolerance.
double calibrate_tau(const SymmetricMatrix& sigma, double epsilon);

/// alpha + sqrt(H/2) for screening through a summary of entropy H nats.
BoundReport finite_message_bound(double alpha, double entropy_nats);

/// Alphabet variant: uses the entropy of the uniform distribution over
/// alphabet_size atoms (the maximum-entropy case for that alphabet).
BoundReport finite_message_alphabet_bound(double alpha, std::uint64_t alphabet_size);

/// alpha + r_m + sqrt(eta_m/2): transfers fixed-target validity with
/// slack r_m and information budget eta_m.
BoundReport asymptotic_transfer(double alpha, double r_m, double eta_m);

/// Trace cap (1/4)·Σ B_j² for summary components confined to intervals of
/// the given lengths.
double interval_trace_cap(std::span<const double> lengths);

}  // namespace postsel
