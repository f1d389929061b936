#include "postsel/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "postsel/errors.hpp"

namespace postsel {

SymmetricMatrix::SymmetricMatrix(std::size_t dim, std::vector<double> row_major_entries)
    : dim_(dim), a_(std::move(row_major_entries)) {
  if (dim_ == 0) throw ValidationError("symmetric matrix: dimension must be positive");
  if (a_.size() != dim_ * dim_) {
    throw ValidationError("symmetric matrix: entry count does not match dimension");
  }
  double scale = 0.0;
  for (double x : a_) scale = std::max(scale, std::fabs(x));
  const double tol = kSymmetryTolerance * std::max(1.0, scale);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double lo = a_[i * dim_ + j];
      const double hi = a_[j * dim_ + i];
      if (std::fabs(lo - hi) > tol) {
        throw ValidationError("symmetric matrix: entries (" + std::to_string(i) + "," +
                              std::to_string(j) + ") break symmetry");
      }
      const double avg = 0.5 * (lo + hi);
      a_[i * dim_ + j] = avg;
      a_[j * dim_ + i] = avg;
    }
  }
}

SymmetricMatrix SymmetricMatrix::zero(std::size_t dim) {
  return SymmetricMatrix(dim, std::vector<double>(dim * dim, 0.0));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  std::vector<double> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return SymmetricMatrix(dim, std::move(e));
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& diag) {
  const std::size_t q = diag.size();
  std::vector<double> e(q * q, 0.0);
  for (std::size_t i = 0; i < q; ++i) e[i * q + i] = diag[i];
  return SymmetricMatrix(q, std::move(e));
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

double log_det_scaled(const SymmetricMatrix& sigma, double tau) {
  if (!(tau > 0.0)) throw ValidationError("log_det_scaled: tau must be positive");
  const std::size_t q = sigma.dim();
  const double inv_tau2 = 1.0 / (tau * tau);

  // Cholesky of A = I + sigma / tau^2, lower triangle in place.
  std::vector<double> a(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      a[i * q + j] = inv_tau2 * sigma(i, j) + (i == j ? 1.0 : 0.0);
    }
  }
  double log_det = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    double d = a[j * q + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * q + k] * a[j * q + k];
    if (!(d > 0.0)) {
      throw ValidationError("log_det_scaled: factorization failed; matrix is not PSD");
    }
    const double l = std::sqrt(d);
    a[j * q + j] = l;
    for (std::size_t i = j + 1; i < q; ++i) {
      double s = a[i * q + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * q + k] * a[j * q + k];
      a[i * q + j] = s / l;
    }
    log_det += 2.0 * std::log(l);
  }
  return log_det < 0.0 ? 0.0 : log_det;
}

}  // namespace postsel
