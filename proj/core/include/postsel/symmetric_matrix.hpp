#pragma once

#include <cstddef>
#include <vector>

namespace postsel {

/// A dense real symmetric matrix. Construction enforces symmetry within
/// 1e-10 relative tolerance and stores the symmetrized entries.
/// Positive semidefiniteness is checked where it matters, by factorization.
class SymmetricMatrix {
 public:
  SymmetricMatrix(std::size_t dim, std::vector<double> row_major_entries);

  static SymmetricMatrix zero(std::size_t dim);
  static SymmetricMatrix identity(std::size_t dim);
  static SymmetricMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::vector<double>& entries() const { return a_; }
  double trace() const;

  static constexpr double kSymmetryTolerance = 1e-10;

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

/// log det(I + τ^{-2}·Σ) via Cholesky factorization of the shifted matrix.
/// Requires Σ PSD and τ > 0; a failed factorization signals non-PSD input.
double log_det_scaled(const SymmetricMatrix& sigma, double tau);

}  // namespace postsel
