#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

#include "qcr/state.hpp"

namespace qcr {

// Seeded generators for reproducible random instances.
using Rng = std::mt19937_64;

inline ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = {normal(rng), normal(rng)};
  }
  return g;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal folded back into Q.
inline ComplexMatrix haar_unitary(Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

inline ComplexVector random_pure(Index n, Rng& rng) {
  ComplexVector v = ginibre(n, 1, rng);
  return v / v.norm();
}

/// Random density matrix of the given rank (rank = n gives full rank).
inline ComplexMatrix random_density(Index n, Index rank, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline ComplexMatrix random_density(Index n, Rng& rng) { return random_density(n, n, rng); }

/// Convex mixture of `terms` random product states on dim_a x dim_b.
inline ComplexMatrix random_separable(Index dim_a, Index dim_b, int terms, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ComplexMatrix rho = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  double total = 0;
  for (int t = 0; t < terms; ++t) {
    const double w = unif(rng) + 1e-3;
    const ComplexMatrix a = random_density(dim_a, 1 + static_cast<Index>(unif(rng) * dim_a) % dim_a, rng);
    const ComplexMatrix b = random_density(dim_b, 1 + static_cast<Index>(unif(rng) * dim_b) % dim_b, rng);
    ComplexMatrix prod(dim_a * dim_b, dim_a * dim_b);
    for (Index i = 0; i < dim_a; ++i) {
      for (Index j = 0; j < dim_a; ++j) prod.block(i * dim_b, j * dim_b, dim_b, dim_b) = a(i, j) * b;
    }
    rho += w * prod;
    total += w;
  }
  return rho / total;
}

}  // namespace qcr
