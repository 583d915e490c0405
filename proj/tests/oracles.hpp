#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's tensor routines.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qcr::oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline std::vector<int> digits(long flat, const std::vector<long>& dims) {
  std::vector<int> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return out;
}

inline long flat(const std::vector<int>& ds, const std::vector<long>& dims) {
  long f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + ds[k];
  return f;
}

/// Entry-by-entry partial trace by enumerating every digit string.
inline CMat partial_trace(const CMat& rho, const std::vector<long>& dims, const std::vector<bool>& traced) {
  std::vector<long> kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!traced[k]) kept_dims.push_back(dims[k]);
  }
  long kd = 1;
  for (long x : kept_dims) kd *= x;
  CMat out = CMat::Zero(kd, kd);
  const long n = rho.rows();
  for (long i = 0; i < n; ++i) {
    const auto di = digits(i, dims);
    for (long j = 0; j < n; ++j) {
      const auto dj = digits(j, dims);
      bool diag = true;
      std::vector<int> ki, kj;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (traced[k]) {
          diag = diag && di[k] == dj[k];
        } else {
          ki.push_back(di[k]);
          kj.push_back(dj[k]);
        }
      }
      if (diag) out(flat(ki, kept_dims), flat(kj, kept_dims)) += rho(i, j);
    }
  }
  return out;
}

/// Trace norm of a Hermitian matrix as the sum of absolute eigenvalues.
inline double hermitian_trace_norm(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

inline double min_eigenvalue(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Numerical rank by eigenvalue threshold.
inline long rank(const CMat& m, double threshold) {
  Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return (es.eigenvalues().array() > threshold).count();
}

inline double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace qcr::oracle
