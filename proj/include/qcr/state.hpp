#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <variant>

#include "qcr/errors.hpp"
#include "qcr/layout.hpp"

namespace qcr {

/// Absolute tolerance on eigenvalues for Hermiticity / PSD checks.
inline constexpr double kDefaultPsdTolerance = 1e-9;
/// Eigenvalues below this are treated as exact zeros when purifying.
inline constexpr double kRankThreshold = 1e-12;
inline constexpr Index kDefaultDimCap = 4096;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

/// A pure vector or density matrix bound to a register layout.
template <typename Real>
class BasicQuantumState {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = CVector<Real>;
  using Matrix = CMatrix<Real>;

  BasicQuantumState() = default;

  static BasicQuantumState pure(Layout layout, Vector amplitudes) {
    if (amplitudes.size() != layout.total_dim()) {
      throw DimensionError("amplitude count " + std::to_string(amplitudes.size()) +
                           " does not match layout dimension " +
                           std::to_string(layout.total_dim()));
    }
    return BasicQuantumState(std::move(layout), std::move(amplitudes));
  }

  static BasicQuantumState density(Layout layout, Matrix rho) {
    if (rho.rows() != layout.total_dim() || rho.cols() != layout.total_dim()) {
      throw DimensionError("density matrix is " + std::to_string(rho.rows()) + "x" +
                           std::to_string(rho.cols()) + " but layout dimension is " +
                           std::to_string(layout.total_dim()));
    }
    return BasicQuantumState(std::move(layout), std::move(rho));
  }

  const Layout& layout() const { return layout_; }
  bool is_pure() const { return std::holds_alternative<Vector>(data_); }
  Index dim() const { return layout_.total_dim(); }

  const Vector& vector() const {
    if (!is_pure()) throw NotDensityError("state is held as a density matrix, not a pure vector");
    return std::get<Vector>(data_);
  }

  const Matrix& matrix() const {
    if (is_pure()) throw NotDensityError("state is held as a pure vector, not a density matrix");
    return std::get<Matrix>(data_);
  }

  Matrix density_matrix() const {
    if (is_pure()) {
      const auto& v = std::get<Vector>(data_);
      return v * v.adjoint();
    }
    return std::get<Matrix>(data_);
  }

  BasicQuantumState as_density() const {
    if (!is_pure()) return *this;
    return density(layout_, density_matrix());
  }

  /// Squared norm for pure vectors, real trace for density matrices.
  Real trace() const {
    if (is_pure()) return std::get<Vector>(data_).squaredNorm();
    return std::get<Matrix>(data_).trace().real();
  }

  Real purity() const {
    if (is_pure()) {
      const Real n = std::get<Vector>(data_).squaredNorm();
      return n * n;
    }
    const auto& m = std::get<Matrix>(data_);
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return m.cwiseAbs2().sum();
  }

  BasicQuantumState relabeled(Layout layout) const {
    if (layout.dims() != layout_.dims()) {
      throw DimensionError("relabeling must keep register dimensions");
    }
    BasicQuantumState out = *this;
    out.layout_ = std::move(layout);
    return out;
  }

 private:
  BasicQuantumState(Layout layout, Vector v) : layout_(std::move(layout)), data_(std::move(v)) {}
  BasicQuantumState(Layout layout, Matrix m) : layout_(std::move(layout)), data_(std::move(m)) {}

  Layout layout_;
  std::variant<Vector, Matrix> data_;
};

using QuantumState = BasicQuantumState<double>;

template <typename Real>
struct DensityCheck {
  Real hermitian_deviation = 0;
  Real trace_deviation = 0;
  Real min_eigenvalue = 0;
  bool valid = false;
};

/// Hermitian within tol (max entry of rho - rho^dagger), unit trace within tol,
/// and minimum eigenvalue >= -tol.
template <typename Derived>
auto check_density(const Eigen::MatrixBase<Derived>& rho,
                   typename Eigen::NumTraits<typename Derived::Scalar>::Real tol = kDefaultPsdTolerance) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Plain = typename Derived::PlainObject;
  DensityCheck<Real> out;
  if (rho.rows() != rho.cols() || rho.rows() == 0) return out;
  const Plain herm = (rho + rho.adjoint()) / Real(2);
  out.hermitian_deviation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  out.trace_deviation = std::abs(rho.trace() - typename Derived::Scalar(1));
  Eigen::SelfAdjointEigenSolver<Plain> es(herm, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  out.valid = out.hermitian_deviation <= tol && out.trace_deviation <= tol && out.min_eigenvalue >= -tol;
  return out;
}

template <typename Real>
bool is_valid_state(const BasicQuantumState<Real>& s, Real tol = kDefaultPsdTolerance) {
  if (s.is_pure()) return std::abs(s.vector().squaredNorm() - Real(1)) <= tol;
  return check_density(s.matrix(), tol).valid;
}

}  // namespace qcr
