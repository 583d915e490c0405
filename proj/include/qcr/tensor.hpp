#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qcr/errors.hpp"
#include "qcr/layout.hpp"
#include "qcr/state.hpp"

namespace qcr {

/// Maps each flat index of a system with register dims `dims` to its flat
/// index after reordering registers so that new position k holds old
/// register order[k].
inline std::vector<Index> index_permutation(std::span<const Index> dims,
                                            std::span<const std::size_t> order) {
  const std::size_t n = dims.size();
  if (order.size() != n) throw DimensionError("permutation length does not match register count");
  std::vector<bool> seen(n, false);
  for (std::size_t p : order) {
    if (p >= n || seen[p]) throw DimensionError("register order is not a permutation");
    seen[p] = true;
  }
  std::vector<Index> new_stride_of(n, 1);
  Index total = 1;
  for (std::size_t k = n; k-- > 0;) {
    new_stride_of[order[k]] = total;
    total *= dims[order[k]];
  }
  std::vector<Index> map(static_cast<std::size_t>(total));
  std::vector<Index> digit(n, 0);
  Index target = 0;
  for (Index i = 0; i < total; ++i) {
    map[static_cast<std::size_t>(i)] = target;
    for (std::size_t p = n; p-- > 0;) {
      if (++digit[p] < dims[p]) {
        target += new_stride_of[p];
        break;
      }
      target -= (dims[p] - 1) * new_stride_of[p];
      digit[p] = 0;
    }
  }
  return map;
}

inline std::vector<std::size_t> inverse_order(std::span<const std::size_t> order) {
  std::vector<std::size_t> inv(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inv[order[k]] = k;
  return inv;
}

/// Part of each flat index contributed by the registers at `pos`, expressed
/// as a flat index over those registers in the listed order.
inline std::vector<Index> sub_index(std::span<const Index> dims, std::span<const std::size_t> pos) {
  Index total = 1;
  for (Index d : dims) total *= d;
  std::vector<Index> sub_stride(dims.size(), 0);
  Index s = 1;
  for (std::size_t k = pos.size(); k-- > 0;) {
    sub_stride[pos[k]] = s;
    s *= dims[pos[k]];
  }
  std::vector<Index> out(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index rem = i;
    Index acc = 0;
    for (std::size_t p = dims.size(); p-- > 0;) {
      acc += (rem % dims[p]) * sub_stride[p];
      rem /= dims[p];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

template <typename Real>
BasicQuantumState<Real> permute(const BasicQuantumState<Real>& s, std::span<const std::size_t> order) {
  const auto dims = s.layout().dims();
  const auto map = index_permutation(dims, order);
  const Layout layout = s.layout().select(order);
  const Index n = s.dim();
  if (s.is_pure()) {
    const auto& v = s.vector();
    typename BasicQuantumState<Real>::Vector out(n);
    for (Index i = 0; i < n; ++i) out(map[i]) = v(i);
    return BasicQuantumState<Real>::pure(layout, std::move(out));
  }
  const auto& m = s.matrix();
  typename BasicQuantumState<Real>::Matrix out(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(map[i], map[j]) = m(i, j);
  }
  return BasicQuantumState<Real>::density(layout, std::move(out));
}

/// Reorders registers to the given label sequence (must name every register).
template <typename Real>
BasicQuantumState<Real> reorder(const BasicQuantumState<Real>& s, std::span<const std::string> labels) {
  if (labels.size() != s.layout().size()) throw LabelError("reorder must list every register");
  const auto order = s.layout().positions(labels);
  return permute(s, order);
}

template <typename Real>
BasicQuantumState<Real> tensor_product(const BasicQuantumState<Real>& a, const BasicQuantumState<Real>& b,
                                       Index dim_cap = kDefaultDimCap) {
  Layout layout = a.layout().concatenated(b.layout());
  if (layout.total_dim() > dim_cap) {
    throw DimensionError("tensor product dimension " + std::to_string(layout.total_dim()) +
                         " exceeds cap " + std::to_string(dim_cap));
  }
  if (a.is_pure() && b.is_pure()) {
    typename BasicQuantumState<Real>::Vector v = Eigen::kroneckerProduct(a.vector(), b.vector());
    return BasicQuantumState<Real>::pure(std::move(layout), std::move(v));
  }
  typename BasicQuantumState<Real>::Matrix m =
      Eigen::kroneckerProduct(a.density_matrix(), b.density_matrix());
  return BasicQuantumState<Real>::density(std::move(layout), std::move(m));
}

/// Traces out the listed registers; the result is always a density matrix.
template <typename Real>
BasicQuantumState<Real> partial_trace(const BasicQuantumState<Real>& s, std::span<const std::string> over) {
  using Matrix = typename BasicQuantumState<Real>::Matrix;
  const auto traced = s.layout().positions(over);
  const auto kept = s.layout().complement(traced);
  std::vector<std::size_t> order = kept;
  order.insert(order.end(), traced.begin(), traced.end());
  const auto p = permute(s, order);
  const Index K = s.layout().dim_of(kept);
  const Index T = s.layout().dim_of(traced);
  const Layout kept_layout = s.layout().select(kept);
  if (p.is_pure()) {
    Eigen::Map<const Matrix> m(p.vector().data(), T, K);
    Matrix rho = m.transpose() * m.conjugate();
    return BasicQuantumState<Real>::density(kept_layout, std::move(rho));
  }
  const auto& full = p.matrix();
  Matrix rho = Matrix::Zero(K, K);
  for (Index b = 0; b < K; ++b) {
    for (Index a = 0; a < K; ++a) {
      rho(a, b) = full.block(a * T, b * T, T, T).trace();
    }
  }
  return BasicQuantumState<Real>::density(kept_layout, std::move(rho));
}

template <typename Real>
BasicQuantumState<Real> partial_trace(const BasicQuantumState<Real>& s, std::initializer_list<std::string> over) {
  const std::vector<std::string> v(over);
  return partial_trace(s, std::span<const std::string>(v));
}

/// Transposes the listed registers of a density matrix. Pure vectors must be
/// converted with as_density() first.
template <typename Real>
typename BasicQuantumState<Real>::Matrix partial_transpose(const BasicQuantumState<Real>& s,
                                                          std::span<const std::string> over) {
  if (s.is_pure()) {
    throw NotDensityError("partial transpose needs a density matrix; project the pure vector first");
  }
  const auto pos = s.layout().positions(over);
  const auto dims = s.layout().dims();
  // Flat contribution of the transposed registers, in place (original strides).
  std::vector<Index> stride(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  const Index n = s.dim();
  std::vector<Index> part(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    Index acc = 0;
    for (std::size_t p : pos) acc += ((i / stride[p]) % dims[p]) * stride[p];
    part[i] = acc;
  }
  const auto& m = s.matrix();
  typename BasicQuantumState<Real>::Matrix out(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      out(i - part[i] + part[j], j - part[j] + part[i]) = m(i, j);
    }
  }
  return out;
}

/// Sum of singular values.
template <typename Derived>
auto trace_norm(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  if (a.rows() != a.cols()) throw DimensionError("trace norm needs a square matrix");
  if (a.size() == 0) return typename Eigen::NumTraits<typename Derived::Scalar>::Real(0);
  Eigen::BDCSVD<Plain> svd(a.eval());
  return svd.singularValues().sum();
}

template <typename Derived>
auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  if (a.rows() != a.cols()) throw DimensionError("eigenvalues need a square matrix");
  const Plain h = (a + a.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<Plain> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().eval();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                typename Eigen::NumTraits<typename Derived::Scalar>::Real tol = kDefaultPsdTolerance) {
  if (u.rows() != u.cols()) return false;
  using Plain = typename Derived::PlainObject;
  const Plain prod = u.adjoint() * u;
  return (prod - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// Probabilities of each computational-basis outcome on the listed registers,
/// indexed by the flat outcome over those registers in listed order.
template <typename Real>
std::vector<Real> outcome_distribution(const BasicQuantumState<Real>& s, std::span<const std::string> on) {
  const auto pos = s.layout().positions(on);
  const auto dims = s.layout().dims();
  const auto sub = sub_index(dims, pos);
  std::vector<Real> probs(static_cast<std::size_t>(s.layout().dim_of(pos)), Real(0));
  const Index n = s.dim();
  if (s.is_pure()) {
    const auto& v = s.vector();
    for (Index i = 0; i < n; ++i) probs[sub[i]] += std::norm(v(i));
  } else {
    const auto& m = s.matrix();
    for (Index i = 0; i < n; ++i) probs[sub[i]] += m(i, i).real();
  }
  return probs;
}

template <typename Real>
struct MeasurementOutcome {
  Digits outcome;
  Real probability;
  BasicQuantumState<Real> post;
};

/// Projective computational-basis measurement of the listed registers. Post
/// states keep the full layout. Outcomes with probability <= zero_threshold
/// are omitted.
template <typename Real>
std::vector<MeasurementOutcome<Real>> measure_computational(const BasicQuantumState<Real>& s,
                                                            std::span<const std::string> on,
                                                            Real zero_threshold = Real(1e-14)) {
  using State = BasicQuantumState<Real>;
  const auto pos = s.layout().positions(on);
  const auto dims = s.layout().dims();
  const auto sub = sub_index(dims, pos);
  std::vector<Index> measured_dims;
  for (std::size_t p : pos) measured_dims.push_back(dims[p]);
  const auto probs = outcome_distribution(s, on);
  const Index n = s.dim();
  std::vector<MeasurementOutcome<Real>> out;
  for (std::size_t o = 0; o < probs.size(); ++o) {
    const Real p = probs[o];
    if (!(p > zero_threshold)) continue;
    const Index oi = static_cast<Index>(o);
    if (s.is_pure()) {
      typename State::Vector v = State::Vector::Zero(n);
      const auto& src = s.vector();
      for (Index i = 0; i < n; ++i) {
        if (sub[i] == oi) v(i) = src(i);
      }
      v /= std::sqrt(p);
      out.push_back({digits_of(oi, measured_dims), p, State::pure(s.layout(), std::move(v))});
    } else {
      typename State::Matrix m = State::Matrix::Zero(n, n);
      const auto& src = s.matrix();
      for (Index j = 0; j < n; ++j) {
        if (sub[j] != oi) continue;
        for (Index i = 0; i < n; ++i) {
          if (sub[i] == oi) m(i, j) = src(i, j);
        }
      }
      m /= p;
      out.push_back({digits_of(oi, measured_dims), p, State::density(s.layout(), std::move(m))});
    }
  }
  return out;
}

/// Purification with an environment register of dimension rank(rho). Pure
/// inputs get a one-dimensional environment.
template <typename Real>
BasicQuantumState<Real> purify(const BasicQuantumState<Real>& s, Real psd_tol = Real(kDefaultPsdTolerance),
                               Real rank_threshold = Real(kRankThreshold), const std::string& env_label = "E") {
  using State = BasicQuantumState<Real>;
  if (s.layout().environment()) throw LabelError("state already carries an environment register");
  if (s.is_pure()) {
    return State::pure(s.layout().with_subsystem({env_label, Role::Environment, kNoParty, 1}), s.vector());
  }
  const auto& rho = s.matrix();
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > psd_tol) {
    throw NotDensityError("cannot purify a non-Hermitian matrix");
  }
  const typename State::Matrix h = (rho + rho.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<typename State::Matrix> es(h);
  const auto& evals = es.eigenvalues();
  if (evals.minCoeff() < -psd_tol) {
    throw NotDensityError("cannot purify: minimum eigenvalue " + std::to_string(double(evals.minCoeff())) +
                          " is below -tolerance");
  }
  std::vector<Index> support;
  for (Index k = 0; k < evals.size(); ++k) {
    if (evals(k) > rank_threshold) support.push_back(k);
  }
  if (support.empty()) throw NotDensityError("cannot purify the zero matrix");
  const Index n = s.dim();
  const Index r = static_cast<Index>(support.size());
  typename State::Vector psi(n * r);
  for (Index x = 0; x < r; ++x) {
    const Index k = support[x];
    const Real w = std::sqrt(evals(k));
    for (Index i = 0; i < n; ++i) psi(i * r + x) = w * es.eigenvectors()(i, k);
  }
  return State::pure(s.layout().with_subsystem({env_label, Role::Environment, kNoParty, r}), std::move(psi));
}

/// Applies `op` (acting on the listed registers, first label most significant)
/// without any unitarity check.
template <typename Real, typename Derived>
BasicQuantumState<Real> apply_local(const BasicQuantumState<Real>& s, const Eigen::MatrixBase<Derived>& op,
                                    std::span<const std::string> on) {
  using State = BasicQuantumState<Real>;
  using Matrix = typename State::Matrix;
  const auto pos = s.layout().positions(on);
  const Index A = s.layout().dim_of(pos);
  if (op.rows() != A || op.cols() != A) {
    throw DimensionError("operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                         " but target registers have dimension " + std::to_string(A));
  }
  std::vector<std::size_t> order = pos;
  const auto rest = s.layout().complement(pos);
  order.insert(order.end(), rest.begin(), rest.end());
  const auto p = permute(s, order);
  const Index R = s.dim() / A;
  const Matrix opT = op.transpose();
  // Columns of a vector laid out as (target, rest) are R x A maps; X -> X op^T.
  auto apply_columns = [&](const Matrix& in) {
    Matrix outm(in.rows(), in.cols());
    for (Index c = 0; c < in.cols(); ++c) {
      Eigen::Map<const Matrix> x(in.col(c).data(), R, A);
      Eigen::Map<Matrix>(outm.col(c).data(), R, A) = x * opT;
    }
    return outm;
  };
  State applied;
  if (p.is_pure()) {
    typename State::Vector v = p.vector();
    Eigen::Map<Matrix> x(v.data(), R, A);
    x = (x * opT).eval();
    applied = State::pure(p.layout(), std::move(v));
  } else {
    const Matrix left = apply_columns(p.matrix());
    Matrix both = apply_columns(left.adjoint()).adjoint();
    applied = State::density(p.layout(), std::move(both));
  }
  return permute(applied, inverse_order(order));
}

template <typename Real, typename Derived>
BasicQuantumState<Real> apply_unitary(const BasicQuantumState<Real>& s, const Eigen::MatrixBase<Derived>& u,
                                      std::span<const std::string> on, Real tol = Real(kDefaultPsdTolerance)) {
  if (!is_unitary(u, tol)) throw NotUnitaryError("operator is not unitary within tolerance");
  return apply_local(s, u, on);
}

}  // namespace qcr
