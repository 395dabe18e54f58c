// Copyright 2026 The sepdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPDIST_LINALG_HPP
#define SEPDIST_LINALG_HPP

#include <string>
#include <utility>

#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

namespace detail {

template <typename Scalar>
void require_square(const ComplexMatrix<Scalar>& a) {
  if (a.rows() != a.cols())
    raise(Errc::NonSquare, std::to_string(a.rows()) + "x" +
                               std::to_string(a.cols()) +
                               " matrix is not square");
}

template <typename Scalar>
void require_hermitian(const ComplexMatrix<Scalar>& a, Scalar tol) {
  require_square(a);
  const Scalar dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    raise(Errc::NonHermitian,
          "max|A - A^dag| = " + std::to_string(static_cast<double>(dev)));
}

// Symmetrize before handing to the solver so that sub-tolerance asymmetry
// cannot leak into the spectrum.
template <typename Scalar>
ComplexMatrix<Scalar> symmetrized(const ComplexMatrix<Scalar>& a) {
  return (a + a.adjoint()) / Scalar(2);
}

}  // namespace detail

template <typename Scalar>
struct EigenSystem {
  RealVector<Scalar> eigenvalues;    // nonincreasing
  ComplexMatrix<Scalar> eigenvectors;  // columns, orthonormal
};

/// Full eigensystem of a Hermitian matrix, eigenvalues sorted nonincreasing.
/// Within a degenerate cluster the eigenvector choice is solver-defined;
/// consumers must compare projectors, not individual vectors.
template <typename Scalar>
EigenSystem<Scalar> hermitian_eigensystem(const ComplexMatrix<Scalar>& a,
                                          const Tolerances<Scalar>& tol = {}) {
  detail::require_hermitian(a, tol.hermiticity);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(
      detail::symmetrized(a));
  const Index n = a.rows();
  EigenSystem<Scalar> sys;
  sys.eigenvalues = solver.eigenvalues().reverse();
  sys.eigenvectors.resize(n, n);
  for (Index j = 0; j < n; ++j)
    sys.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  return sys;
}

template <typename Scalar>
RealVector<Scalar> hermitian_eigenvalues(const ComplexMatrix<Scalar>& a,
                                         const Tolerances<Scalar>& tol = {}) {
  detail::require_hermitian(a, tol.hermiticity);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(
      detail::symmetrized(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

/// Largest eigenvalue of a Hermitian PSD matrix (clamped at zero).
template <typename Scalar>
Scalar operator_norm(const ComplexMatrix<Scalar>& a,
                     const Tolerances<Scalar>& tol = {}) {
  const RealVector<Scalar> ev = hermitian_eigenvalues(a, tol);
  return std::max(ev(0), Scalar(0));
}

/// Largest |eigenvalue| of a Hermitian matrix; used for residual norms of
/// operators that are not sign-definite.
template <typename Scalar>
Scalar spectral_norm(const ComplexMatrix<Scalar>& a,
                     const Tolerances<Scalar>& tol = {}) {
  const RealVector<Scalar> ev = hermitian_eigenvalues(a, tol);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

/// Ky Fan norm of order r for Hermitian PSD input: sum of the r largest
/// eigenvalues.
template <typename Scalar>
Scalar ky_fan_norm(const ComplexMatrix<Scalar>& a, Index r,
                   const Tolerances<Scalar>& tol = {}) {
  detail::require_square(a);
  if (r < 1 || r > a.rows())
    raise(Errc::RankOutOfRange,
          "order " + std::to_string(r) + " outside [1, " +
              std::to_string(a.rows()) + "]");
  const RealVector<Scalar> ev = hermitian_eigenvalues(a, tol);
  return ev.head(r).sum();
}

template <typename Scalar>
ComplexMatrix<Scalar> kron(const ComplexMatrix<Scalar>& a,
                           const ComplexMatrix<Scalar>& b) {
  ComplexMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Schmidt data of a pure state across one cut. `coefficients` are the
/// Schmidt coefficients themselves (square roots of the reduced-state
/// eigenvalues), sorted nonincreasing; columns of leftVectors/rightVectors
/// are the matching orthonormal local vectors, including deterministic
/// completions for zero coefficients.
template <typename Scalar>
struct SchmidtData {
  RealVector<Scalar> coefficients;
  ComplexMatrix<Scalar> leftVectors;
  ComplexMatrix<Scalar> rightVectors;

  Index count() const { return coefficients.size(); }
  Scalar lambda(Index j) const { return coefficients(j) * coefficients(j); }
};

template <typename Scalar>
SchmidtData<Scalar> schmidt_decompose(const StateVector<Scalar>& psi,
                                      const Bipartition& cut) {
  const ComplexMatrix<Scalar> m = reshape_for_cut(psi, cut);
  Eigen::JacobiSVD<ComplexMatrix<Scalar>> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtData<Scalar> sd;
  sd.coefficients = svd.singularValues();
  sd.leftVectors = svd.matrixU();
  // psi = sum_j s_j |u_j>|conj(v_j)> since m = U S V^dag.
  sd.rightVectors = svd.matrixV().conjugate();
  return sd;
}

/// Largest squared Schmidt coefficient of the state across the cut. This is
/// the exact maximum of |<chi|psi>|^2 over normalized product vectors chi.
template <typename Scalar>
Scalar max_schmidt_sq(const StateVector<Scalar>& psi, const Bipartition& cut) {
  const ComplexMatrix<Scalar> m = reshape_for_cut(psi, cut);
  Eigen::JacobiSVD<ComplexMatrix<Scalar>> svd(m);
  const Scalar s = svd.singularValues()(0);
  return s * s;
}

/// Rebuild the full state from Schmidt data; inverse of schmidt_decompose up
/// to numerical error.
template <typename Scalar>
StateVector<Scalar> schmidt_reconstruct(const SchmidtData<Scalar>& sd,
                                        const std::vector<Index>& dims,
                                        const Bipartition& cut) {
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(
      sd.leftVectors.rows(), sd.rightVectors.rows());
  for (Index j = 0; j < sd.count(); ++j)
    m += sd.coefficients(j) * sd.leftVectors.col(j) *
         sd.rightVectors.col(j).transpose();
  return unreshape_from_cut(m, dims, cut);
}

}  // namespace sepdist

#endif  // SEPDIST_LINALG_HPP
