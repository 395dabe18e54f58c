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

#ifndef SEPDIST_MEASUREMENT_HPP
#define SEPDIST_MEASUREMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/linalg.hpp"
#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

/// One rank-one separable POVM element m_a |chi_a><chi_a| given by its
/// weight and one normalized factor per party. Weights are validated as
/// positive only; basis refinements may exceed 1.
template <typename Scalar>
struct SeparableOutcome {
  Scalar weight = Scalar(1);
  std::vector<ComplexVector<Scalar>> factors;

  ComplexVector<Scalar> product_state() const {
    return product_vector(factors);
  }
};

template <typename Scalar>
struct SeparablePovm {
  std::vector<Index> dims;
  std::vector<SeparableOutcome<Scalar>> outcomes;

  Index outcome_count() const { return static_cast<Index>(outcomes.size()); }
  Index total_dim() const { return dim_product(dims); }

  ComplexMatrix<Scalar> element(Index a) const {
    const ComplexVector<Scalar> chi = outcomes[a].product_state();
    return outcomes[a].weight * (chi * chi.adjoint());
  }
};

/// POVM given directly by PSD elements; separability not asserted. Used for
/// global baselines and the orthogonal-set equality check.
template <typename Scalar>
struct GeneralPovm {
  std::vector<ComplexMatrix<Scalar>> elements;

  Index outcome_count() const { return static_cast<Index>(elements.size()); }
  Index total_dim() const { return elements.front().rows(); }

  const ComplexMatrix<Scalar>& element(Index a) const { return elements[a]; }
};

template <typename Scalar>
ComplexMatrix<Scalar> povm_sum(const SeparablePovm<Scalar>& m) {
  const Index d = m.total_dim();
  ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(d, d);
  for (Index a = 0; a < m.outcome_count(); ++a) sum += m.element(a);
  return sum;
}

template <typename Scalar>
ComplexMatrix<Scalar> povm_sum(const GeneralPovm<Scalar>& m) {
  const Index d = m.total_dim();
  ComplexMatrix<Scalar> sum = ComplexMatrix<Scalar>::Zero(d, d);
  for (const auto& e : m.elements) sum += e;
  return sum;
}

/// Completeness residual ||sum_a M_a - I||_inf. Diagnostic: never throws.
template <typename PovmT>
auto check_completeness(const PovmT& m) {
  using Scalar = decltype(m.element(0)(0, 0).real());
  const Index d = m.total_dim();
  ComplexMatrix<Scalar> res =
      povm_sum(m) - ComplexMatrix<Scalar>::Identity(d, d);
  return spectral_norm(res);
}

template <typename Scalar>
SeparablePovm<Scalar> make_separable_povm(
    std::vector<Index> dims, std::vector<SeparableOutcome<Scalar>> outcomes,
    const Tolerances<Scalar>& tol = {}) {
  if (outcomes.empty()) raise(Errc::IncompletePovm, "no outcomes");
  Scalar weightSum = 0;
  for (const auto& o : outcomes) {
    if (!(o.weight > Scalar(0)))
      raise(Errc::BadParameter, "outcome weight must be > 0");
    if (o.factors.size() != dims.size())
      raise(Errc::DimsMismatch, "outcome factor count != party count");
    for (std::size_t p = 0; p < dims.size(); ++p) {
      if (o.factors[p].size() != dims[p])
        raise(Errc::DimsMismatch, "factor dimension mismatch");
      if (std::abs(o.factors[p].norm() - Scalar(1)) > tol.normalization)
        raise(Errc::BadState, "unnormalized outcome factor");
    }
    weightSum += o.weight;
  }
  SeparablePovm<Scalar> m{std::move(dims), std::move(outcomes)};
  if (std::abs(weightSum - static_cast<Scalar>(m.total_dim())) >
      tol.completeness * static_cast<Scalar>(m.total_dim()))
    raise(Errc::IncompletePovm,
          "weights sum to " + std::to_string(static_cast<double>(weightSum)) +
              ", expected " + std::to_string(m.total_dim()));
  const Scalar residual = check_completeness(m);
  if (residual > tol.completeness)
    raise(Errc::IncompletePovm,
          "completeness residual " +
              std::to_string(static_cast<double>(residual)));
  return m;
}

template <typename Scalar>
GeneralPovm<Scalar> make_general_povm(
    std::vector<ComplexMatrix<Scalar>> elements,
    const Tolerances<Scalar>& tol = {}) {
  if (elements.empty()) raise(Errc::IncompletePovm, "no elements");
  const Index d = elements.front().rows();
  for (const auto& e : elements) {
    detail::require_hermitian(e, tol.hermiticity);
    if (e.rows() != d) raise(Errc::DimsMismatch, "element dimension mismatch");
    const RealVector<Scalar> ev = hermitian_eigenvalues(e, tol);
    if (ev(ev.size() - 1) < -tol.normalization)
      raise(Errc::BadParameter, "element is not PSD");
  }
  GeneralPovm<Scalar> m{std::move(elements)};
  const Scalar residual = check_completeness(m);
  if (residual > tol.completeness)
    raise(Errc::IncompletePovm,
          "completeness residual " +
              std::to_string(static_cast<double>(residual)));
  return m;
}

/// Projective measurement onto the product of one orthonormal basis per
/// party (columns of each matrix). Outcomes are ordered lexicographically,
/// party 0 most significant, so outcome a projects onto the product of
/// columns matching the digits of a.
template <typename Scalar>
SeparablePovm<Scalar> make_local_basis_povm(
    const std::vector<ComplexMatrix<Scalar>>& bases,
    const Tolerances<Scalar>& tol = {}) {
  if (bases.empty()) raise(Errc::IncompleteBasis, "no party bases");
  std::vector<Index> dims;
  for (const auto& b : bases) {
    if (b.rows() != b.cols())
      raise(Errc::IncompleteBasis, "party basis is not square");
    const Scalar dev =
        (b.adjoint() * b -
         ComplexMatrix<Scalar>::Identity(b.cols(), b.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (dev > tol.completeness)
      raise(Errc::IncompleteBasis, "party basis is not orthonormal");
    dims.push_back(b.rows());
  }
  const Index total = dim_product(dims);
  std::vector<SeparableOutcome<Scalar>> outcomes(total);
  for (Index a = 0; a < total; ++a) {
    Index rest = a;
    std::vector<ComplexVector<Scalar>> factors(bases.size());
    for (int p = static_cast<int>(bases.size()) - 1; p >= 0; --p) {
      factors[p] = bases[p].col(rest % dims[p]);
      rest /= dims[p];
    }
    outcomes[a] = SeparableOutcome<Scalar>{Scalar(1), std::move(factors)};
  }
  return SeparablePovm<Scalar>{std::move(dims), std::move(outcomes)};
}

/// Outcome-to-guess assignment. A guess is either an ensemble member index
/// (needed for success probability and perfect-discrimination checks) or a
/// free-form state.
template <typename Scalar>
struct DecodingMap {
  using Guess = std::variant<Index, ComplexVector<Scalar>>;
  std::vector<Guess> guesses;

  Index size() const { return static_cast<Index>(guesses.size()); }

  bool all_members() const {
    for (const auto& g : guesses)
      if (!std::holds_alternative<Index>(g)) return false;
    return true;
  }

  static DecodingMap members(std::vector<Index> indices) {
    DecodingMap g;
    for (Index i : indices) g.guesses.emplace_back(i);
    return g;
  }

  static DecodingMap states(std::vector<ComplexVector<Scalar>> vecs) {
    DecodingMap g;
    for (auto& v : vecs) g.guesses.emplace_back(std::move(v));
    return g;
  }
};

/// Probability weight <psi|M_a|psi> of outcome a on state psi.
template <typename Scalar>
Scalar quadratic_form(const SeparablePovm<Scalar>& m, Index a,
                      const ComplexVector<Scalar>& psi) {
  const Complex<Scalar> ov = m.outcomes[a].product_state().dot(psi);
  return m.outcomes[a].weight * std::norm(ov);
}

template <typename Scalar>
Scalar quadratic_form(const GeneralPovm<Scalar>& m, Index a,
                      const ComplexVector<Scalar>& psi) {
  return (psi.adjoint() * m.elements[a] * psi)(0, 0).real();
}

namespace detail {

// ensembleSize < 0 skips the range check (grouped_element has no ensemble).
template <typename Scalar, typename PovmT>
void require_member_decoding(const PovmT& m, const DecodingMap<Scalar>& g,
                             Index ensembleSize) {
  if (g.size() != m.outcome_count())
    raise(Errc::DecodingArityMismatch,
          "decoding has " + std::to_string(g.size()) + " guesses for " +
              std::to_string(m.outcome_count()) + " outcomes");
  for (const auto& guess : g.guesses) {
    if (!std::holds_alternative<Index>(guess))
      raise(Errc::GuessNotEnsembleMember,
            "decoding uses free-form guess states");
    const Index i = std::get<Index>(guess);
    if (i < 0 || (ensembleSize >= 0 && i >= ensembleSize))
      raise(Errc::GuessNotEnsembleMember,
            "guess index " + std::to_string(i) + " out of range");
  }
}

}  // namespace detail

/// Grouped element M(i) = sum over outcomes decoded to member i.
template <typename Scalar>
ComplexMatrix<Scalar> grouped_element(const SeparablePovm<Scalar>& m,
                                      const DecodingMap<Scalar>& g, Index i) {
  detail::require_member_decoding(m, g, Index(-1));
  const Index d = m.total_dim();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(d, d);
  for (Index a = 0; a < m.outcome_count(); ++a)
    if (std::get<Index>(g.guesses[a]) == i) out += m.element(a);
  return out;
}

/// Necessary-and-sufficient test for perfect distinguishability with the
/// given strategy: <psi_j|M(i)|psi_j> must form the identity table.
template <typename Scalar, typename PovmT>
bool check_perfect_discrimination(const Ensemble<Scalar>& s, const PovmT& m,
                                  const DecodingMap<Scalar>& g,
                                  const Tolerances<Scalar>& tol = {}) {
  detail::require_member_decoding(m, g, s.size());
  const Index n = s.size();
  // table(i, j) = <psi_j|M(i)|psi_j>, accumulated from quadratic forms.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> table =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Index a = 0; a < m.outcome_count(); ++a) {
    const Index i = std::get<Index>(g.guesses[a]);
    for (Index j = 0; j < n; ++j)
      table(i, j) += quadratic_form(m, a, s.states[j].amplitudes);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Scalar target = (i == j) ? Scalar(1) : Scalar(0);
      if (std::abs(table(i, j) - target) > tol.completeness) return false;
    }
  return true;
}

}  // namespace sepdist

#endif  // SEPDIST_MEASUREMENT_HPP
