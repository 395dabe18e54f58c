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

#ifndef SEPDIST_FIDELITY_HPP
#define SEPDIST_FIDELITY_HPP

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/linalg.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

/// Evaluation of one strategy on one ensemble. averageFidelity is the value
/// of the concrete decoding used, achievableFidelity the optimum over all
/// decodings for the same measurement, successProbability the
/// maximum-likelihood identification probability.
template <typename Scalar>
struct StrategyReport {
  Scalar averageFidelity = 0;
  Scalar achievableFidelity = 0;
  std::optional<Scalar> successProbability;
  bool separable = false;

  struct OutcomeGuess {
    Index outcome;
    ComplexVector<Scalar> state;
    Scalar contribution;
  };
  std::vector<OutcomeGuess> perOutcomeBestGuess;
};

namespace detail {

template <typename T>
struct is_separable_povm : std::false_type {};
template <typename S>
struct is_separable_povm<SeparablePovm<S>> : std::true_type {};

template <typename Scalar, typename PovmT>
void require_complete(const PovmT& m, const Tolerances<Scalar>& tol) {
  const Scalar residual = check_completeness(m);
  if (residual > tol.completeness)
    raise(Errc::IncompletePovm,
          "completeness residual " +
              std::to_string(static_cast<double>(residual)));
}

// q(i, a) = <psi_i|M_a|psi_i>
template <typename Scalar, typename PovmT>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> outcome_weights(
    const Ensemble<Scalar>& s, const PovmT& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> q(s.size(),
                                                          m.outcome_count());
  for (Index a = 0; a < m.outcome_count(); ++a)
    for (Index i = 0; i < s.size(); ++i)
      q(i, a) = quadratic_form(m, a, s.states[i].amplitudes);
  return q;
}

}  // namespace detail

/// Average fidelity of measuring with M and guessing via G:
/// sum_{i,a} p_i <psi_i|M_a|psi_i> |<psi_i|phi_a>|^2.
template <typename Scalar, typename PovmT>
Scalar average_fidelity(const Ensemble<Scalar>& s, const PovmT& m,
                        const DecodingMap<Scalar>& g,
                        const Tolerances<Scalar>& tol = {}) {
  detail::require_complete(m, tol);
  if (g.size() != m.outcome_count())
    raise(Errc::DecodingArityMismatch,
          "decoding arity " + std::to_string(g.size()) + " vs " +
              std::to_string(m.outcome_count()) + " outcomes");
  const auto q = detail::outcome_weights(s, m);
  std::vector<Scalar> perOutcome(m.outcome_count());
  for (Index a = 0; a < m.outcome_count(); ++a) {
    const ComplexVector<Scalar>* guess = nullptr;
    ComplexVector<Scalar> tmp;
    if (std::holds_alternative<Index>(g.guesses[a])) {
      const Index idx = std::get<Index>(g.guesses[a]);
      if (idx < 0 || idx >= s.size())
        raise(Errc::GuessNotEnsembleMember,
              "guess index " + std::to_string(idx) + " out of range");
      guess = &s.states[idx].amplitudes;
    } else {
      tmp = std::get<ComplexVector<Scalar>>(g.guesses[a]);
      guess = &tmp;
    }
    Scalar term = 0;
    for (Index i = 0; i < s.size(); ++i)
      term += s.probs[i] * q(i, a) *
              std::norm(s.states[i].amplitudes.dot(*guess));
    perOutcome[a] = term;
  }
  return pairwise_sum(perOutcome);
}

/// Achievable fidelity F(M): optimum of the average fidelity over decodings.
/// Per outcome the optimal guess is the dominant eigenvector of
/// sum_i p_i <psi_i|M_a|psi_i> |psi_i><psi_i|, and the contribution is that
/// operator's norm. Zero-probability outcomes contribute nothing and carry
/// no guess.
template <typename Scalar, typename PovmT>
StrategyReport<Scalar> achievable_fidelity(const Ensemble<Scalar>& s,
                                           const PovmT& m,
                                           const Tolerances<Scalar>& tol = {}) {
  detail::require_complete(m, tol);
  const auto q = detail::outcome_weights(s, m);
  const Index d = s.total_dim();

  StrategyReport<Scalar> report;
  report.separable = detail::is_separable_povm<PovmT>::value;
  std::vector<Scalar> perOutcome(m.outcome_count(), Scalar(0));
  std::vector<Scalar> mlTerms(m.outcome_count(), Scalar(0));
  for (Index a = 0; a < m.outcome_count(); ++a) {
    Scalar ml = 0;
    Scalar mass = 0;
    for (Index i = 0; i < s.size(); ++i) {
      const Scalar w = s.probs[i] * q(i, a);
      mass += w;
      if (w > ml) ml = w;
    }
    mlTerms[a] = ml;
    if (mass <= Scalar(0)) continue;  // outcome never fires on the ensemble
    ComplexMatrix<Scalar> omega = ComplexMatrix<Scalar>::Zero(d, d);
    for (Index i = 0; i < s.size(); ++i)
      omega += s.probs[i] * q(i, a) *
               (s.states[i].amplitudes * s.states[i].amplitudes.adjoint());
    const EigenSystem<Scalar> sys = hermitian_eigensystem(omega, tol);
    perOutcome[a] = sys.eigenvalues(0);
    report.perOutcomeBestGuess.push_back(
        {a, sys.eigenvectors.col(0), sys.eigenvalues(0)});
  }
  report.achievableFidelity = pairwise_sum(perOutcome);
  report.averageFidelity = report.achievableFidelity;
  report.successProbability = pairwise_sum(mlTerms);
  return report;
}

/// Success probability of identifying the prepared state. With no decoding
/// map, maximum-likelihood decoding is used per outcome (ties break to the
/// smallest member index); an explicit map must reference ensemble members.
template <typename Scalar, typename PovmT>
Scalar success_probability(const Ensemble<Scalar>& s, const PovmT& m,
                           const std::optional<DecodingMap<Scalar>>& g = {},
                           const Tolerances<Scalar>& tol = {}) {
  detail::require_complete(m, tol);
  const auto q = detail::outcome_weights(s, m);
  std::vector<Scalar> perOutcome(m.outcome_count(), Scalar(0));
  if (g.has_value()) {
    detail::require_member_decoding(m, *g, s.size());
    for (Index a = 0; a < m.outcome_count(); ++a) {
      const Index i = std::get<Index>(g->guesses[a]);
      perOutcome[a] = s.probs[i] * q(i, a);
    }
  } else {
    for (Index a = 0; a < m.outcome_count(); ++a) {
      Scalar best = 0;
      for (Index i = 0; i < s.size(); ++i) {
        const Scalar w = s.probs[i] * q(i, a);
        if (w > best) best = w;
      }
      perOutcome[a] = best;
    }
  }
  return pairwise_sum(perOutcome);
}

/// Maximum-likelihood decoding map induced by M on the ensemble. Outcomes
/// with no support decode to member 0 by convention (they never fire).
template <typename Scalar, typename PovmT>
DecodingMap<Scalar> ml_decoding(const Ensemble<Scalar>& s, const PovmT& m) {
  const auto q = detail::outcome_weights(s, m);
  std::vector<Index> guesses(m.outcome_count(), 0);
  for (Index a = 0; a < m.outcome_count(); ++a) {
    Scalar best = 0;
    Index arg = 0;
    for (Index i = 0; i < s.size(); ++i) {
      const Scalar w = s.probs[i] * q(i, a);
      if (w > best) {
        best = w;
        arg = i;
      }
    }
    guesses[a] = arg;
  }
  return DecodingMap<Scalar>::members(std::move(guesses));
}

template <typename Scalar>
struct OrthogonalEqualityCheck {
  Scalar successProbability;
  Scalar achievableFidelity;
  Scalar gap;
};

/// For mutually orthogonal ensembles, success probability under ML decoding
/// and achievable fidelity coincide for every measurement. Returns the two
/// values and their gap; errors out on non-orthogonal input.
template <typename Scalar, typename PovmT>
OrthogonalEqualityCheck<Scalar> verify_orthogonal_equality(
    const Ensemble<Scalar>& s, const PovmT& m,
    const Tolerances<Scalar>& tol = {}) {
  if (!is_orthogonal(s, tol))
    raise(Errc::NotOrthogonal, "ensemble is not mutually orthogonal");
  const Scalar ps =
      success_probability(s, m, std::optional<DecodingMap<Scalar>>{}, tol);
  const Scalar f = achievable_fidelity(s, m, tol).achievableFidelity;
  return {ps, f, std::abs(ps - f)};
}

}  // namespace sepdist

#endif  // SEPDIST_FIDELITY_HPP
