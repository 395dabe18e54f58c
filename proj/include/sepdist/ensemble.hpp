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

#ifndef SEPDIST_ENSEMBLE_HPP
#define SEPDIST_ENSEMBLE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sepdist/linalg.hpp"
#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

/// Weighted set of pure states, all on the same party structure.
/// Probabilities are validated, never renormalized.
template <typename Scalar>
struct Ensemble {
  std::vector<StateVector<Scalar>> states;
  std::vector<Scalar> probs;

  Index size() const { return static_cast<Index>(states.size()); }
  const std::vector<Index>& dims() const { return states.front().dims; }
  Index total_dim() const { return states.front().total_dim(); }
  Index party_count() const { return states.front().party_count(); }
};

template <typename Scalar>
Ensemble<Scalar> make_ensemble(std::vector<StateVector<Scalar>> states,
                               std::vector<Scalar> probs,
                               const Tolerances<Scalar>& tol = {}) {
  if (states.empty()) raise(Errc::BadState, "ensemble needs >= 1 state");
  if (states.size() != probs.size())
    raise(Errc::BadProbabilities, "state/probability count mismatch");
  Scalar sum = 0;
  for (Scalar p : probs) {
    if (p < Scalar(0))
      raise(Errc::BadProbabilities, "negative probability");
    sum += p;
  }
  if (std::abs(sum - Scalar(1)) > tol.normalization)
    raise(Errc::BadProbabilities,
          "probabilities sum to " + std::to_string(static_cast<double>(sum)));
  const auto& dims0 = states.front().dims;
  for (const auto& s : states) {
    if (!same_dims(s.dims, dims0))
      raise(Errc::DimsMismatch, "ensemble states disagree on dims");
    if (std::abs(s.amplitudes.norm() - Scalar(1)) > tol.normalization)
      raise(Errc::BadState, "unnormalized ensemble state");
  }
  return Ensemble<Scalar>{std::move(states), std::move(probs)};
}

template <typename Scalar>
bool has_zero_prob_states(const Ensemble<Scalar>& s) {
  for (Scalar p : s.probs)
    if (p == Scalar(0)) return true;
  return false;
}

template <typename Scalar>
bool is_equiprobable(const Ensemble<Scalar>& s,
                     const Tolerances<Scalar>& tol = {}) {
  const Scalar uniform = Scalar(1) / static_cast<Scalar>(s.size());
  for (Scalar p : s.probs)
    if (std::abs(p - uniform) > tol.normalization) return false;
  return true;
}

/// Gram matrix G[i][j] = <psi_i|psi_j>.
template <typename Scalar>
ComplexMatrix<Scalar> gram_matrix(const Ensemble<Scalar>& s) {
  const Index n = s.size();
  ComplexMatrix<Scalar> g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      g(i, j) = s.states[i].amplitudes.dot(s.states[j].amplitudes);
  return g;
}

template <typename Scalar>
bool is_orthogonal(const Ensemble<Scalar>& s,
                   const Tolerances<Scalar>& tol = {}) {
  const ComplexMatrix<Scalar> g = gram_matrix(s);
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (i != j && std::abs(g(i, j)) > tol.orthogonality) return false;
  return true;
}

/// Dimension of the linear span of the states (zero-probability members
/// included): rank of the Gram matrix.
template <typename Scalar>
Index span_rank(const Ensemble<Scalar>& s, const Tolerances<Scalar>& tol = {}) {
  const RealVector<Scalar> ev = hermitian_eigenvalues(gram_matrix(s), tol);
  Index rank = 0;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) > tol.rank) ++rank;
  return rank;
}

/// Average state sum_i p_i |psi_i><psi_i|.
template <typename Scalar>
ComplexMatrix<Scalar> rho(const Ensemble<Scalar>& s) {
  const Index d = s.total_dim();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(d, d);
  for (Index i = 0; i < s.size(); ++i)
    out += s.probs[i] * (s.states[i].amplitudes *
                         s.states[i].amplitudes.adjoint());
  return out;
}

/// Doubled-space operator sum_i p_i |psi_i><psi_i| (x) |psi_i><psi_i|.
template <typename Scalar>
ComplexMatrix<Scalar> rho_prime(const Ensemble<Scalar>& s) {
  const Index d = s.total_dim();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(d * d, d * d);
  for (Index i = 0; i < s.size(); ++i) {
    const ComplexMatrix<Scalar> p =
        s.states[i].amplitudes * s.states[i].amplitudes.adjoint();
    out += s.probs[i] * kron(p, p);
  }
  return out;
}

/// Schmidt-weighted average sum_i p_i lambda_i |psi_i><psi_i|, with
/// lambda_i the largest squared Schmidt coefficient across the cut.
template <typename Scalar>
ComplexMatrix<Scalar> lambda_operator(const Ensemble<Scalar>& s,
                                      const Bipartition& cut) {
  check_cut(s.dims(), cut);
  const Index d = s.total_dim();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(d, d);
  for (Index i = 0; i < s.size(); ++i) {
    const Scalar lam = max_schmidt_sq(s.states[i], cut);
    out += s.probs[i] * lam *
           (s.states[i].amplitudes * s.states[i].amplitudes.adjoint());
  }
  return out;
}

/// All 2^(k-1) - 1 unordered splits of k parties.
inline std::vector<Bipartition> all_bipartitions(
    const std::vector<Index>& dims) {
  const int k = static_cast<int>(dims.size());
  if (k < 2)
    raise(Errc::SinglePartySystem, "need >= 2 parties for bipartitions");
  std::vector<Bipartition> cuts;
  // Party 0 stays on the left; enumerate subsets of the remaining parties.
  const unsigned subsets = 1u << (k - 1);
  for (unsigned mask = 0; mask + 1 < subsets; ++mask) {
    std::vector<int> left{0};
    for (int p = 1; p < k; ++p)
      if (mask & (1u << (p - 1))) left.push_back(p);
    cuts.push_back(make_bipartition(dims, left));
  }
  return cuts;
}

template <typename Scalar>
struct EnsembleProfile {
  RealVector<Scalar> lambdas;  // max squared Schmidt coefficient per state
  bool orthogonal = false;
  Index spanRank = 0;
};

template <typename Scalar>
EnsembleProfile<Scalar> ensemble_profile(const Ensemble<Scalar>& s,
                                         const Bipartition& cut,
                                         const Tolerances<Scalar>& tol = {}) {
  EnsembleProfile<Scalar> prof;
  prof.lambdas.resize(s.size());
  for (Index i = 0; i < s.size(); ++i)
    prof.lambdas(i) = max_schmidt_sq(s.states[i], cut);
  prof.orthogonal = is_orthogonal(s, tol);
  prof.spanRank = span_rank(s, tol);
  return prof;
}

/// Two-party view of the ensemble along a cut (amplitudes permuted).
template <typename Scalar>
Ensemble<Scalar> regroup_ensemble(const Ensemble<Scalar>& s,
                                  const Bipartition& cut) {
  std::vector<StateVector<Scalar>> regrouped;
  regrouped.reserve(s.states.size());
  for (const auto& psi : s.states) regrouped.push_back(regroup_state(psi, cut));
  return Ensemble<Scalar>{std::move(regrouped), s.probs};
}

/// Ranks of the reduced states on the two sides of the cut, computed from
/// positive-probability members only. These are the effective local
/// dimensions a separable measurement can spend weight on.
template <typename Scalar>
std::pair<Index, Index> local_support_ranks(const Ensemble<Scalar>& s,
                                            const Bipartition& cut,
                                            const Tolerances<Scalar>& tol = {}) {
  check_cut(s.dims(), cut);
  ComplexMatrix<Scalar> rhoLeft =
      ComplexMatrix<Scalar>::Zero(cut.leftDim, cut.leftDim);
  ComplexMatrix<Scalar> rhoRight =
      ComplexMatrix<Scalar>::Zero(cut.rightDim, cut.rightDim);
  for (Index i = 0; i < s.size(); ++i) {
    if (s.probs[i] <= Scalar(0)) continue;
    const ComplexMatrix<Scalar> a = reshape_for_cut(s.states[i], cut);
    rhoLeft += s.probs[i] * (a * a.adjoint());
    rhoRight += s.probs[i] * (a.adjoint() * a).conjugate();
  }
  auto rank_of = [&](const ComplexMatrix<Scalar>& m) {
    const RealVector<Scalar> ev = hermitian_eigenvalues(m, tol);
    Index r = 0;
    for (Index i = 0; i < ev.size(); ++i)
      if (ev(i) > tol.rank) ++r;
    return r;
  };
  return {rank_of(rhoLeft), rank_of(rhoRight)};
}

}  // namespace sepdist

#endif  // SEPDIST_ENSEMBLE_HPP
