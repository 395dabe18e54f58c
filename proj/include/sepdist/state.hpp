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

#ifndef SEPDIST_STATE_HPP
#define SEPDIST_STATE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sepdist/types.hpp"

namespace sepdist {

/// Pure state of a multipartite system. Amplitudes are stored in the
/// computational basis, lexicographically ordered with party 0 as the most
/// significant digit.
template <typename Scalar>
struct StateVector {
  std::vector<Index> dims;
  ComplexVector<Scalar> amplitudes;

  Index total_dim() const { return amplitudes.size(); }
  Index party_count() const { return static_cast<Index>(dims.size()); }
};

inline Index dim_product(const std::vector<Index>& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index(1),
                         std::multiplies<Index>());
}

inline bool same_dims(const std::vector<Index>& a,
                      const std::vector<Index>& b) {
  return a == b;
}

template <typename Scalar>
StateVector<Scalar> make_state_vector(std::vector<Index> dims,
                                      ComplexVector<Scalar> amplitudes,
                                      const Tolerances<Scalar>& tol = {}) {
  if (dims.empty()) raise(Errc::BadState, "state needs at least one party");
  for (Index d : dims)
    if (d < 2)
      raise(Errc::BadState,
            "party dimension " + std::to_string(d) + " < 2");
  if (amplitudes.size() != dim_product(dims))
    raise(Errc::BadState, "amplitude count " +
                              std::to_string(amplitudes.size()) +
                              " does not match dims product " +
                              std::to_string(dim_product(dims)));
  const Scalar norm = amplitudes.norm();
  if (std::abs(norm - Scalar(1)) > tol.normalization)
    raise(Errc::BadState,
          "state norm " + std::to_string(static_cast<double>(norm)) +
              " deviates from 1 beyond tolerance");
  return StateVector<Scalar>{std::move(dims), std::move(amplitudes)};
}

/// Computational basis state |index> on the given party dimensions.
template <typename Scalar>
StateVector<Scalar> basis_state(std::vector<Index> dims, Index index) {
  ComplexVector<Scalar> amp = ComplexVector<Scalar>::Zero(dim_product(dims));
  amp(index) = Complex<Scalar>(1, 0);
  return StateVector<Scalar>{std::move(dims), std::move(amp)};
}

template <typename Scalar>
ComplexVector<Scalar> kron(const ComplexVector<Scalar>& a,
                           const ComplexVector<Scalar>& b) {
  ComplexVector<Scalar> out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

/// Assemble the product vector of one factor per party, party 0 first.
template <typename Scalar>
ComplexVector<Scalar> product_vector(
    const std::vector<ComplexVector<Scalar>>& factors) {
  ComplexVector<Scalar> out = ComplexVector<Scalar>::Ones(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

/// Split of the party set into two nonempty groups. `left` always contains
/// party 0, so unordered splits have a unique representative. The reduced
/// dimensions d1 <= d2 are what the bipartite bound formulas consume;
/// left_dim/right_dim keep the actual side association for reshaping.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
  Index leftDim = 0;
  Index rightDim = 0;

  Index d1() const { return std::min(leftDim, rightDim); }
  Index d2() const { return std::max(leftDim, rightDim); }

  std::string label() const {
    std::string s;
    for (int p : left) s += std::to_string(p);
    s += "|";
    for (int p : right) s += std::to_string(p);
    return s;
  }
};

inline Bipartition make_bipartition(const std::vector<Index>& dims,
                                    std::vector<int> leftParties) {
  const int k = static_cast<int>(dims.size());
  if (k < 2) raise(Errc::SinglePartySystem, "bipartition needs >= 2 parties");
  std::set<int> leftSet(leftParties.begin(), leftParties.end());
  if (leftSet.size() != leftParties.size())
    raise(Errc::InvalidBipartition, "duplicate party index");
  if (leftSet.empty() || static_cast<int>(leftSet.size()) == k)
    raise(Errc::InvalidBipartition, "both sides must be nonempty");
  for (int p : leftSet)
    if (p < 0 || p >= k)
      raise(Errc::InvalidBipartition,
            "party index " + std::to_string(p) + " out of range");
  // Canonical representative: the side containing party 0 is "left".
  std::vector<int> left, right;
  const bool zeroLeft = leftSet.count(0) > 0;
  for (int p = 0; p < k; ++p) {
    const bool inGiven = leftSet.count(p) > 0;
    if (inGiven == zeroLeft)
      left.push_back(p);
    else
      right.push_back(p);
  }
  Bipartition cut;
  cut.left = std::move(left);
  cut.right = std::move(right);
  cut.leftDim = 1;
  cut.rightDim = 1;
  for (int p : cut.left) cut.leftDim *= dims[p];
  for (int p : cut.right) cut.rightDim *= dims[p];
  return cut;
}

inline void check_cut(const std::vector<Index>& dims, const Bipartition& cut) {
  const int k = static_cast<int>(dims.size());
  if (cut.left.empty() || cut.right.empty())
    raise(Errc::InvalidBipartition, "both sides must be nonempty");
  std::set<int> seen;
  Index ld = 1, rd = 1;
  for (int p : cut.left) {
    if (p < 0 || p >= k || !seen.insert(p).second)
      raise(Errc::InvalidBipartition, "bad left party set");
    ld *= dims[p];
  }
  for (int p : cut.right) {
    if (p < 0 || p >= k || !seen.insert(p).second)
      raise(Errc::InvalidBipartition, "bad right party set");
    rd *= dims[p];
  }
  if (static_cast<int>(seen.size()) != k)
    raise(Errc::InvalidBipartition, "cut does not cover all parties");
  if (ld != cut.leftDim || rd != cut.rightDim)
    raise(Errc::InvalidBipartition, "cut dims do not match system dims");
}

namespace detail {

/// Map from a full computational index to the (row, col) pair of the
/// cut-reshaped amplitude matrix. Rows enumerate the left parties'
/// sub-indices lexicographically (ascending party order), columns the right.
inline std::pair<Index, Index> cut_coords(Index n,
                                          const std::vector<Index>& dims,
                                          const Bipartition& cut) {
  const int k = static_cast<int>(dims.size());
  std::vector<Index> digit(k);
  for (int p = k - 1; p >= 0; --p) {
    digit[p] = n % dims[p];
    n /= dims[p];
  }
  Index l = 0, r = 0;
  for (int p : cut.left) l = l * dims[p] + digit[p];
  for (int p : cut.right) r = r * dims[p] + digit[p];
  return {l, r};
}

}  // namespace detail

/// Reshape a state's amplitudes into the leftDim x rightDim matrix of the
/// given cut. Singular values of this matrix are the Schmidt coefficients.
template <typename Scalar>
ComplexMatrix<Scalar> reshape_for_cut(const StateVector<Scalar>& psi,
                                      const Bipartition& cut) {
  check_cut(psi.dims, cut);
  ComplexMatrix<Scalar> m(cut.leftDim, cut.rightDim);
  for (Index n = 0; n < psi.total_dim(); ++n) {
    auto [l, r] = detail::cut_coords(n, psi.dims, cut);
    m(l, r) = psi.amplitudes(n);
  }
  return m;
}

/// View the same state as a two-party system (left group, right group).
/// Amplitudes are permuted accordingly; no physical change.
template <typename Scalar>
StateVector<Scalar> regroup_state(const StateVector<Scalar>& psi,
                                  const Bipartition& cut) {
  ComplexMatrix<Scalar> m = reshape_for_cut(psi, cut);
  ComplexVector<Scalar> amp(m.size());
  for (Index l = 0; l < m.rows(); ++l)
    for (Index r = 0; r < m.cols(); ++r) amp(l * m.cols() + r) = m(l, r);
  return StateVector<Scalar>{{cut.leftDim, cut.rightDim}, std::move(amp)};
}

/// Inverse of the cut reshape: assemble full amplitudes from a left x right
/// coefficient matrix.
template <typename Scalar>
StateVector<Scalar> unreshape_from_cut(const ComplexMatrix<Scalar>& m,
                                       const std::vector<Index>& dims,
                                       const Bipartition& cut) {
  ComplexVector<Scalar> amp(dim_product(dims));
  for (Index n = 0; n < amp.size(); ++n) {
    auto [l, r] = detail::cut_coords(n, dims, cut);
    amp(n) = m(l, r);
  }
  return StateVector<Scalar>{dims, std::move(amp)};
}

}  // namespace sepdist

#endif  // SEPDIST_STATE_HPP
