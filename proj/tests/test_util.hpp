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

#ifndef SEPDIST_TESTS_TEST_UTIL_HPP
#define SEPDIST_TESTS_TEST_UTIL_HPP

#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/search.hpp"
#include "sepdist/state.hpp"

namespace testutil {

using sepdist::Complex;
using sepdist::ComplexMatrix;
using sepdist::ComplexVector;
using sepdist::Index;

inline ComplexVector<double> random_vector(Index d, sepdist::Rng& rng) {
  return sepdist::detail::haar_vector<double>(d, rng);
}

inline sepdist::StateVector<double> random_state(std::vector<Index> dims,
                                                 sepdist::Rng& rng) {
  const Index d = sepdist::dim_product(dims);
  return sepdist::StateVector<double>{std::move(dims), random_vector(d, rng)};
}

inline ComplexMatrix<double> random_hermitian(Index d, sepdist::Rng& rng) {
  ComplexMatrix<double> z(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      z(i, j) = Complex<double>(rng.gaussian(), rng.gaussian());
  return (z + z.adjoint()) / 2.0;
}

inline std::vector<double> random_probs(Index n, sepdist::Rng& rng) {
  std::vector<double> p(n);
  double sum = 0;
  for (auto& x : p) {
    x = rng.uniform() + 1e-3;
    sum += x;
  }
  for (auto& x : p) x /= sum;
  return p;
}

/// Random ensemble of n mutually orthogonal states: columns of a Haar
/// unitary, random probabilities.
inline sepdist::Ensemble<double> random_orthogonal_ensemble(
    std::vector<Index> dims, Index n, sepdist::Rng& rng) {
  const Index d = sepdist::dim_product(dims);
  const ComplexMatrix<double> u = sepdist::detail::haar_unitary<double>(d, rng);
  std::vector<sepdist::StateVector<double>> states;
  for (Index i = 0; i < n; ++i)
    states.push_back(sepdist::StateVector<double>{dims, u.col(i)});
  return sepdist::make_ensemble(std::move(states), random_probs(n, rng));
}

inline sepdist::Ensemble<double> random_ensemble(std::vector<Index> dims,
                                                 Index n, sepdist::Rng& rng) {
  std::vector<sepdist::StateVector<double>> states;
  for (Index i = 0; i < n; ++i) states.push_back(random_state(dims, rng));
  return sepdist::make_ensemble(std::move(states), random_probs(n, rng));
}

}  // namespace testutil

#endif  // SEPDIST_TESTS_TEST_UTIL_HPP
