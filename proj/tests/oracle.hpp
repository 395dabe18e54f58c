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

// Test-only brute-force reimplementations of the headline formulas. They
// use plain loops over std::complex so they share no evaluation path with
// the library code they cross-check.

#ifndef SEPDIST_TESTS_ORACLE_HPP
#define SEPDIST_TESTS_ORACLE_HPP

#include <complex>
#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/measurement.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<cplx> to_raw(const sepdist::ComplexVector<double>& v) {
  return {v.data(), v.data() + v.size()};
}

inline cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx sum{0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

// Explicit kron of the per-party factors, party 0 most significant.
inline std::vector<cplx> outcome_vector(
    const sepdist::SeparableOutcome<double>& o) {
  std::vector<cplx> v{cplx{1, 0}};
  for (const auto& f : o.factors) {
    std::vector<cplx> next(v.size() * f.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (sepdist::Index j = 0; j < f.size(); ++j)
        next[i * f.size() + j] = v[i] * f(j);
    v = std::move(next);
  }
  return v;
}

inline double outcome_weight(const sepdist::SeparablePovm<double>& m,
                             std::size_t a, const std::vector<cplx>& psi) {
  const auto chi = outcome_vector(m.outcomes[a]);
  const cplx ov = inner(chi, psi);
  return m.outcomes[a].weight * std::norm(ov);
}

// Average fidelity straight from its defining double sum.
inline double average_fidelity(const sepdist::Ensemble<double>& s,
                               const sepdist::SeparablePovm<double>& m,
                               const std::vector<std::vector<cplx>>& guesses) {
  double total = 0;
  for (std::size_t a = 0; a < m.outcomes.size(); ++a)
    for (sepdist::Index i = 0; i < s.size(); ++i) {
      const auto psi = to_raw(s.states[i].amplitudes);
      total += s.probs[i] * outcome_weight(m, a, psi) *
               std::norm(inner(psi, guesses[a]));
    }
  return total;
}

inline double success_probability_ml(const sepdist::Ensemble<double>& s,
                                     const sepdist::SeparablePovm<double>& m) {
  double total = 0;
  for (std::size_t a = 0; a < m.outcomes.size(); ++a) {
    double best = 0;
    for (sepdist::Index i = 0; i < s.size(); ++i) {
      const double w =
          s.probs[i] * outcome_weight(m, a, to_raw(s.states[i].amplitudes));
      if (w > best) best = w;
    }
    total += best;
  }
  return total;
}

inline std::size_t count_bipartitions(std::size_t parties) {
  std::size_t count = 0;
  // Enumerate subsets containing party 0 with nonempty complement.
  for (std::size_t mask = 0; mask < (1u << parties); ++mask) {
    if (!(mask & 1u)) continue;
    if (mask == (1u << parties) - 1) continue;
    ++count;
  }
  return count;
}

}  // namespace oracle

#endif  // SEPDIST_TESTS_ORACLE_HPP
