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

#ifndef SEPDIST_CATALOG_HPP
#define SEPDIST_CATALOG_HPP

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sepdist/bounds.hpp"
#include "sepdist/ensemble.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

/// Strategy certified to discriminate an ensemble perfectly when viewed as
/// a two-party system along `cut`. The POVM and decoding act on the
/// regrouped ensemble.
template <typename Scalar>
struct CutStrategy {
  Bipartition cut;
  SeparablePovm<Scalar> povm;
  DecodingMap<Scalar> decoding;
};

/// A worked ensemble with its exactly-known distinguishability values
/// ("F_S" and/or "P_s"), the strategies attaining them, and the subsets
/// feeding the lower-bound machinery.
template <typename Scalar>
struct CatalogEntry {
  std::string name;
  std::string note;
  Ensemble<Scalar> ensemble;
  std::vector<std::pair<std::string, Scalar>> knownValues;
  std::vector<Strategy<Scalar>> strategies;
  std::vector<DistinguishableSubset<Scalar>> subsets;
  std::vector<CutStrategy<Scalar>> cutStrategies;

  bool subsets_all_certified() const {
    for (const auto& x : subsets)
      if (!x.certificate) return false;
    return !subsets.empty();
  }
};

namespace detail {

template <typename Scalar>
StateVector<Scalar> superpose(
    std::vector<Index> dims,
    const std::vector<std::pair<Index, Complex<Scalar>>>& terms) {
  ComplexVector<Scalar> amp = ComplexVector<Scalar>::Zero(dim_product(dims));
  for (const auto& [idx, coeff] : terms) amp(idx) = coeff;
  amp /= amp.norm();
  return StateVector<Scalar>{std::move(dims), std::move(amp)};
}

template <typename Scalar>
ComplexMatrix<Scalar> identity_basis(Index d) {
  return ComplexMatrix<Scalar>::Identity(d, d);
}

template <typename Scalar>
ComplexMatrix<Scalar> plus_minus_basis() {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  ComplexMatrix<Scalar> b(2, 2);
  b << Complex<Scalar>(r), Complex<Scalar>(r), Complex<Scalar>(r),
      Complex<Scalar>(-r);
  return b;
}

template <typename Scalar>
ComplexMatrix<Scalar> fourier_basis(Index d) {
  ComplexMatrix<Scalar> b(d, d);
  const Scalar norm = Scalar(1) / std::sqrt(static_cast<Scalar>(d));
  for (Index j = 0; j < d; ++j)
    for (Index s = 0; s < d; ++s) {
      const Scalar phase = Scalar(2) * std::numbers::pi_v<Scalar> *
                           static_cast<Scalar>(j * s) / static_cast<Scalar>(d);
      b(j, s) = norm * Complex<Scalar>(std::cos(phase), std::sin(phase));
    }
  return b;
}

/// Basis {(e0 +- e3)/sqrt2, (e1 +- e2)/sqrt2} on a 4-dimensional composite
/// party; together with a +- measurement on the remaining qubit it
/// discriminates the four GHZ states along either two-vs-one cut.
template <typename Scalar>
ComplexMatrix<Scalar> paired_parity_basis() {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  ComplexMatrix<Scalar> b = ComplexMatrix<Scalar>::Zero(4, 4);
  b(0, 0) = r; b(3, 0) = r;
  b(0, 1) = r; b(3, 1) = -r;
  b(1, 2) = r; b(2, 2) = r;
  b(1, 3) = r; b(2, 3) = -r;
  return b;
}

template <typename Scalar>
void require_nonincreasing_probs(const std::vector<Scalar>& p,
                                 const Tolerances<Scalar>& tol) {
  Scalar sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < Scalar(0))
      raise(Errc::BadProbabilities, "negative probability");
    if (i > 0 && p[i] > p[i - 1] + tol.normalization)
      raise(Errc::BadProbabilities, "probabilities must be nonincreasing");
    sum += p[i];
  }
  if (std::abs(sum - Scalar(1)) > tol.normalization)
    raise(Errc::BadProbabilities, "probabilities must sum to 1");
}

}  // namespace detail

/// The four Bell states on two qubits.
template <typename Scalar>
std::vector<StateVector<Scalar>> bell_states() {
  using detail::superpose;
  const Complex<Scalar> one(1), minus(-1);
  return {
      superpose<Scalar>({2, 2}, {{0, one}, {3, one}}),
      superpose<Scalar>({2, 2}, {{0, one}, {3, minus}}),
      superpose<Scalar>({2, 2}, {{1, one}, {2, one}}),
      superpose<Scalar>({2, 2}, {{1, one}, {2, minus}}),
  };
}

/// Bell ensemble with nonincreasing probabilities. The separable fidelity
/// equals p1 + p2, attained by the +- product basis with parity decoding;
/// certified two-element subsets feed the subset lower bound.
template <typename Scalar>
CatalogEntry<Scalar> bell_ensemble(const std::vector<Scalar>& probs,
                                   const Tolerances<Scalar>& tol = {}) {
  if (probs.size() != 4)
    raise(Errc::BadProbabilities, "bell ensemble needs 4 probabilities");
  detail::require_nonincreasing_probs(probs, tol);
  CatalogEntry<Scalar> entry;
  entry.name = "bell";
  entry.note = "four Bell states on two qubits, nonincreasing probabilities";
  entry.ensemble = make_ensemble(bell_states<Scalar>(), probs, tol);
  entry.knownValues = {{"F_S", probs[0] + probs[1]}};

  const auto pm = detail::plus_minus_basis<Scalar>();
  Strategy<Scalar> strat;
  strat.label = "plus-minus basis";
  strat.povm = make_local_basis_povm<Scalar>({pm, pm}, tol);
  strat.decoding = DecodingMap<Scalar>::members({0, 1, 1, 0});
  entry.strategies.push_back(std::move(strat));

  // Any two Bell states are distinguishable by a product basis: the +-
  // basis separates a parity pair, the computational basis a cross pair.
  const auto comp = detail::identity_basis<Scalar>(2);
  auto pmCert = [&](std::vector<Index> members) {
    DistinguishableSubset<Scalar> x;
    x.members = std::move(members);
    x.certificate = {make_local_basis_povm<Scalar>({pm, pm}, tol),
                     DecodingMap<Scalar>::members({0, 1, 1, 0})};
    return x;
  };
  auto compCert = [&](std::vector<Index> members) {
    DistinguishableSubset<Scalar> x;
    x.members = std::move(members);
    x.certificate = {make_local_basis_povm<Scalar>({comp, comp}, tol),
                     DecodingMap<Scalar>::members({0, 1, 1, 0})};
    return x;
  };
  entry.subsets.push_back(pmCert({0, 1}));
  entry.subsets.push_back(pmCert({2, 3}));
  entry.subsets.push_back(compCert({0, 2}));
  entry.subsets.push_back(compCert({0, 3}));
  entry.subsets.push_back(compCert({1, 2}));
  entry.subsets.push_back(compCert({1, 3}));
  return entry;
}

template <typename Scalar>
std::vector<StateVector<Scalar>> ghz_states() {
  using detail::superpose;
  const Complex<Scalar> one(1), minus(-1);
  return {
      superpose<Scalar>({2, 2, 2}, {{0, one}, {7, one}}),
      superpose<Scalar>({2, 2, 2}, {{0, one}, {7, minus}}),
      superpose<Scalar>({2, 2, 2}, {{3, one}, {4, one}}),
      superpose<Scalar>({2, 2, 2}, {{3, one}, {4, minus}}),
  };
}

/// Four GHZ states on three qubits. Along the one-vs-two cut isolating the
/// first qubit they behave like the four Bell states (fidelity p1 + p2);
/// along the other two cuts they are perfectly distinguishable, certified
/// here by explicit regrouped strategies.
template <typename Scalar>
CatalogEntry<Scalar> ghz_ensemble(const std::vector<Scalar>& probs,
                                  const Tolerances<Scalar>& tol = {}) {
  if (probs.size() != 4)
    raise(Errc::BadProbabilities, "ghz ensemble needs 4 probabilities");
  detail::require_nonincreasing_probs(probs, tol);
  CatalogEntry<Scalar> entry;
  entry.name = "ghz";
  entry.note = "four GHZ states on three qubits";
  entry.ensemble = make_ensemble(ghz_states<Scalar>(), probs, tol);
  entry.knownValues = {{"F_S", probs[0] + probs[1]}};

  const auto pm = detail::plus_minus_basis<Scalar>();
  Strategy<Scalar> strat;
  strat.label = "all plus-minus basis";
  strat.povm = make_local_basis_povm<Scalar>({pm, pm, pm}, tol);
  // Outcome parity selects within the first Bell-like pair.
  std::vector<Index> parity(8);
  for (Index a = 0; a < 8; ++a)
    parity[a] = (std::popcount(static_cast<unsigned>(a)) % 2 == 0) ? 0 : 1;
  strat.decoding = DecodingMap<Scalar>::members(parity);
  entry.strategies.push_back(std::move(strat));

  DistinguishableSubset<Scalar> pair01;
  pair01.members = {0, 1};
  pair01.certificate = {make_local_basis_povm<Scalar>({pm, pm, pm}, tol),
                        DecodingMap<Scalar>::members(parity)};
  entry.subsets.push_back(std::move(pair01));

  // Perfect discrimination across the cuts that keep qubit 1 or qubit 2
  // alone: +- on the lone qubit, paired parity basis on the joined pair.
  const auto paired = detail::paired_parity_basis<Scalar>();
  for (int lone : {1, 2}) {
    CutStrategy<Scalar> cs;
    cs.cut = make_bipartition(entry.ensemble.dims(), {lone});
    cs.povm = make_local_basis_povm<Scalar>({paired, pm}, tol);
    cs.decoding = DecodingMap<Scalar>::members({0, 1, 1, 0, 2, 3, 3, 2});
    entry.cutStrategies.push_back(std::move(cs));
  }
  return entry;
}

/// Orthogonal two-qubit basis alpha|00>+beta|11>, beta|00>-alpha|11>,
/// alpha|01>+beta|10>, beta|01>-alpha|10>, equiprobable. The separable
/// fidelity equals alpha^2, attained in the computational basis.
template <typename Scalar>
CatalogEntry<Scalar> tilted_bell_basis(Scalar alpha,
                                       const Tolerances<Scalar>& tol = {}) {
  const Scalar lo = Scalar(1) / std::sqrt(Scalar(2));
  if (!(alpha >= lo - tol.normalization) || !(alpha < Scalar(1)))
    raise(Errc::BadParameter, "alpha must lie in [1/sqrt2, 1)");
  const Scalar beta = std::sqrt(Scalar(1) - alpha * alpha);
  using detail::superpose;
  const Complex<Scalar> a(alpha), b(beta), na(-alpha);
  std::vector<StateVector<Scalar>> states = {
      superpose<Scalar>({2, 2}, {{0, a}, {3, b}}),
      superpose<Scalar>({2, 2}, {{0, b}, {3, na}}),
      superpose<Scalar>({2, 2}, {{1, a}, {2, b}}),
      superpose<Scalar>({2, 2}, {{1, b}, {2, na}}),
  };
  CatalogEntry<Scalar> entry;
  entry.name = "tilted";
  entry.note = "tilted Bell-type basis, equiprobable";
  entry.ensemble = make_ensemble(std::move(states),
                                 std::vector<Scalar>(4, Scalar(0.25)), tol);
  entry.knownValues = {{"F_S", alpha * alpha}};

  const auto comp = detail::identity_basis<Scalar>(2);
  Strategy<Scalar> strat;
  strat.label = "computational basis";
  strat.povm = make_local_basis_povm<Scalar>({comp, comp}, tol);
  strat.decoding = DecodingMap<Scalar>::members({0, 2, 3, 1});
  entry.strategies.push_back(std::move(strat));

  for (auto members : {std::vector<Index>{0, 2}, std::vector<Index>{0, 3},
                       std::vector<Index>{1, 2}, std::vector<Index>{1, 3}}) {
    DistinguishableSubset<Scalar> x;
    x.members = std::move(members);
    x.certificate = {make_local_basis_povm<Scalar>({comp, comp}, tol),
                     DecodingMap<Scalar>::members({0, 1, 1, 0})};
    entry.subsets.push_back(std::move(x));
  }
  return entry;
}

/// Orthogonal three-qubit basis of tilted GHZ-type pairs, equiprobable.
/// Every one-vs-two cut sees a maximum squared Schmidt coefficient of
/// alpha^2, and the computational basis attains that fidelity.
template <typename Scalar>
CatalogEntry<Scalar> three_qubit_basis(Scalar alpha,
                                       const Tolerances<Scalar>& tol = {}) {
  const Scalar lo = Scalar(1) / std::sqrt(Scalar(2));
  if (!(alpha >= lo - tol.normalization) || !(alpha < Scalar(1)))
    raise(Errc::BadParameter, "alpha must lie in [1/sqrt2, 1)");
  const Scalar beta = std::sqrt(Scalar(1) - alpha * alpha);
  using detail::superpose;
  const Complex<Scalar> a(alpha), b(beta), na(-alpha);
  const std::vector<Index> dims{2, 2, 2};
  std::vector<StateVector<Scalar>> states = {
      superpose<Scalar>(dims, {{0, a}, {7, b}}),
      superpose<Scalar>(dims, {{0, b}, {7, na}}),
      superpose<Scalar>(dims, {{1, a}, {6, b}}),
      superpose<Scalar>(dims, {{1, b}, {6, na}}),
      superpose<Scalar>(dims, {{3, a}, {4, b}}),
      superpose<Scalar>(dims, {{3, b}, {4, na}}),
      superpose<Scalar>(dims, {{2, a}, {5, b}}),
      superpose<Scalar>(dims, {{2, b}, {5, na}}),
  };
  CatalogEntry<Scalar> entry;
  entry.name = "three-qubit";
  entry.note = "tilted GHZ-type basis of three qubits, equiprobable";
  entry.ensemble = make_ensemble(std::move(states),
                                 std::vector<Scalar>(8, Scalar(0.125)), tol);
  entry.knownValues = {{"F_S", alpha * alpha}};

  const auto comp = detail::identity_basis<Scalar>(2);
  Strategy<Scalar> strat;
  strat.label = "computational basis";
  strat.povm = make_local_basis_povm<Scalar>({comp, comp, comp}, tol);
  strat.decoding =
      DecodingMap<Scalar>::members({0, 2, 6, 4, 5, 7, 3, 1});
  entry.strategies.push_back(std::move(strat));

  DistinguishableSubset<Scalar> x02;
  x02.members = {0, 2};
  x02.certificate = {make_local_basis_povm<Scalar>({comp, comp, comp}, tol),
                     DecodingMap<Scalar>::members({0, 1, 0, 0, 0, 0, 1, 0})};
  entry.subsets.push_back(std::move(x02));
  DistinguishableSubset<Scalar> x46;
  x46.members = {4, 6};
  x46.certificate = {make_local_basis_povm<Scalar>({comp, comp, comp}, tol),
                     DecodingMap<Scalar>::members({0, 0, 1, 0, 0, 1, 0, 0})};
  entry.subsets.push_back(std::move(x46));
  return entry;
}

/// Canonical maximally entangled basis of C^d (x) C^d:
/// |Psi_nm> = d^{-1/2} sum_j exp(2 pi i j n / d) |j> (x) |(j+m) mod d>,
/// returned in (n, m) lexicographic order.
template <typename Scalar>
std::vector<StateVector<Scalar>> canonical_mes_basis(Index d) {
  if (d < 2) raise(Errc::BadDimension, "need d >= 2");
  std::vector<StateVector<Scalar>> states;
  states.reserve(d * d);
  const Scalar norm = Scalar(1) / std::sqrt(static_cast<Scalar>(d));
  for (Index n = 0; n < d; ++n)
    for (Index m = 0; m < d; ++m) {
      ComplexVector<Scalar> amp = ComplexVector<Scalar>::Zero(d * d);
      for (Index j = 0; j < d; ++j) {
        const Scalar phase = Scalar(2) * std::numbers::pi_v<Scalar> *
                             static_cast<Scalar>(j * n) /
                             static_cast<Scalar>(d);
        amp(j * d + (j + m) % d) =
            norm * Complex<Scalar>(std::cos(phase), std::sin(phase));
      }
      states.push_back(StateVector<Scalar>{{d, d}, std::move(amp)});
    }
  return states;
}

template <typename Scalar>
StateVector<Scalar> canonical_mes_state(Index d, Index n, Index m) {
  if (d < 2 || n < 0 || n >= d || m < 0 || m >= d)
    raise(Errc::BadDimension, "bad canonical basis index");
  return canonical_mes_basis<Scalar>(d)[n * d + m];
}

/// N equally likely states from the canonical MES basis containing one full
/// shift class {Psi_0k ... Psi_(d-1)k}; the remaining states fill in
/// (m, n) order. The shift class is LOCC-distinguishable (declared subset),
/// and a Fourier-basis product measurement attains fidelity d/N.
template <typename Scalar>
CatalogEntry<Scalar> example5_ensemble(Index d, Index n, Index k = 0,
                                       const Tolerances<Scalar>& tol = {}) {
  if (d < 2) raise(Errc::BadDimension, "need d >= 2");
  if (k < 0 || k >= d) raise(Errc::BadParameter, "shift label k outside [0, d)");
  if (n < d || n > d * d)
    raise(Errc::BadConstruction,
          "need d <= N <= d^2 so the set contains a full shift class");
  const auto basis = canonical_mes_basis<Scalar>(d);
  std::vector<StateVector<Scalar>> states;
  for (Index j = 0; j < d; ++j) states.push_back(basis[j * d + k]);
  for (Index m = 0; m < d && static_cast<Index>(states.size()) < n; ++m) {
    if (m == k) continue;
    for (Index j = 0; j < d && static_cast<Index>(states.size()) < n; ++j)
      states.push_back(basis[j * d + m]);
  }
  CatalogEntry<Scalar> entry;
  entry.name = "example5";
  entry.note = "canonical MES basis subset containing one full shift class";
  const Scalar p = Scalar(1) / static_cast<Scalar>(n);
  entry.ensemble =
      make_ensemble(std::move(states), std::vector<Scalar>(n, p), tol);
  const Scalar dn = static_cast<Scalar>(d) / static_cast<Scalar>(n);
  entry.knownValues = {{"F_S", dn}, {"P_s", dn}};

  // Fourier x Fourier measurement: outcome (s, t) pins n = s + t mod d and
  // reveals nothing about the shift, so decoding into the shift class k is
  // optimal.
  const auto fourier = detail::fourier_basis<Scalar>(d);
  std::vector<Index> decode(d * d);
  for (Index svar = 0; svar < d; ++svar)
    for (Index t = 0; t < d; ++t) decode[svar * d + t] = (svar + t) % d;
  Strategy<Scalar> strat;
  strat.label = "fourier basis";
  strat.povm = make_local_basis_povm<Scalar>({fourier, fourier}, tol);
  strat.decoding = DecodingMap<Scalar>::members(decode);
  entry.strategies.push_back(std::move(strat));

  DistinguishableSubset<Scalar> shiftClass;
  for (Index j = 0; j < d; ++j) shiftClass.members.push_back(j);
  entry.subsets.push_back(std::move(shiftClass));  // declared, no certificate
  return entry;
}

/// Three d=3 maximally entangled states with probability p each plus the
/// product state |00> with probability q = 1 - 3p. The computational basis
/// with maximum-likelihood decoding attains success probability
/// 1 - min(p/3, q), matching the water-filling bound.
template <typename Scalar>
CatalogEntry<Scalar> example6_ensemble(Scalar p,
                                       const Tolerances<Scalar>& tol = {}) {
  if (!(p > Scalar(0)) || p > Scalar(1) / Scalar(3) + tol.normalization)
    raise(Errc::BadParameter, "p must lie in (0, 1/3]");
  const Scalar q = Scalar(1) - Scalar(3) * p;
  std::vector<StateVector<Scalar>> states = {
      canonical_mes_state<Scalar>(3, 0, 0),
      canonical_mes_state<Scalar>(3, 0, 1),
      canonical_mes_state<Scalar>(3, 0, 2),
      basis_state<Scalar>({3, 3}, 0),
  };
  CatalogEntry<Scalar> entry;
  entry.name = "example6";
  entry.note = "three MES of dimension 3 plus |00>";
  entry.ensemble =
      make_ensemble(std::move(states), std::vector<Scalar>{p, p, p, q}, tol);
  entry.knownValues = {{"P_s", Scalar(1) - std::min(p / Scalar(3), q)}};

  const auto comp = detail::identity_basis<Scalar>(3);
  std::vector<Index> decode(9);
  for (Index j = 0; j < 3; ++j)
    for (Index m = 0; m < 3; ++m) decode[j * 3 + (j + m) % 3] = m;
  // Outcome (0,0): maximum likelihood between the first MES (p/3) and the
  // product state (q); ties keep the smaller member index.
  if (q > p / Scalar(3)) decode[0] = 3;
  Strategy<Scalar> strat;
  strat.label = "computational basis";
  strat.povm = make_local_basis_povm<Scalar>({comp, comp}, tol);
  strat.decoding = DecodingMap<Scalar>::members(decode);
  entry.strategies.push_back(std::move(strat));
  return entry;
}

/// Orthonormal two-qubit set {|01>, |10>, Phi+, Phi-}, equiprobable.
/// Success probability and separable fidelity both equal 3/4.
template <typename Scalar>
CatalogEntry<Scalar> s1_set(const Tolerances<Scalar>& tol = {}) {
  using detail::superpose;
  const Complex<Scalar> one(1), minus(-1);
  std::vector<StateVector<Scalar>> states = {
      basis_state<Scalar>({2, 2}, 1),
      basis_state<Scalar>({2, 2}, 2),
      superpose<Scalar>({2, 2}, {{0, one}, {3, one}}),
      superpose<Scalar>({2, 2}, {{0, one}, {3, minus}}),
  };
  CatalogEntry<Scalar> entry;
  entry.name = "s1";
  entry.note = "orthonormal basis mixing product and Bell states";
  entry.ensemble = make_ensemble(std::move(states),
                                 std::vector<Scalar>(4, Scalar(0.25)), tol);
  entry.knownValues = {{"P_s", Scalar(0.75)}, {"F_S", Scalar(0.75)}};

  const auto comp = detail::identity_basis<Scalar>(2);
  Strategy<Scalar> strat;
  strat.label = "computational basis";
  strat.povm = make_local_basis_povm<Scalar>({comp, comp}, tol);
  strat.decoding = DecodingMap<Scalar>::members({2, 0, 1, 2});
  entry.strategies.push_back(std::move(strat));

  DistinguishableSubset<Scalar> products;
  products.members = {0, 1};
  products.certificate = {make_local_basis_povm<Scalar>({comp, comp}, tol),
                          DecodingMap<Scalar>::members({0, 0, 1, 0})};
  entry.subsets.push_back(std::move(products));
  const auto pm = detail::plus_minus_basis<Scalar>();
  DistinguishableSubset<Scalar> bells;
  bells.members = {2, 3};
  bells.certificate = {make_local_basis_povm<Scalar>({pm, pm}, tol),
                       DecodingMap<Scalar>::members({0, 1, 1, 0})};
  entry.subsets.push_back(std::move(bells));
  return entry;
}

/// Coplanar two-qubit set {|00>, |11>, Phi+, Phi-}, equiprobable: span
/// dimension 2, success probability 1/2 but separable fidelity 3/4.
template <typename Scalar>
CatalogEntry<Scalar> s2_set(const Tolerances<Scalar>& tol = {}) {
  using detail::superpose;
  const Complex<Scalar> one(1), minus(-1);
  std::vector<StateVector<Scalar>> states = {
      basis_state<Scalar>({2, 2}, 0),
      basis_state<Scalar>({2, 2}, 3),
      superpose<Scalar>({2, 2}, {{0, one}, {3, one}}),
      superpose<Scalar>({2, 2}, {{0, one}, {3, minus}}),
  };
  CatalogEntry<Scalar> entry;
  entry.name = "s2";
  entry.note = "coplanar set spanning only two dimensions";
  entry.ensemble = make_ensemble(std::move(states),
                                 std::vector<Scalar>(4, Scalar(0.25)), tol);
  entry.knownValues = {{"P_s", Scalar(0.5)}, {"F_S", Scalar(0.75)}};

  const auto comp = detail::identity_basis<Scalar>(2);
  Strategy<Scalar> strat;
  strat.label = "computational basis";
  strat.povm = make_local_basis_povm<Scalar>({comp, comp}, tol);
  strat.decoding = DecodingMap<Scalar>::members({0, 0, 0, 1});
  entry.strategies.push_back(std::move(strat));

  DistinguishableSubset<Scalar> products;
  products.members = {0, 1};
  products.certificate = {make_local_basis_povm<Scalar>({comp, comp}, tol),
                          DecodingMap<Scalar>::members({0, 0, 0, 1})};
  entry.subsets.push_back(std::move(products));
  return entry;
}

template <typename Scalar>
std::pair<CatalogEntry<Scalar>, CatalogEntry<Scalar>> s1_s2_sets(
    const Tolerances<Scalar>& tol = {}) {
  return {s1_set<Scalar>(tol), s2_set<Scalar>(tol)};
}

inline std::vector<std::string> catalog_names() {
  return {"bell",     "ghz",      "tilted", "three-qubit",
          "example5", "example6", "s1",     "s2"};
}

/// Every catalog entry at its default parameters (equiprobable cases,
/// alpha^2 = 0.64, the d=3/N=4 MES subset, p = 0.3).
template <typename Scalar>
std::vector<CatalogEntry<Scalar>> default_catalog(
    const Tolerances<Scalar>& tol = {}) {
  const std::vector<Scalar> equi4(4, Scalar(0.25));
  std::vector<CatalogEntry<Scalar>> entries;
  entries.push_back(bell_ensemble<Scalar>(equi4, tol));
  entries.push_back(ghz_ensemble<Scalar>(equi4, tol));
  entries.push_back(tilted_bell_basis<Scalar>(Scalar(0.8), tol));
  entries.push_back(three_qubit_basis<Scalar>(Scalar(0.8), tol));
  entries.push_back(example5_ensemble<Scalar>(3, 4, 0, tol));
  entries.push_back(example6_ensemble<Scalar>(Scalar(0.3), tol));
  entries.push_back(s1_set<Scalar>(tol));
  entries.push_back(s2_set<Scalar>(tol));
  return entries;
}

}  // namespace sepdist

#endif  // SEPDIST_CATALOG_HPP
