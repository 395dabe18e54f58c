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

#ifndef SEPDIST_BOUNDS_HPP
#define SEPDIST_BOUNDS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/fidelity.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

enum class BoundSide { Lower, Upper };
enum class BoundScope { Separable, Global };
enum class BoundMode { Strict, Declared };
enum class BoundQuantity { Fidelity, Success };

inline const char* to_string(BoundSide v) {
  return v == BoundSide::Lower ? "lower" : "upper";
}
inline const char* to_string(BoundScope v) {
  return v == BoundScope::Separable ? "separable" : "global";
}
inline const char* to_string(BoundMode v) {
  return v == BoundMode::Strict ? "strict" : "declared";
}
inline const char* to_string(BoundQuantity v) {
  return v == BoundQuantity::Fidelity ? "fidelity" : "success";
}

/// One named bound. `raw` is the formula value; `capped` clips at 1 and
/// `informative` records whether the raw value says anything at all.
/// Separable-scope bounds constrain separable strategies only; global ones
/// hold for any measurement.
template <typename Scalar>
struct BoundValue {
  std::string name;
  BoundSide side = BoundSide::Upper;
  BoundScope scope = BoundScope::Separable;
  BoundMode mode = BoundMode::Strict;
  BoundQuantity quantity = BoundQuantity::Fidelity;
  Scalar raw = 0;
  Scalar capped = 0;
  bool informative = true;
  std::optional<Bipartition> cut;
};

namespace detail {

template <typename Scalar>
BoundValue<Scalar> make_bound(std::string name, BoundSide side,
                              BoundScope scope, BoundMode mode,
                              BoundQuantity quantity, Scalar raw,
                              std::optional<Bipartition> cut = {}) {
  BoundValue<Scalar> b;
  b.name = std::move(name);
  b.side = side;
  b.scope = scope;
  b.mode = mode;
  b.quantity = quantity;
  b.raw = raw;
  b.capped = std::min(raw, Scalar(1));
  b.informative = raw <= Scalar(1) + Scalar(1e-10);
  b.cut = std::move(cut);
  return b;
}

}  // namespace detail

/// Subset of ensemble members claimed perfectly distinguishable by a
/// separable strategy, optionally with an explicit certificate. Certificate
/// decodings index positions within `members`.
template <typename Scalar>
struct DistinguishableSubset {
  std::vector<Index> members;
  struct Certificate {
    SeparablePovm<Scalar> povm;
    DecodingMap<Scalar> decoding;
  };
  std::optional<Certificate> certificate;
};

/// Check a subset's necessary condition (mutual orthogonality) and, when a
/// certificate is attached, that it actually discriminates the members.
template <typename Scalar>
void verify_subset(const Ensemble<Scalar>& s,
                   const DistinguishableSubset<Scalar>& subset,
                   const Tolerances<Scalar>& tol = {}) {
  if (subset.members.empty())
    raise(Errc::BadConstruction, "empty subset");
  for (Index i : subset.members)
    if (i < 0 || i >= s.size())
      raise(Errc::BadConstruction, "subset member index out of range");
  for (std::size_t x = 0; x < subset.members.size(); ++x)
    for (std::size_t y = x + 1; y < subset.members.size(); ++y) {
      const auto ov = s.states[subset.members[x]].amplitudes.dot(
          s.states[subset.members[y]].amplitudes);
      if (std::abs(ov) > tol.orthogonality)
        raise(Errc::BadConstruction,
              "subset members are not mutually orthogonal");
    }
  if (subset.certificate) {
    // Probabilities are irrelevant for the discrimination table; use
    // uniform weights on the restricted ensemble.
    std::vector<StateVector<Scalar>> states;
    for (Index i : subset.members) states.push_back(s.states[i]);
    const Scalar p = Scalar(1) / static_cast<Scalar>(states.size());
    Ensemble<Scalar> sub{std::move(states),
                         std::vector<Scalar>(subset.members.size(), p)};
    if (!check_perfect_discrimination(sub, subset.certificate->povm,
                                      subset.certificate->decoding, tol))
      raise(Errc::BadConstruction,
            "subset certificate fails perfect discrimination");
  }
}

/// Lower bound from perfectly distinguishable subsets: the best total prior
/// probability of any subset. In strict mode every subset must carry a
/// verified certificate; in declared mode caller-asserted subsets are
/// accepted and the resulting bound is labeled declared unless the winning
/// subset was certified.
template <typename Scalar>
BoundValue<Scalar> lower_bound_from_subsets(
    const Ensemble<Scalar>& s,
    const std::vector<DistinguishableSubset<Scalar>>& subsets,
    bool strict = false, const Tolerances<Scalar>& tol = {}) {
  if (subsets.empty()) raise(Errc::EmptySubsetList, "no subsets given");
  Scalar best = 0;
  bool bestCertified = false;
  for (const auto& x : subsets) {
    if (strict && !x.certificate)
      raise(Errc::UncertifiedSubsetRejected,
            "strict mode requires certificates on every subset");
    verify_subset(s, x, tol);
    Scalar mass = 0;
    for (Index i : x.members) mass += s.probs[i];
    if (mass > best) {
      best = mass;
      bestCertified = x.certificate.has_value();
    }
  }
  return detail::make_bound<Scalar>(
      "distinguishable-subset", BoundSide::Lower, BoundScope::Separable,
      bestCertified ? BoundMode::Strict : BoundMode::Declared,
      BoundQuantity::Fidelity, best);
}

/// Equiprobable specialization: m perfectly distinguishable states out of N
/// give a lower bound of m/N.
template <typename Scalar>
BoundValue<Scalar> lower_bound_subset_fraction(
    Index n, Index m, BoundMode mode = BoundMode::Declared) {
  if (n < 1 || m < 1 || m > n)
    raise(Errc::InvalidCounts, "need 1 <= m <= N");
  return detail::make_bound<Scalar>(
      "subset-fraction", BoundSide::Lower, BoundScope::Separable, mode,
      BoundQuantity::Fidelity,
      static_cast<Scalar>(m) / static_cast<Scalar>(n));
}

/// Fidelity upper bound d1*d2*||Lambda||_inf with Lambda the
/// max-Schmidt-weighted average state across the cut.
template <typename Scalar>
BoundValue<Scalar> upper_bound_lambda_norm(const Ensemble<Scalar>& s,
                                           const Bipartition& cut,
                                           const Tolerances<Scalar>& tol = {}) {
  const Scalar norm = operator_norm(lambda_operator(s, cut), tol);
  const Scalar raw =
      static_cast<Scalar>(cut.d1()) * static_cast<Scalar>(cut.d2()) * norm;
  return detail::make_bound<Scalar>("lambda-norm", BoundSide::Upper,
                                    BoundScope::Separable, BoundMode::Strict,
                                    BoundQuantity::Fidelity, raw, cut);
}

/// Specialization of the lambda-norm bound for N equally likely mutually
/// orthogonal states: lambda_max * d1 * d2 / N.
template <typename Scalar>
BoundValue<Scalar> upper_bound_orthogonal_equiprobable(
    const Ensemble<Scalar>& s, const Bipartition& cut,
    const Tolerances<Scalar>& tol = {}) {
  if (!is_orthogonal(s, tol))
    raise(Errc::NotOrthogonal, "bound needs mutually orthogonal states");
  if (!is_equiprobable(s, tol))
    raise(Errc::NotEquiprobable, "bound needs equal probabilities");
  check_cut(s.dims(), cut);
  Scalar lamMax = 0;
  for (Index i = 0; i < s.size(); ++i)
    lamMax = std::max(lamMax, max_schmidt_sq(s.states[i], cut));
  const Scalar raw = lamMax * static_cast<Scalar>(cut.d1()) *
                     static_cast<Scalar>(cut.d2()) /
                     static_cast<Scalar>(s.size());
  return detail::make_bound<Scalar>(
      "orthogonal-equiprobable", BoundSide::Upper, BoundScope::Separable,
      BoundMode::Strict, BoundQuantity::Fidelity, raw, cut);
}

/// Fidelity upper bound ||rho||_inf * d2 for ensembles of maximally
/// entangled states across the cut.
template <typename Scalar>
BoundValue<Scalar> upper_bound_max_entangled(
    const Ensemble<Scalar>& s, const Bipartition& cut,
    const Tolerances<Scalar>& tol = {}) {
  check_cut(s.dims(), cut);
  const Scalar target = Scalar(1) / static_cast<Scalar>(cut.d1());
  for (Index i = 0; i < s.size(); ++i) {
    const Scalar lam = max_schmidt_sq(s.states[i], cut);
    if (std::abs(lam - target) > tol.maxEntangled)
      raise(Errc::NotMaximallyEntangled,
            "state " + std::to_string(i) +
                " is not maximally entangled across the cut");
  }
  const Scalar raw = operator_norm(rho(s), tol) * static_cast<Scalar>(cut.d2());
  return detail::make_bound<Scalar>("max-entangled", BoundSide::Upper,
                                    BoundScope::Separable, BoundMode::Strict,
                                    BoundQuantity::Fidelity, raw, cut);
}

/// Water-filling upper bound on the success probability under separable
/// measurements: allocate measurement weight tau_i <= 1/lambda_i to states
/// in nonincreasing order of p_i*lambda_i until the weight budget is spent.
/// The budget is the product of the ensemble's local support ranks across
/// the cut (at most d1*d2; equal to it for full-support ensembles), since a
/// separable measurement restricted to the local supports loses nothing.
/// Transfers to the separable fidelity when the ensemble is orthogonal.
template <typename Scalar>
BoundValue<Scalar> upper_bound_water_filling(
    const Ensemble<Scalar>& s, const Bipartition& cut,
    const Tolerances<Scalar>& tol = {}) {
  check_cut(s.dims(), cut);
  const Index n = s.size();
  RealVector<Scalar> lambdas(n);
  for (Index i = 0; i < n; ++i)
    lambdas(i) = max_schmidt_sq(s.states[i], cut);
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return s.probs[a] * lambdas(a) > s.probs[b] * lambdas(b);
  });
  const auto [rankL, rankR] = local_support_ranks(s, cut, tol);
  const Scalar budget = static_cast<Scalar>(rankL) * static_cast<Scalar>(rankR);
  Scalar spent = 0;
  Scalar value = 0;
  for (Index i : order) {
    const Scalar cap = Scalar(1) / lambdas(i);
    if (spent + cap <= budget) {
      value += s.probs[i];  // tau_i = 1/lambda_i saturates this state
      spent += cap;
    } else {
      value += s.probs[i] * lambdas(i) * (budget - spent);
      spent = budget;
      break;
    }
  }
  return detail::make_bound<Scalar>("water-filling", BoundSide::Upper,
                                    BoundScope::Separable, BoundMode::Strict,
                                    BoundQuantity::Success, value, cut);
}

/// Ky Fan bound: with r the span dimension of the states, the average
/// fidelity of any strategy (separable or not) is at most the sum of the r
/// largest eigenvalues of the doubled-space operator rho'.
template <typename Scalar>
BoundValue<Scalar> upper_bound_ky_fan(const Ensemble<Scalar>& s,
                                      const Tolerances<Scalar>& tol = {}) {
  const Index r = span_rank(s, tol);
  const Scalar raw = ky_fan_norm(rho_prime(s), r, tol);
  return detail::make_bound<Scalar>("ky-fan-span", BoundSide::Upper,
                                    BoundScope::Global, BoundMode::Strict,
                                    BoundQuantity::Fidelity, raw);
}

/// Span bound on the success probability of any measurement: conditioning
/// on the outcome, the likelihood of every member is at most p_max times
/// the trace of the span projector, so P_s <= max_i p_i * span dimension.
template <typename Scalar>
BoundValue<Scalar> upper_bound_span_success(const Ensemble<Scalar>& s,
                                            const Tolerances<Scalar>& tol = {}) {
  const Index r = span_rank(s, tol);
  const Scalar pMax = *std::max_element(s.probs.begin(), s.probs.end());
  return detail::make_bound<Scalar>(
      "span-success", BoundSide::Upper, BoundScope::Global, BoundMode::Strict,
      BoundQuantity::Success, pMax * static_cast<Scalar>(r));
}

enum class UpperBoundKind {
  LambdaNorm,
  OrthogonalEquiprobable,
  MaxEntangled,
  WaterFilling,
};

template <typename Scalar>
BoundValue<Scalar> upper_bound_for_cut(const Ensemble<Scalar>& s,
                                       const Bipartition& cut,
                                       UpperBoundKind kind,
                                       const Tolerances<Scalar>& tol = {}) {
  switch (kind) {
    case UpperBoundKind::LambdaNorm:
      return upper_bound_lambda_norm(s, cut, tol);
    case UpperBoundKind::OrthogonalEquiprobable:
      return upper_bound_orthogonal_equiprobable(s, cut, tol);
    case UpperBoundKind::MaxEntangled:
      return upper_bound_max_entangled(s, cut, tol);
    case UpperBoundKind::WaterFilling:
      return upper_bound_water_filling(s, cut, tol);
  }
  raise(Errc::BadParameter, "unknown bound kind");
}

/// Multipartite bound: minimum of the chosen per-cut bound over all
/// bipartitions, recording the minimizing cut. Cuts where the bound does
/// not apply are skipped with a warning; it is an error only if every cut
/// fails.
template <typename Scalar>
BoundValue<Scalar> multipartite_upper_bound(
    const Ensemble<Scalar>& s, UpperBoundKind kind,
    const Tolerances<Scalar>& tol = {},
    std::vector<std::string>* warnings = nullptr) {
  std::optional<BoundValue<Scalar>> best;
  for (const Bipartition& cut : all_bipartitions(s.dims())) {
    try {
      BoundValue<Scalar> b = upper_bound_for_cut(s, cut, kind, tol);
      if (!best || b.raw < best->raw) best = std::move(b);
    } catch (const Error& e) {
      if (warnings)
        warnings->push_back("cut " + cut.label() + " skipped: " + e.what());
    }
  }
  if (!best)
    raise(Errc::BadConstruction,
          "bound is inapplicable across every bipartition");
  return *best;
}

/// Value achieved by an explicit strategy; a certified lower bound on the
/// corresponding optimal quantity.
template <typename Scalar>
struct AchievedValue {
  std::string label;
  BoundQuantity quantity = BoundQuantity::Fidelity;
  Scalar value = 0;
};

template <typename Scalar>
struct Strategy {
  std::string label;
  SeparablePovm<Scalar> povm;
  std::optional<DecodingMap<Scalar>> decoding;
};

/// Aggregated report: every applicable bound across every bipartition, the
/// values achieved by supplied strategies, and sandwich determinations
/// where best lower and best upper agree.
template <typename Scalar>
struct BoundReport {
  std::vector<BoundValue<Scalar>> bounds;
  std::vector<AchievedValue<Scalar>> achieved;
  std::optional<Scalar> bestLowerFidelity, bestUpperFidelity;
  std::optional<Scalar> bestLowerSuccess, bestUpperSuccess;
  std::optional<Scalar> fidelityDetermined, successDetermined;
  bool orthogonal = false;
  bool equiprobable = false;
  Index spanRank = 0;
  std::vector<std::string> warnings;
};

template <typename Scalar>
BoundReport<Scalar> bound_report(
    const Ensemble<Scalar>& s,
    const std::vector<DistinguishableSubset<Scalar>>& subsets = {},
    const std::vector<Strategy<Scalar>>& strategies = {},
    bool strictSubsets = false, const Tolerances<Scalar>& tol = {}) {
  BoundReport<Scalar> report;
  report.orthogonal = is_orthogonal(s, tol);
  report.equiprobable = is_equiprobable(s, tol);
  report.spanRank = span_rank(s, tol);
  if (has_zero_prob_states(s))
    report.warnings.push_back(
        "ensemble contains zero-probability states; they never affect "
        "bounds but do count toward the span");

  if (!subsets.empty())
    report.bounds.push_back(
        lower_bound_from_subsets(s, subsets, strictSubsets, tol));

  if (s.party_count() >= 2) {
    for (const Bipartition& cut : all_bipartitions(s.dims())) {
      report.bounds.push_back(upper_bound_lambda_norm(s, cut, tol));
      report.bounds.push_back(upper_bound_water_filling(s, cut, tol));
      if (report.orthogonal && report.equiprobable)
        report.bounds.push_back(
            upper_bound_orthogonal_equiprobable(s, cut, tol));
      try {
        report.bounds.push_back(upper_bound_max_entangled(s, cut, tol));
      } catch (const Error&) {
        // not an MES ensemble across this cut; bound does not apply
      }
    }
  } else {
    report.warnings.push_back(
        "single-party system: no bipartite bounds apply");
  }
  report.bounds.push_back(upper_bound_ky_fan(s, tol));
  report.bounds.push_back(upper_bound_span_success(s, tol));

  for (const auto& strat : strategies) {
    const StrategyReport<Scalar> eval = achievable_fidelity(s, strat.povm, tol);
    report.achieved.push_back(
        {strat.label + " (achievable fidelity)", BoundQuantity::Fidelity,
         eval.achievableFidelity});
    report.achieved.push_back({strat.label + " (ML success)",
                               BoundQuantity::Success,
                               *eval.successProbability});
    if (strat.decoding)
      report.achieved.push_back(
          {strat.label + " (average fidelity)", BoundQuantity::Fidelity,
           average_fidelity(s, strat.povm, *strat.decoding, tol)});
  }

  // Best lower/upper per quantity. Success bounds constrain the fidelity
  // only for orthogonal ensembles; fidelity bounds always dominate the
  // success probability.
  auto maxOpt = [](std::optional<Scalar>& slot, Scalar v) {
    if (!slot || v > *slot) slot = v;
  };
  auto minOpt = [](std::optional<Scalar>& slot, Scalar v) {
    if (!slot || v < *slot) slot = v;
  };
  for (const auto& b : report.bounds) {
    if (b.side == BoundSide::Lower) {
      maxOpt(report.bestLowerFidelity, b.raw);
      maxOpt(report.bestLowerSuccess, b.raw);
    } else {
      if (b.quantity == BoundQuantity::Fidelity) {
        minOpt(report.bestUpperFidelity, b.capped);
        minOpt(report.bestUpperSuccess, b.capped);
      } else {
        minOpt(report.bestUpperSuccess, b.capped);
        if (report.orthogonal) minOpt(report.bestUpperFidelity, b.capped);
      }
    }
  }
  for (const auto& a : report.achieved) {
    if (a.quantity == BoundQuantity::Fidelity)
      maxOpt(report.bestLowerFidelity, a.value);
    else
      maxOpt(report.bestLowerSuccess, a.value);
  }
  if (report.bestLowerFidelity && report.bestUpperFidelity &&
      std::abs(*report.bestUpperFidelity - *report.bestLowerFidelity) <=
          tol.sandwich)
    report.fidelityDetermined = *report.bestLowerFidelity;
  if (report.bestLowerSuccess && report.bestUpperSuccess &&
      std::abs(*report.bestUpperSuccess - *report.bestLowerSuccess) <=
          tol.sandwich)
    report.successDetermined = *report.bestLowerSuccess;
  return report;
}

}  // namespace sepdist

#endif  // SEPDIST_BOUNDS_HPP
