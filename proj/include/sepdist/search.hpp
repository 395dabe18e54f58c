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

#ifndef SEPDIST_SEARCH_HPP
#define SEPDIST_SEARCH_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sepdist/ensemble.hpp"
#include "sepdist/fidelity.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

enum class Objective { Fidelity, SuccessProbability };

inline const char* to_string(Objective o) {
  return o == Objective::Fidelity ? "fidelity" : "successProbability";
}

/// Configuration of the random-restart coordinate-ascent search over
/// product-basis measurements.
template <typename Scalar>
struct SearchConfig {
  int restarts = 64;
  int refinementSweeps = 50;
  std::vector<Scalar> stepSchedule = {Scalar(0.5), Scalar(0.1), Scalar(0.02),
                                      Scalar(0.004)};
  std::uint64_t seed = 0;
  Objective objective = Objective::Fidelity;
};

template <typename Scalar>
struct SearchResult {
  Scalar bestValue = 0;
  SeparablePovm<Scalar> bestMeasurement;
  DecodingMap<Scalar> bestDecoding;
  std::vector<Scalar> trace;  // best value per restart (per sweep in refine)
};

/// Deterministic random stream: raw engine bits mapped to uniforms and a
/// Box-Muller gaussian, so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1))) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (cached_) {
      cached_ = false;
      return cache_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    cache_ = r * std::sin(a);
    cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  bool cached_ = false;
  double cache_ = 0.0;
};

namespace detail {

/// Haar-random unitary: QR of a complex gaussian matrix with the R diagonal
/// phases absorbed into Q.
template <typename Scalar>
ComplexMatrix<Scalar> haar_unitary(Index d, Rng& rng) {
  ComplexMatrix<Scalar> z(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      z(i, j) = Complex<Scalar>(static_cast<Scalar>(rng.gaussian()),
                                static_cast<Scalar>(rng.gaussian()));
  Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(z);
  ComplexMatrix<Scalar> q = qr.householderQ();
  const ComplexMatrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex<Scalar> diag = r(j, j);
    const Scalar mag = std::abs(diag);
    if (mag > Scalar(0)) q.col(j) *= diag / mag;
  }
  return q;
}

template <typename Scalar>
ComplexVector<Scalar> haar_vector(Index d, Rng& rng) {
  ComplexVector<Scalar> v(d);
  for (Index i = 0; i < d; ++i)
    v(i) = Complex<Scalar>(static_cast<Scalar>(rng.gaussian()),
                           static_cast<Scalar>(rng.gaussian()));
  v /= v.norm();
  return v;
}

/// Recover the per-party bases of a measurement built (lexicographically)
/// from local bases; rejects anything else.
template <typename Scalar>
std::vector<ComplexMatrix<Scalar>> extract_bases(
    const SeparablePovm<Scalar>& m) {
  if (m.outcome_count() != m.total_dim())
    raise(Errc::BadParameter, "refine needs a full product-basis measurement");
  for (const auto& o : m.outcomes)
    if (std::abs(o.weight - Scalar(1)) > Scalar(1e-12))
      raise(Errc::BadParameter, "refine needs unit outcome weights");
  std::vector<ComplexMatrix<Scalar>> bases(m.dims.size());
  Index stride = 1;
  for (int p = static_cast<int>(m.dims.size()) - 1; p >= 0; --p) {
    bases[p].resize(m.dims[p], m.dims[p]);
    for (Index j = 0; j < m.dims[p]; ++j)
      bases[p].col(j) = m.outcomes[j * stride].factors[p];
    stride *= m.dims[p];
  }
  // Outcomes must be the lexicographic product of the recovered bases.
  for (Index a = 0; a < m.outcome_count(); ++a) {
    Index rest = a;
    for (int p = static_cast<int>(m.dims.size()) - 1; p >= 0; --p) {
      const Index digit = rest % m.dims[p];
      rest /= m.dims[p];
      if ((m.outcomes[a].factors[p] - bases[p].col(digit)).norm() >
          Scalar(1e-10))
        raise(Errc::BadParameter,
              "refine needs a lexicographic product-basis measurement");
    }
  }
  return bases;
}

/// Fast objective evaluation against per-party bases. States are rotated
/// into the measurement basis, so outcome weights are plain amplitude
/// magnitudes; per-outcome fidelity norms are taken in the N-dimensional
/// span via the Gram matrix.
template <typename Scalar>
class ObjectiveEvaluator {
 public:
  ObjectiveEvaluator(const Ensemble<Scalar>& s, Objective objective)
      : ensemble_(s), objective_(objective), gram_(gram_matrix(s)) {}

  Scalar operator()(const std::vector<ComplexMatrix<Scalar>>& bases) const {
    const Index n = ensemble_.size();
    const Index dim = ensemble_.total_dim();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> q(n, dim);
    ComplexVector<Scalar> work(dim);
    for (Index i = 0; i < n; ++i) {
      rotate_into(bases, ensemble_.states[i].amplitudes, work);
      q.row(i) = work.cwiseAbs2().transpose();
    }
    Scalar total = 0;
    if (objective_ == Objective::SuccessProbability) {
      for (Index a = 0; a < dim; ++a) {
        Scalar best = 0;
        for (Index i = 0; i < n; ++i)
          best = std::max(best, ensemble_.probs[i] * q(i, a));
        total += best;
      }
      return total;
    }
    ComplexMatrix<Scalar> block(n, n);
    for (Index a = 0; a < dim; ++a) {
      // ||sum_i w_i |psi_i><psi_i||| equals the top eigenvalue of
      // sqrt(w) G sqrt(w) on the span.
      RealVector<Scalar> w(n);
      Scalar mass = 0;
      for (Index i = 0; i < n; ++i) {
        w(i) = std::sqrt(std::max(ensemble_.probs[i] * q(i, a), Scalar(0)));
        mass += ensemble_.probs[i] * q(i, a);
      }
      if (mass <= Scalar(0)) continue;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) block(i, j) = w(i) * gram_(i, j) * w(j);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(
          block, Eigen::EigenvaluesOnly);
      total += std::max(solver.eigenvalues()(n - 1), Scalar(0));
    }
    return total;
  }

 private:
  // amplitude vector in the product measurement basis: apply each party's
  // adjoint basis matrix along its tensor slot.
  void rotate_into(const std::vector<ComplexMatrix<Scalar>>& bases,
                   const ComplexVector<Scalar>& in,
                   ComplexVector<Scalar>& out) const {
    out = in;
    const auto& dims = ensemble_.dims();
    Index blockSize = ensemble_.total_dim();
    Index outer = 1;
    ComplexVector<Scalar> seg;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      const Index d = dims[p];
      blockSize /= d;
      for (Index o = 0; o < outer; ++o)
        for (Index b = 0; b < blockSize; ++b) {
          seg.resize(d);
          for (Index j = 0; j < d; ++j)
            seg(j) = out(o * blockSize * d + j * blockSize + b);
          seg = (bases[p].adjoint() * seg).eval();
          for (Index j = 0; j < d; ++j)
            out(o * blockSize * d + j * blockSize + b) = seg(j);
        }
      outer *= d;
    }
  }

  const Ensemble<Scalar>& ensemble_;
  Objective objective_;
  ComplexMatrix<Scalar> gram_;
};

template <typename Scalar>
void apply_plane_rotation(ComplexMatrix<Scalar>& basis, Index j, Index k,
                          Scalar angle, bool imaginary) {
  const Scalar c = std::cos(angle);
  const Scalar s = std::sin(angle);
  const Complex<Scalar> mix =
      imaginary ? Complex<Scalar>(0, s) : Complex<Scalar>(s, 0);
  const ComplexVector<Scalar> colJ = basis.col(j);
  const ComplexVector<Scalar> colK = basis.col(k);
  basis.col(j) = c * colJ + mix * colK;
  basis.col(k) = -std::conj(mix) * colJ + c * colK;
}

}  // namespace detail

/// Haar-random full product-basis measurement.
template <typename Scalar>
SeparablePovm<Scalar> random_product_basis(const std::vector<Index>& dims,
                                           Rng& rng,
                                           const Tolerances<Scalar>& tol = {}) {
  std::vector<ComplexMatrix<Scalar>> bases;
  bases.reserve(dims.size());
  for (Index d : dims) bases.push_back(detail::haar_unitary<Scalar>(d, rng));
  return make_local_basis_povm(bases, tol);
}

namespace detail {

template <typename Scalar>
std::vector<ComplexMatrix<Scalar>> refine_bases(
    const Ensemble<Scalar>& s, std::vector<ComplexMatrix<Scalar>> bases,
    const SearchConfig<Scalar>& cfg, std::vector<Scalar>* sweepTrace) {
  const ObjectiveEvaluator<Scalar> eval(s, cfg.objective);
  Scalar best = eval(bases);
  for (int sweep = 0; sweep < cfg.refinementSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t p = 0; p < bases.size(); ++p) {
      const Index d = bases[p].rows();
      for (Index j = 0; j < d; ++j)
        for (Index k = j + 1; k < d; ++k)
          for (const Scalar step : cfg.stepSchedule)
            for (const Scalar angle : {step, -step})
              for (const bool imaginary : {false, true}) {
                ComplexMatrix<Scalar> trial = bases[p];
                apply_plane_rotation(trial, j, k, angle, imaginary);
                std::vector<ComplexMatrix<Scalar>> trialBases = bases;
                trialBases[p] = trial;
                const Scalar value = eval(trialBases);
                if (value > best) {
                  best = value;
                  bases[p] = std::move(trial);
                  improved = true;
                }
              }
    }
    if (sweepTrace) sweepTrace->push_back(best);
    if (!improved) break;
  }
  return bases;
}

/// Package refined bases as a measurement plus the decoding the objective
/// implies (maximum likelihood for success, dominant eigenvectors for
/// fidelity), re-evaluated through the fidelity module.
template <typename Scalar>
SearchResult<Scalar> finalize(const Ensemble<Scalar>& s,
                              const std::vector<ComplexMatrix<Scalar>>& bases,
                              Objective objective,
                              const Tolerances<Scalar>& tol) {
  SearchResult<Scalar> result;
  result.bestMeasurement = make_local_basis_povm(bases, tol);
  if (objective == Objective::SuccessProbability) {
    result.bestDecoding = ml_decoding(s, result.bestMeasurement);
    result.bestValue =
        success_probability(s, result.bestMeasurement,
                            std::optional<DecodingMap<Scalar>>{}, tol);
  } else {
    const StrategyReport<Scalar> report =
        achievable_fidelity(s, result.bestMeasurement, tol);
    result.bestValue = report.achievableFidelity;
    std::vector<ComplexVector<Scalar>> guesses(
        result.bestMeasurement.outcome_count(),
        s.states[0].amplitudes);  // placeholder for silent outcomes
    for (const auto& g : report.perOutcomeBestGuess) guesses[g.outcome] = g.state;
    result.bestDecoding = DecodingMap<Scalar>::states(std::move(guesses));
  }
  return result;
}

}  // namespace detail

/// Coordinate ascent from a given full product-basis measurement: per
/// party and basis plane, try real and phase rotations over the step
/// schedule, keeping improvements. The objective never decreases.
template <typename Scalar>
SearchResult<Scalar> refine(const Ensemble<Scalar>& s,
                            const SeparablePovm<Scalar>& start,
                            const SearchConfig<Scalar>& cfg,
                            const Tolerances<Scalar>& tol = {}) {
  std::vector<Scalar> sweepTrace;
  const auto bases = detail::refine_bases(
      s, detail::extract_bases(start), cfg, &sweepTrace);
  SearchResult<Scalar> result = detail::finalize(s, bases, cfg.objective, tol);
  result.trace = std::move(sweepTrace);
  return result;
}

/// Random-restart search: refine from Haar-random product bases (plus any
/// seed measurements, tried first) and keep the best outcome. Restart
/// streams are independent and deterministic in the seed.
template <typename Scalar>
SearchResult<Scalar> certify(const Ensemble<Scalar>& s,
                             const SearchConfig<Scalar>& cfg,
                             const std::vector<SeparablePovm<Scalar>>& seeds = {},
                             const Tolerances<Scalar>& tol = {}) {
  if (cfg.restarts < 1) raise(Errc::BadParameter, "need at least one restart");
  std::optional<SearchResult<Scalar>> best;
  std::vector<Scalar> trace;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<ComplexMatrix<Scalar>> startBases;
    if (r < static_cast<int>(seeds.size())) {
      startBases = detail::extract_bases(seeds[r]);
    } else {
      Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
      startBases.reserve(s.dims().size());
      for (Index d : s.dims())
        startBases.push_back(detail::haar_unitary<Scalar>(d, rng));
    }
    const auto bases = detail::refine_bases(
        s, startBases, cfg, static_cast<std::vector<Scalar>*>(nullptr));
    SearchResult<Scalar> result =
        detail::finalize(s, bases, cfg.objective, tol);
    trace.push_back(result.bestValue);
    if (!best || result.bestValue > best->bestValue) best = std::move(result);
  }
  best->trace = std::move(trace);
  return *best;
}

}  // namespace sepdist

#endif  // SEPDIST_SEARCH_HPP
