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

#ifndef SEPDIST_TYPES_HPP
#define SEPDIST_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sepdist {

using Index = Eigen::Index;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Failure categories surfaced by the library. Each maps onto one of the
/// validation or precondition failures of the public operations.
enum class Errc {
  NonSquare,
  NonHermitian,
  RankOutOfRange,
  InvalidBipartition,
  SinglePartySystem,
  BadState,
  BadProbabilities,
  BadParameter,
  BadDimension,
  BadConstruction,
  IncompleteBasis,
  IncompletePovm,
  GuessNotEnsembleMember,
  DecodingArityMismatch,
  NotOrthogonal,
  NotEquiprobable,
  NotMaximallyEntangled,
  EmptySubsetList,
  UncertifiedSubsetRejected,
  InvalidCounts,
  DimsMismatch,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::InvalidBipartition: return "InvalidBipartition";
    case Errc::SinglePartySystem: return "SinglePartySystem";
    case Errc::BadState: return "BadState";
    case Errc::BadProbabilities: return "BadProbabilities";
    case Errc::BadParameter: return "BadParameter";
    case Errc::BadDimension: return "BadDimension";
    case Errc::BadConstruction: return "BadConstruction";
    case Errc::IncompleteBasis: return "IncompleteBasis";
    case Errc::IncompletePovm: return "IncompletePovm";
    case Errc::GuessNotEnsembleMember: return "GuessNotEnsembleMember";
    case Errc::DecodingArityMismatch: return "DecodingArityMismatch";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NotEquiprobable: return "NotEquiprobable";
    case Errc::NotMaximallyEntangled: return "NotMaximallyEntangled";
    case Errc::EmptySubsetList: return "EmptySubsetList";
    case Errc::UncertifiedSubsetRejected: return "UncertifiedSubsetRejected";
    case Errc::InvalidCounts: return "InvalidCounts";
    case Errc::DimsMismatch: return "DimsMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

/// Central numerical tolerance record. Every validation and comparison in
/// the library reads from one of these, so tests have a single tuning point.
template <typename Scalar>
struct Tolerances {
  Scalar hermiticity = Scalar(1e-12);    // max|A - A^dag| entrywise
  Scalar normalization = Scalar(1e-10);  // vector norms, probability sums
  Scalar reconstruction = Scalar(1e-9);  // eigen/Schmidt round trips
  Scalar orthogonality = Scalar(1e-9);   // |<psi_i|psi_j>| off-diagonal
  Scalar rank = Scalar(1e-9);            // eigenvalue cutoff for rank counts
  Scalar completeness = Scalar(1e-8);    // POVM completeness residual
  Scalar maxEntangled = Scalar(1e-9);    // |lambda_1 - 1/d1| for MES checks
  Scalar sandwich = Scalar(1e-9);        // lower == upper declaration

  static Tolerances strict() { return scaled(Scalar(0.1)); }
  static Tolerances loose() { return scaled(Scalar(100)); }

  /// Profile lookup used by the CLI tolerance environment variable.
  /// Accepts "strict", "default", "loose"; anything else is a BadParameter.
  static Tolerances profile(const std::string& name) {
    if (name == "default") return Tolerances{};
    if (name == "strict") return strict();
    if (name == "loose") return loose();
    raise(Errc::BadParameter, "unknown tolerance profile '" + name + "'");
  }

 private:
  static Tolerances scaled(Scalar factor) {
    Tolerances t;
    t.hermiticity *= factor;
    t.normalization *= factor;
    t.reconstruction *= factor;
    t.orthogonality *= factor;
    t.rank *= factor;
    t.completeness *= factor;
    t.maxEntangled *= factor;
    t.sandwich *= factor;
    return t;
  }
};

/// Pairwise (cascade) summation. Used wherever a reported value is a sum over
/// measurement outcomes, so results are reproducible regardless of how the
/// per-outcome terms were produced.
template <typename Scalar>
Scalar pairwise_sum(const std::vector<Scalar>& terms) {
  const auto n = terms.size();
  if (n == 0) return Scalar(0);
  if (n == 1) return terms[0];
  std::vector<Scalar> buf = terms;
  std::size_t len = n;
  while (len > 1) {
    std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (len % 2 == 1) {
      buf[half] = buf[len - 1];
      ++half;
    }
    len = half;
  }
  return buf[0];
}

}  // namespace sepdist

#endif  // SEPDIST_TYPES_HPP
