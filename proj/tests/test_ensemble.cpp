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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "sepdist/catalog.hpp"
#include "sepdist/ensemble.hpp"
#include "test_util.hpp"

using namespace sepdist;

namespace {

Ensemble<double> equiprobable(std::vector<StateVector<double>> states) {
  const std::size_t n = states.size();
  return make_ensemble(std::move(states), std::vector<double>(n, 1.0 / n));
}

}  // namespace

TEST_SUITE("ensemble") {

TEST_CASE("validation rejects bad probabilities") {
  auto states = bell_states<double>();
  CHECK_THROWS_AS(
      make_ensemble(states, std::vector<double>{0.5, 0.2, 0.2, 0.2}), Error);
  CHECK_THROWS_AS(
      make_ensemble(states, std::vector<double>{0.5, 0.5, 0.5, -0.5}), Error);
  CHECK_THROWS_AS(make_ensemble(states, std::vector<double>{1.0}), Error);
}

TEST_CASE("validation rejects mixed dims") {
  std::vector<StateVector<double>> states = {
      basis_state<double>({2, 2}, 0),
      basis_state<double>({4}, 0),
  };
  CHECK_THROWS_AS(make_ensemble(states, std::vector<double>{0.5, 0.5}), Error);
}

TEST_CASE("orthogonality detection") {
  CHECK(is_orthogonal(equiprobable(bell_states<double>())));
  CHECK_FALSE(is_orthogonal(s2_set<double>().ensemble));
  const Ensemble<double> single = make_ensemble(
      {basis_state<double>({2, 2}, 2)}, std::vector<double>{1.0});
  CHECK(is_orthogonal(single));
}

TEST_CASE("gram matrix entries") {
  const auto g = gram_matrix(equiprobable(bell_states<double>()));
  CHECK((g - ComplexMatrix<double>::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);

  const auto g2 = gram_matrix(s2_set<double>().ensemble);
  CHECK(std::norm(g2(0, 2)) == doctest::Approx(0.5).epsilon(1e-12));
  for (Index i = 0; i < 4; ++i)
    CHECK(g2(i, i).real() == doctest::Approx(1.0));

  const auto psi = basis_state<double>({2, 2}, 1);
  const auto dup = make_ensemble({psi, psi}, std::vector<double>{0.5, 0.5});
  const auto g3 = gram_matrix(dup);
  CHECK((g3.cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("span rank distinguishes the two qubit-pair sets") {
  CHECK(span_rank(s1_set<double>().ensemble) == 4);
  CHECK(span_rank(s2_set<double>().ensemble) == 2);
  const Ensemble<double> single = make_ensemble(
      {basis_state<double>({2, 2}, 0)}, std::vector<double>{1.0});
  CHECK(span_rank(single) == 1);
}

TEST_CASE("span rank equals the rank of the average state") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.uniform() * 5);
    auto s = testutil::random_ensemble({2, 2}, n, rng);
    const auto ev = hermitian_eigenvalues(rho(s));
    Index rankRho = 0;
    for (Index i = 0; i < ev.size(); ++i)
      if (ev(i) > 1e-9) ++rankRho;
    CHECK(span_rank(s) == rankRho);
  }
}

TEST_CASE("lambda operator for the Bell ensemble is I/8") {
  const auto s = equiprobable(bell_states<double>());
  const auto cut = make_bipartition({2, 2}, {0});
  const auto lam = lambda_operator(s, cut);
  CHECK((lam - ComplexMatrix<double>::Identity(4, 4) / 8.0)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("lambda operator of a product state is its projector") {
  const auto psi = basis_state<double>({2, 2}, 2);
  const auto s = make_ensemble({psi}, std::vector<double>{1.0});
  const auto lam = lambda_operator(s, make_bipartition({2, 2}, {0}));
  const ComplexMatrix<double> proj =
      psi.amplitudes * psi.amplitudes.adjoint();
  CHECK((lam - proj).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("lambda operator norm for the tilted basis") {
  const auto entry = tilted_bell_basis<double>(0.8);
  const auto lam =
      lambda_operator(entry.ensemble, make_bipartition({2, 2}, {0}));
  CHECK(operator_norm(lam) == doctest::Approx(0.25 * 0.64).epsilon(1e-12));
}

TEST_CASE("lambda operator is diagonal in orthogonal ensembles") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testutil::random_orthogonal_ensemble({2, 3}, 4, rng);
    const auto cut = make_bipartition({2, 3}, {0});
    double expected = 0;
    for (Index i = 0; i < s.size(); ++i)
      expected = std::max(expected,
                          s.probs[i] * max_schmidt_sq(s.states[i], cut));
    const auto ev = hermitian_eigenvalues(lambda_operator(s, cut));
    for (Index i = 0; i < ev.size(); ++i) CHECK(ev(i) <= expected + 1e-10);
    CHECK(ev(0) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("average and doubled-space operators of the coplanar set") {
  const auto s = s2_set<double>().ensemble;
  const auto evRho = hermitian_eigenvalues(rho(s));
  CHECK(evRho(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(evRho(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(evRho(2)) < 1e-12);

  const auto evPrime = hermitian_eigenvalues(rho_prime(s));
  CHECK(evPrime(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(evPrime(1) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(evPrime(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(evPrime(3)) < 1e-12);
}

TEST_CASE("single-state operators") {
  Rng rng(77);
  const auto psi = testutil::random_state({2, 2}, rng);
  const auto s = make_ensemble({psi}, std::vector<double>{1.0});
  const ComplexMatrix<double> proj =
      psi.amplitudes * psi.amplitudes.adjoint();
  CHECK((rho(s) - proj).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((rho_prime(s) - kron(proj, proj)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("operators have unit trace") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testutil::random_ensemble({2, 2}, 3, rng);
    CHECK(rho(s).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rho_prime(s).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("ensemble operators ignore member order") {
  Rng rng(31);
  auto s = testutil::random_ensemble({2, 2}, 4, rng);
  auto shuffled = s;
  std::reverse(shuffled.states.begin(), shuffled.states.end());
  std::reverse(shuffled.probs.begin(), shuffled.probs.end());
  const auto cut = make_bipartition({2, 2}, {0});
  CHECK((rho(s) - rho(shuffled)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((rho_prime(s) - rho_prime(shuffled)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((lambda_operator(s, cut) - lambda_operator(shuffled, cut))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("bipartition enumeration") {
  CHECK(all_bipartitions({2, 2}).size() == 1);
  const auto cuts3 = all_bipartitions({2, 2, 2});
  CHECK(cuts3.size() == 3);
  const auto cuts4 = all_bipartitions({2, 2, 2, 2});
  CHECK(cuts4.size() == 7);
  CHECK(cuts4.size() == oracle::count_bipartitions(4));
  CHECK_THROWS_AS(all_bipartitions({4}), Error);

  // d1 <= d2 normalization on an asymmetric system.
  for (const auto& cut : all_bipartitions({2, 3, 4}))
    CHECK(cut.d1() <= cut.d2());
}

TEST_CASE("zero probability states count toward the span") {
  auto states = bell_states<double>();
  states.resize(3);
  const auto s =
      make_ensemble(std::move(states), std::vector<double>{0.5, 0.5, 0.0});
  CHECK(has_zero_prob_states(s));
  CHECK(span_rank(s) == 3);
}

TEST_CASE("regrouping preserves inner products") {
  Rng rng(13);
  const std::vector<Index> dims{2, 3, 2};
  auto s = testutil::random_ensemble(dims, 3, rng);
  for (const auto& cut : all_bipartitions(dims)) {
    const auto reg = regroup_ensemble(s, cut);
    CHECK(reg.dims().size() == 2);
    CHECK((gram_matrix(reg) - gram_matrix(s)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("local support ranks") {
  const auto ghz = ghz_ensemble<double>({0.25, 0.25, 0.25, 0.25});
  // Lone first qubit: both sides rank 2 even though the joined side has
  // dimension 4.
  const auto cutA = make_bipartition({2, 2, 2}, {0});
  const auto [l1, r1] = local_support_ranks(ghz.ensemble, cutA);
  CHECK(l1 == 2);
  CHECK(r1 == 2);
  const auto cutB = make_bipartition({2, 2, 2}, {1});
  const auto [l2, r2] = local_support_ranks(ghz.ensemble, cutB);
  CHECK(l2 * r2 == 8);
}

}  // TEST_SUITE
