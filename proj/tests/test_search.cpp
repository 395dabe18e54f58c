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

#include <cmath>

#include "sepdist/catalog.hpp"
#include "sepdist/search.hpp"
#include "test_util.hpp"

using namespace sepdist;

namespace {

SearchConfig<double> small_config(Objective objective) {
  SearchConfig<double> cfg;
  cfg.restarts = 6;
  cfg.refinementSweeps = 25;
  cfg.objective = objective;
  return cfg;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("random product bases are complete and deterministic") {
  Rng rng(0);
  const auto m = random_product_basis<double>({2, 2}, rng);
  CHECK(m.outcome_count() == 4);
  CHECK(check_completeness(m) < 1e-10);

  Rng rngA(123), rngB(123);
  const auto a = random_product_basis<double>({2, 3}, rngA);
  const auto b = random_product_basis<double>({2, 3}, rngB);
  for (Index i = 0; i < a.outcome_count(); ++i)
    for (std::size_t p = 0; p < a.outcomes[i].factors.size(); ++p)
      CHECK((a.outcomes[i].factors[p] - b.outcomes[i].factors[p]).norm() ==
            0.0);
}

TEST_CASE("sampled measurements respect the Bell ceiling") {
  const auto entry = bell_ensemble<double>({0.25, 0.25, 0.25, 0.25});
  Rng rng(2024);
  for (int k = 0; k < 100; ++k) {
    const auto m = random_product_basis<double>({2, 2}, rng);
    CHECK(achievable_fidelity(entry.ensemble, m).achievableFidelity <=
          0.5 + 1e-8);
  }
}

TEST_CASE("refinement is monotone and respects zero sweeps") {
  const auto entry = bell_ensemble<double>({0.25, 0.25, 0.25, 0.25});
  Rng rng(5);
  const auto start = random_product_basis<double>({2, 2}, rng);
  const double startValue =
      achievable_fidelity(entry.ensemble, start).achievableFidelity;

  SearchConfig<double> zero = small_config(Objective::Fidelity);
  zero.refinementSweeps = 0;
  const auto unchanged = refine(entry.ensemble, start, zero);
  CHECK(unchanged.bestValue == doctest::Approx(startValue).epsilon(1e-12));

  SearchConfig<double> cfg = small_config(Objective::Fidelity);
  const auto refined = refine(entry.ensemble, start, cfg);
  CHECK(refined.bestValue >= startValue - 1e-12);
  double prev = 0;
  for (double v : refined.trace) {
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK(refined.bestValue == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("refinement from the computational basis finds the Bell ceiling") {
  const auto entry = bell_ensemble<double>({0.25, 0.25, 0.25, 0.25});
  const ComplexMatrix<double> eye = ComplexMatrix<double>::Identity(2, 2);
  const auto start = make_local_basis_povm<double>({eye, eye});
  const auto result = refine(entry.ensemble, start,
                             small_config(Objective::Fidelity));
  CHECK(result.bestValue == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("refine rejects non-product-basis starts") {
  const auto entry = bell_ensemble<double>({0.25, 0.25, 0.25, 0.25});
  auto m = entry.strategies[0].povm;
  std::swap(m.outcomes[0], m.outcomes[1]);
  CHECK_THROWS_AS(refine(entry.ensemble, m, small_config(Objective::Fidelity)),
                  Error);
}

TEST_CASE("certification of the tilted basis approaches alpha^2") {
  const auto entry = tilted_bell_basis<double>(0.8);
  // Unseeded restarts land within the resolution of the step schedule;
  // seeding with the known strategy pins the value exactly.
  const auto result = certify(entry.ensemble, small_config(Objective::Fidelity));
  CHECK(result.bestValue >= 0.64 - 1e-4);
  CHECK(result.bestValue <= 0.64 + 1e-8);
  CHECK(result.trace.size() == 6);
  const auto seeded = certify(entry.ensemble, small_config(Objective::Fidelity),
                              {entry.strategies[0].povm});
  CHECK(seeded.bestValue >= 0.64 - 1e-9);
}

TEST_CASE("certification of the coplanar set with seeded strategies") {
  const auto entry = s2_set<double>();
  SearchConfig<double> cfg = small_config(Objective::Fidelity);
  auto result = certify(entry.ensemble, cfg, {entry.strategies[0].povm});
  CHECK(result.bestValue >= 0.75 - 1e-9);
  CHECK(result.bestValue <= 0.75 + 1e-8);

  cfg.objective = Objective::SuccessProbability;
  result = certify(entry.ensemble, cfg, {entry.strategies[0].povm});
  CHECK(result.bestValue >= 0.5 - 1e-9);
  CHECK(result.bestValue <= 0.5 + 1e-8);
}

TEST_CASE("certification is deterministic in the config") {
  const auto entry = s1_set<double>();
  SearchConfig<double> cfg = small_config(Objective::SuccessProbability);
  cfg.restarts = 3;
  const auto a = certify(entry.ensemble, cfg);
  const auto b = certify(entry.ensemble, cfg);
  CHECK(a.bestValue == b.bestValue);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i] == b.trace[i]);

  SearchConfig<double> other = cfg;
  other.seed = 99;
  const auto c = certify(entry.ensemble, other);
  // Same optimum from a different stream, up to step-schedule resolution.
  CHECK(std::abs(c.bestValue - a.bestValue) < 1e-4);
}

TEST_CASE("best value reproduces through the fidelity module") {
  Rng rng(8);
  const auto s = testutil::random_ensemble({2, 2}, 3, rng);
  SearchConfig<double> cfg = small_config(Objective::Fidelity);
  cfg.restarts = 4;
  const auto result = certify(s, cfg);
  const auto replay = achievable_fidelity(s, result.bestMeasurement);
  CHECK(result.bestValue ==
        doctest::Approx(replay.achievableFidelity).epsilon(1e-10));
  const double replayAvg =
      average_fidelity(s, result.bestMeasurement, result.bestDecoding);
  CHECK(result.bestValue == doctest::Approx(replayAvg).epsilon(1e-10));

  cfg.objective = Objective::SuccessProbability;
  const auto mlResult = certify(s, cfg);
  CHECK(mlResult.bestValue ==
        doctest::Approx(success_probability(s, mlResult.bestMeasurement,
                                            mlResult.bestDecoding))
            .epsilon(1e-10));
}

TEST_CASE("search stays below the analytic ceilings") {
  const auto entry = example6_ensemble<double>(0.25);
  const auto cut = make_bipartition({3, 3}, {0});
  const double ceiling =
      upper_bound_water_filling(entry.ensemble, cut).capped;
  SearchConfig<double> cfg = small_config(Objective::SuccessProbability);
  cfg.restarts = 4;
  cfg.refinementSweeps = 15;
  const auto result =
      certify(entry.ensemble, cfg, {entry.strategies[0].povm});
  CHECK(result.bestValue <= ceiling + 1e-8);
  CHECK(result.bestValue >= entry.knownValues[0].second - 1e-9);
}

}  // TEST_SUITE
