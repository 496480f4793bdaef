// Copyright 2026 The stabwit developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "stabwit/sampling.hpp"
#include "stabwit/witness.hpp"
#include "test_helpers.hpp"

using namespace stabwit;
using testing_oracles::kron;
using testing_oracles::single_site_matrix;

namespace {

// Projector-product oracle for outcome probabilities.
Eigen::VectorXd oracle_distribution(const MeasurementSetting& setting,
                                    const Eigen::MatrixXcd& rho) {
  const int n = setting.size();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd probs(dim);
  for (Eigen::Index o = 0; o < dim; ++o) {
    Eigen::MatrixXcd projector = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
      const double sign =
          (static_cast<std::uint64_t>(o) >> (n - 1 - k)) & 1ULL ? -1.0 : 1.0;
      const Eigen::Matrix2cd site =
          0.5 * (Eigen::Matrix2cd::Identity() +
                 sign * single_site_matrix(
                            setting.bases[static_cast<std::size_t>(k)]));
      projector = kron(projector, site);
    }
    probs[o] = (rho * projector).trace().real();
  }
  return probs;
}

struct GhzSetup {
  Witness witness;
  SettingPlan plan;

  GhzSetup()
      : witness(build_witness({WitnessFamily::Ghz, 3, std::nullopt})),
        plan(min_settings(witness.observable.term_strings())) {}
};

}  // namespace

TEST_CASE("outcome distributions") {
  // All-Z measurement of |000> is deterministic.
  const DensityMatrix zero = noisy_mixture(StateVector::zero_state(3), 0.0);
  const Eigen::VectorXd z = outcome_distribution(MeasurementSetting::parse("ZZZ"), zero);
  CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.tail(7).cwiseAbs().maxCoeff() < 1e-12);

  // All-X measurement of the GHZ state is uniform on even-parity outcomes.
  const DensityMatrix ghz = noisy_mixture(ghz_state(3), 0.0);
  const Eigen::VectorXd x = outcome_distribution(MeasurementSetting::parse("XXX"), ghz);
  for (Eigen::Index o = 0; o < 8; ++o) {
    const bool even = (std::popcount(static_cast<std::uint64_t>(o)) & 1) == 0;
    CHECK(x[o] == doctest::Approx(even ? 0.25 : 0.0).epsilon(1e-12));
  }

  // Uniform for the maximally mixed state, any setting.
  const DensityMatrix mixed = noisy_mixture(ghz_state(3), 1.0);
  const Eigen::VectorXd u = outcome_distribution(MeasurementSetting::parse("XYZ"), mixed);
  for (Eigen::Index o = 0; o < 8; ++o)
    CHECK(u[o] == doctest::Approx(0.125).epsilon(1e-12));

  // Against the projector oracle on noisy states, all three bases involved.
  std::mt19937_64 eng(53);
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.35);
  for (const char* text : {"XXX", "ZZZ", "XYZ", "YYX", "ZXY"}) {
    const MeasurementSetting setting = MeasurementSetting::parse(text);
    const Eigen::VectorXd fast = outcome_distribution(setting, rho);
    const Eigen::VectorXd oracle = oracle_distribution(setting, rho.matrix);
    CHECK((fast - oracle).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(fast.sum() - 1.0) < 1e-12);
  }

  // Pure-state overload agrees with the density path.
  const StateVector psi = testing_oracles::random_state(3, eng);
  const MeasurementSetting setting = MeasurementSetting::parse("YXZ");
  const Eigen::VectorXd from_pure = outcome_distribution(setting, psi);
  const Eigen::VectorXd from_density =
      outcome_distribution(setting, noisy_mixture(psi, 0.0));
  CHECK((from_pure - from_density).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("estimates are deterministic in the seed") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.2);
  const ShotEstimate a =
      estimate_observable(setup.witness.observable, setup.plan, rho, 5000, 99);
  const ShotEstimate b =
      estimate_observable(setup.witness.observable, setup.plan, rho, 5000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_value == b.stderr_value);
  CHECK(a.per_setting_counts == b.per_setting_counts);

  const ShotEstimate c =
      estimate_observable(setup.witness.observable, setup.plan, rho, 5000, 100);
  CHECK(a.per_setting_counts != c.per_setting_counts);
}

TEST_CASE("estimator converges to the exact value") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.3);
  const double exact = evaluate(setup.witness, rho);
  const ShotEstimate estimate = estimate_observable(setup.witness.observable,
                                                    setup.plan, rho, 1000000, 7);
  CHECK(std::abs(estimate.mean - exact) < 5.0 * estimate.stderr_value);
  CHECK(estimate.stderr_value < 0.01);

  // On the pure GHZ state every shot gives the same witness contribution,
  // so the estimate is exact with zero spread.
  const DensityMatrix pure = noisy_mixture(ghz_state(3), 0.0);
  const ShotEstimate sharp = estimate_observable(setup.witness.observable,
                                                 setup.plan, pure, 10000, 11);
  CHECK(sharp.mean == -1.0);
  CHECK(sharp.stderr_value == 0.0);
}

TEST_CASE("stderr shrinks like one over sqrt shots") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.3);
  double ratio_sum = 0.0;
  const int reps = 50;
  for (int rep = 0; rep < reps; ++rep) {
    const ShotEstimate small = estimate_observable(
        setup.witness.observable, setup.plan, rho, 2000,
        static_cast<std::uint64_t>(rep) * 2 + 1);
    const ShotEstimate large = estimate_observable(
        setup.witness.observable, setup.plan, rho, 4000,
        static_cast<std::uint64_t>(rep) * 2 + 2);
    ratio_sum += large.stderr_value / small.stderr_value;
  }
  const double mean_ratio = ratio_sum / reps;
  CHECK(std::abs(mean_ratio - 1.0 / std::sqrt(2.0)) <
        0.2 / std::sqrt(2.0));
}

TEST_CASE("Mermin witness estimation uses Y bases across four settings") {
  const Witness w = build_witness({WitnessFamily::Mermin3, 3, std::nullopt});
  const SettingPlan plan = min_settings(w.observable.term_strings());
  REQUIRE(plan.settings.size() == 4);  // XXX, XYY, YXY, YYX are incompatible

  // Every Mermin term is a signed stabilizer element, so the pure-state
  // estimator is exact with zero spread.
  const DensityMatrix pure = noisy_mixture(ghz_state(3), 0.0);
  const double exact = evaluate(w, pure);
  CHECK(exact == doctest::Approx(-2.0).epsilon(1e-12));
  const ShotEstimate estimate =
      estimate_observable(w.observable, plan, pure, 100000, 17);
  CHECK(estimate.mean == -2.0);
  CHECK(estimate.stderr_value == 0.0);

  const DensityMatrix noisy = noisy_mixture(ghz_state(3), 0.3);
  const double noisy_exact = evaluate(w, noisy);
  const ShotEstimate noisy_estimate =
      estimate_observable(w.observable, plan, noisy, 100000, 18);
  CHECK(std::abs(noisy_estimate.mean - noisy_exact) <
        5.0 * noisy_estimate.stderr_value);
}

TEST_CASE("confidence intervals have roughly nominal coverage") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.4);
  const double exact = evaluate(setup.witness, rho);
  int covered = 0;
  const int runs = 200;
  for (int rep = 0; rep < runs; ++rep) {
    const ShotEstimate estimate =
        estimate_observable(setup.witness.observable, setup.plan, rho, 2000,
                            1000 + static_cast<std::uint64_t>(rep));
    if (std::abs(estimate.mean - exact) <= 2.0 * estimate.stderr_value)
      ++covered;
  }
  CHECK(covered >= runs * 9 / 10);
}

TEST_CASE("histograms account for every shot") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.5);
  const ShotEstimate estimate =
      estimate_observable(setup.witness.observable, setup.plan, rho, 3000, 3);
  REQUIRE(estimate.per_setting_counts.size() == setup.plan.settings.size());
  for (const auto& counts : estimate.per_setting_counts) {
    std::uint64_t total = 0;
    for (const auto& [outcome, count] : counts) {
      CHECK(outcome.size() == 3);
      total += count;
    }
    CHECK(total == 3000);
  }
}

TEST_CASE("input validation") {
  const GhzSetup setup;
  const DensityMatrix rho = noisy_mixture(ghz_state(3), 0.2);
  CHECK_THROWS_AS(
      estimate_observable(setup.witness.observable, setup.plan, rho, 1, 5),
      std::invalid_argument);

  // A plan for different terms is rejected.
  const Witness other = build_witness({WitnessFamily::Mermin3, 3, std::nullopt});
  const SettingPlan other_plan = min_settings(other.observable.term_strings());
  CHECK_THROWS_AS(estimate_observable(setup.witness.observable, other_plan,
                                      rho, 100, 5),
                  std::invalid_argument);
}
