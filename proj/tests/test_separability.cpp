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

#include <random>

#include "stabwit/separability.hpp"
#include "stabwit/witness.hpp"
#include "test_helpers.hpp"

using namespace stabwit;

TEST_CASE("GHZ pair condition") {
  const int n = 4;
  const StateVector ghz = ghz_state(n);

  // The stabilized state saturates both expectations.
  const DensityMatrix pure = noisy_mixture(ghz, 0.0);
  for (int m = 2; m <= n; ++m) {
    const auto report = check_ghz(pure, m);
    CHECK(report.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.violated);
    CHECK(report.pair == std::pair<int, int>(1, m));
  }

  // |0...0> sits exactly on the boundary: <X...X> = 0, <ZZ> = 1.
  const DensityMatrix zeros = noisy_mixture(StateVector::zero_state(n), 0.0);
  for (int m = 2; m <= n; ++m) {
    const auto report = check_ghz(zeros, m);
    CHECK(report.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(report.violated);
  }

  // Noise threshold at one half: lhs = 2(1-p).
  for (int m = 2; m <= n; ++m) {
    CHECK(check_ghz(noisy_mixture(ghz, 0.4), m).violated);
    CHECK_FALSE(check_ghz(noisy_mixture(ghz, 0.6), m).violated);
  }

  CHECK_THROWS_AS(check_ghz(pure, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_ghz(pure, n + 1), std::invalid_argument);
}

TEST_CASE("cluster pair condition") {
  const int n = 4;
  const StateVector cluster = stabilizer_state(cluster_generators(n));

  const DensityMatrix pure = noisy_mixture(cluster, 0.0);
  for (int k = 1; k < n; ++k) {
    const auto report = check_cluster(pure, k);
    CHECK(report.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.violated);
  }

  const DensityMatrix mixed = noisy_mixture(cluster, 1.0);
  for (int k = 1; k < n; ++k)
    CHECK(std::abs(check_cluster(mixed, k).lhs) < 1e-12);

  for (int k = 1; k < n; ++k) {
    CHECK(check_cluster(noisy_mixture(cluster, 0.49), k).violated);
    CHECK_FALSE(check_cluster(noisy_mixture(cluster, 0.51), k).violated);
  }

  CHECK_THROWS_AS(check_cluster(pure, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_cluster(pure, n), std::invalid_argument);
}

TEST_CASE("graph pair condition") {
  const GraphSpec triangle = GraphSpec::complete(3);
  const StateVector state = graph_state(triangle);

  const DensityMatrix pure = noisy_mixture(state, 0.0);
  const auto report = check_graph(pure, triangle, 0, 1);
  CHECK(report.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(report.violated);

  CHECK(check_graph(noisy_mixture(state, 0.4), triangle, 1, 2).violated);

  const GraphSpec path = GraphSpec::path(3);
  const DensityMatrix path_state = noisy_mixture(graph_state(path), 0.0);
  CHECK_THROWS_AS(check_graph(path_state, path, 0, 2), std::invalid_argument);
}

TEST_CASE("product states never violate the pair conditions") {
  std::mt19937_64 eng(59);
  const int n = 5;
  for (int rep = 0; rep < 3000; ++rep) {
    const StateVector product = testing_oracles::random_product_state(n, eng);
    const auto gens_ghz = ghz_generators(n).generators();
    const auto gens_cluster = cluster_generators(n).generators();
    for (int m = 2; m <= n; ++m) {
      const double lhs = expectation(gens_ghz[0], product) +
                         expectation(gens_ghz[static_cast<std::size_t>(m - 1)],
                                     product);
      CHECK(lhs <= 1.0 + 1e-10);
    }
    for (int k = 1; k < n; ++k) {
      const double lhs =
          expectation(gens_cluster[static_cast<std::size_t>(k - 1)], product) +
          expectation(gens_cluster[static_cast<std::size_t>(k)], product);
      CHECK(lhs <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("mixtures of product states never violate the pair conditions") {
  std::mt19937_64 eng(61);
  const int n = 4;
  for (int rep = 0; rep < 1000; ++rep) {
    // Random convex mixture of three random product states.
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(16, 16);
    double weight_sum = 0.0;
    for (int term = 0; term < 3; ++term) {
      const double w = stabwit::uniform_double(eng) + 1e-3;
      const StateVector product = testing_oracles::random_product_state(n, eng);
      rho += w * (product.amplitudes * product.amplitudes.adjoint());
      weight_sum += w;
    }
    rho /= weight_sum;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    const DensityMatrix mixture(n, std::move(rho));
    for (int m = 2; m <= n; ++m) CHECK_FALSE(check_ghz(mixture, m).violated);
    for (int k = 1; k < n; ++k) CHECK_FALSE(check_cluster(mixture, k).violated);
  }
}

TEST_CASE("product-state maximum of generator pair sums is one") {
  ProductMaxConfig config;
  config.starts = 50;
  for (int n = 4; n <= 6; ++n) {
    const auto gens_ghz = ghz_generators(n).generators();
    for (int m = 2; m <= n; ++m) {
      ObservableSum pair(n, 0.0);
      pair.add(1.0, gens_ghz[0]);
      pair.add(1.0, gens_ghz[static_cast<std::size_t>(m - 1)]);
      CHECK(std::abs(product_state_max(pair, n, config).value - 1.0) < 1e-8);
    }
    const auto gens_cluster = cluster_generators(n).generators();
    for (int k = 1; k < n; ++k) {
      ObservableSum pair(n, 0.0);
      pair.add(1.0, gens_cluster[static_cast<std::size_t>(k - 1)]);
      pair.add(1.0, gens_cluster[static_cast<std::size_t>(k)]);
      CHECK(std::abs(product_state_max(pair, n, config).value - 1.0) < 1e-8);
    }
  }

  // Random connected graphs: neighboring generator pairs obey the same bound.
  std::mt19937_64 eng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(eng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(static_cast<int>(eng() % static_cast<std::uint64_t>(v)),
                         v);
    const GraphSpec g(n, std::move(edges));
    const auto gens = graph_generators(g).generators();
    for (const auto& [a, b] : g.edges()) {
      ObservableSum pair(n, 0.0);
      pair.add(1.0, gens[static_cast<std::size_t>(a)]);
      pair.add(1.0, gens[static_cast<std::size_t>(b)]);
      CHECK(std::abs(product_state_max(pair, n, config).value - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("single Pauli strings have product eigenstates") {
  std::mt19937_64 eng(71);
  ProductMaxConfig config;
  config.starts = 20;
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 4);
    PauliString p = testing_oracles::random_pauli(n, eng);
    if (p.is_identity_ops()) p.set_op(0, PauliOp::X);
    ObservableSum single(n, 0.0);
    single.add(1.0, p);
    CHECK(std::abs(product_state_max(single, n, config).value - 1.0) < 1e-8);
  }
}

TEST_CASE("alternating updates are monotone") {
  std::mt19937_64 eng(73);
  ProductMaxConfig config;
  config.starts = 5;
  config.track_history = true;
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(eng() % 2);
    ObservableSum obs(n, 0.0);
    for (int t = 0; t < 6; ++t) {
      PauliString p = testing_oracles::random_pauli(n, eng);
      if (p.is_identity_ops()) continue;
      obs.add(stabwit::uniform_double(eng) - 0.5, p);
    }
    if (obs.term_count() == 0) continue;
    const auto result = product_state_max(obs, n, config);
    REQUIRE(result.history.size() >= 2);
    for (std::size_t i = 1; i < result.history.size(); ++i)
      CHECK(result.history[i] >= result.history[i - 1] - 1e-12);
  }
}

TEST_CASE("no witness drives product or biseparable states negative") {
  ProductMaxConfig config;
  config.starts = 20;
  config.max_sweeps = 100;

  std::vector<WitnessSpec> specs;
  for (int n = 3; n <= 5; ++n) {
    specs.push_back({WitnessFamily::Ghz, n, std::nullopt});
    specs.push_back({WitnessFamily::GhzPrime, n, std::nullopt});
    specs.push_back({WitnessFamily::Cluster, n, std::nullopt});
    specs.push_back({WitnessFamily::Graph, n, GraphSpec::star(n)});
  }

  for (const auto& spec : specs) {
    const Witness w = build_witness(spec);
    // Fully product states.
    ObservableSum negated = w.observable;
    negated.scale(-1.0);
    CHECK(product_state_max(negated, spec.n_qubits, config).value <= 1e-6);
    // Products across every single bipartition.
    CHECK(biseparable_minimum(w.observable, spec.n_qubits, config) >= -1e-6);
  }
}

TEST_CASE("projector witness through the rank-1 path") {
  // max over product states of <GHZ><GHZ| - I/2> is exactly zero.
  ProductMaxConfig config;
  config.starts = 30;
  for (int n = 3; n <= 4; ++n) {
    ObservableSum offset(n, -0.5);
    std::vector<std::uint64_t> blocks;
    for (int k = 0; k < n; ++k) blocks.push_back(1ULL << k);
    const auto result = block_product_max(
        offset, blocks, config, {Rank1Term{1.0, ghz_state(n)}});
    CHECK(result.value <= 1e-6);
    CHECK(result.value >= -1e-6 - 0.5);  // sanity: bounded below by -1/2
  }
}

TEST_CASE("block masks are validated") {
  ObservableSum obs(3, 0.0);
  obs.add(1.0, PauliString::parse("XXI"));
  CHECK_THROWS_AS(block_product_max(obs, {0b011ULL}, {}), std::invalid_argument);
  CHECK_THROWS_AS(block_product_max(obs, {0b011ULL, 0b110ULL}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(product_state_max(ObservableSum(9, 0.0), 9, {}),
                  std::invalid_argument);
}
