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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabwit/pauli.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

/// Outcome of one necessary-condition check for full separability: the sum
/// of two generator expectation values against the bound 1. A value above
/// the bound certifies entanglement (not necessarily multipartite).
struct ConditionReport {
  double lhs = 0.0;
  double bound = 1.0;
  bool violated = false;  // lhs > bound + 1e-12
  std::pair<int, int> pair{0, 0};
};

// <S_1> + <S_m> over the GHZ generators, m in 2..N (generator positions are
// 1-based, matching the construction order).
ConditionReport check_ghz(const DensityMatrix& rho, int m);
// <S_k> + <S_{k+1}> over the cluster generators, k in 1..N-1.
ConditionReport check_cluster(const DensityMatrix& rho, int k);
// <S_k> + <S_m> over the graph generators for neighboring vertices (0-based,
// matching the graph file format).
ConditionReport check_graph(const DensityMatrix& rho, const GraphSpec& g,
                            int k, int m);

struct ProductMaxConfig {
  int starts = 50;
  int max_sweeps = 200;
  double tolerance = 1e-10;
  std::uint64_t seed = 0x5eedULL;
  bool track_history = false;  // records the best start's objective per sweep
};

struct ProductMaxResult {
  double value = 0.0;
  std::vector<Eigen::VectorXcd> block_states;
  std::vector<std::uint64_t> blocks;  // site masks
  std::vector<double> history;
};

// Dense-backed rank-1 contribution coeff * |state><state| for observables
// (like projector witnesses) that have no Pauli expansion.
struct Rank1Term {
  double coeff;
  StateVector state;
};

// Maximizes <prod_b psi_b| O |prod_b psi_b> over states that factorize along
// the given site blocks, by multi-start alternating eigenvector updates: with
// all blocks but one fixed, the optimum for the free block is the top
// eigenvector of its effective operator. Each update is a constrained
// maximum, so sweeps are monotone non-decreasing.
ProductMaxResult block_product_max(const ObservableSum& o,
                                   const std::vector<std::uint64_t>& blocks,
                                   const ProductMaxConfig& config = {},
                                   const std::vector<Rank1Term>& rank1 = {});

// Fully product states (singleton blocks); capped at n = 8.
ProductMaxResult product_state_max(const ObservableSum& o, int n,
                                   const ProductMaxConfig& config = {});

// Minimum of the observable over states product across any single
// bipartition: min over cuts containing site 0 of -max<-O>. Used to verify
// witness nonnegativity on biseparable states.
double biseparable_minimum(const ObservableSum& o, int n,
                           const ProductMaxConfig& config = {});

}  // namespace stabwit
