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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabwit/pauli.hpp"

namespace stabwit {

/// Simple graph on n vertices given by an edge list; vertices are 0-based.
/// Self edges and duplicate edges are rejected at construction.
class GraphSpec {
 public:
  GraphSpec(int n_vertices, std::vector<std::pair<int, int>> edges);

  static GraphSpec path(int n);
  static GraphSpec ring(int n);   // n >= 3
  static GraphSpec star(int n);   // center is vertex 0
  static GraphSpec complete(int n);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::uint64_t neighbors(int vertex) const;
  bool has_edge(int a, int b) const;
  bool connected() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;        // normalized (min, max)
  std::vector<std::uint64_t> adjacency_;          // neighbor site masks
};

/// An ordered list of n candidate stabilizer generators on n qubits, each
/// with a real (+/-1) phase. Shape is checked at construction; commutation
/// and independence are checked by validate() so that deliberately broken
/// sets can still be inspected.
class GeneratorSet {
 public:
  GeneratorSet(int n_qubits, std::vector<PauliString> generators);

  int size() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }
  const PauliString& generator(int k) const { return gens_[static_cast<std::size_t>(k)]; }

 private:
  int n_;
  std::vector<PauliString> gens_;
};

struct ValidationReport {
  std::vector<std::pair<int, int>> noncommuting_pairs;
  int gf2_rank = 0;
  bool independent = false;
  bool valid() const { return noncommuting_pairs.empty() && independent; }
};

// Commutation failures plus GF(2) rank of the symplectic (x|z) rows;
// dependence shows up as rank < n. Exact, no floating point.
ValidationReport validate(const GeneratorSet& gs);

// All-X string followed by the nearest-neighbor ZZ chain.
GeneratorSet ghz_generators(int n);
// X-Z at the left end, Z-X-Z in the chain interior, Z-X at the right end.
GeneratorSet cluster_generators(int n);
// X at vertex k, Z at each of its neighbors.
GeneratorSet graph_generators(const GraphSpec& g);

// All 2^n signed products in subset-bitmask order (bit k of the subset index
// selects generator k); element 0 is the identity. Requires a valid set and
// n <= 16.
std::vector<PauliString> group_elements(const GeneratorSet& gs);

}  // namespace stabwit
