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

#include "stabwit/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "stabwit/config.hpp"

namespace stabwit {

GraphSpec::GraphSpec(int n_vertices, std::vector<std::pair<int, int>> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 1 || n_ > kMaxQubits)
    throw std::invalid_argument("graph vertex count out of range");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw std::invalid_argument("graph edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self edges are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("duplicate graph edge");
  }
  std::sort(edges_.begin(), edges_.end());
  adjacency_.assign(static_cast<std::size_t>(n_), 0);
  for (const auto& [a, b] : edges_) {
    adjacency_[static_cast<std::size_t>(a)] |= 1ULL << b;
    adjacency_[static_cast<std::size_t>(b)] |= 1ULL << a;
  }
}

GraphSpec GraphSpec::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::ring(int n) {
  if (n < 3) throw std::invalid_argument("a ring needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(0, k);
  return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return GraphSpec(n, std::move(edges));
}

std::uint64_t GraphSpec::neighbors(int vertex) const {
  if (vertex < 0 || vertex >= n_)
    throw std::out_of_range("graph vertex out of range");
  return adjacency_[static_cast<std::size_t>(vertex)];
}

bool GraphSpec::has_edge(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw std::out_of_range("graph vertex out of range");
  return (adjacency_[static_cast<std::size_t>(a)] >> b) & 1ULL;
}

bool GraphSpec::connected() const {
  std::uint64_t visited = 1ULL;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    std::uint64_t next = adjacency_[static_cast<std::size_t>(v)] & ~visited;
    while (next) {
      const int w = std::countr_zero(next);
      next &= next - 1;
      visited |= 1ULL << w;
      frontier.push_back(w);
    }
  }
  const std::uint64_t all =
      n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  return visited == all;
}

GeneratorSet::GeneratorSet(int n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits), gens_(std::move(generators)) {
  if (static_cast<int>(gens_.size()) != n_)
    throw std::invalid_argument("generator count must equal qubit count");
  for (const auto& g : gens_) {
    if (g.size() != n_)
      throw std::invalid_argument("generator qubit count mismatch");
    if (!g.phase_is_real())
      throw std::invalid_argument(
          "generators must carry a real phase; an imaginary-phase Pauli "
          "cannot stabilize a state");
  }
}

ValidationReport validate(const GeneratorSet& gs) {
  ValidationReport report;
  const auto& gens = gs.generators();
  const int n = gs.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!gens[static_cast<std::size_t>(a)].commutes_with(
              gens[static_cast<std::size_t>(b)]))
        report.noncommuting_pairs.emplace_back(a, b);

  // Gaussian elimination on the (x|z) rows over GF(2).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (const auto& g : gens) rows.emplace_back(g.x_mask(), g.z_mask());
  int rank = 0;
  for (int col = 0; col < 2 * kMaxQubits && rank < n; ++col) {
    const bool use_x = col < kMaxQubits;
    const std::uint64_t bit = 1ULL << (use_x ? col : col - kMaxQubits);
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      const std::uint64_t val = use_x ? rows[static_cast<std::size_t>(r)].first
                                      : rows[static_cast<std::size_t>(r)].second;
      if (val & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)],
              rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      const std::uint64_t val = use_x ? rows[static_cast<std::size_t>(r)].first
                                      : rows[static_cast<std::size_t>(r)].second;
      if (val & bit) {
        rows[static_cast<std::size_t>(r)].first ^=
            rows[static_cast<std::size_t>(rank)].first;
        rows[static_cast<std::size_t>(r)].second ^=
            rows[static_cast<std::size_t>(rank)].second;
      }
    }
    ++rank;
  }
  report.gf2_rank = rank;
  report.independent = rank == n;
  return report;
}

GeneratorSet ghz_generators(int n) {
  if (n < 2) throw std::invalid_argument("GHZ generators need n >= 2");
  if (n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(n));
  PauliString all_x(n);
  for (int k = 0; k < n; ++k) all_x.set_op(k, PauliOp::X);
  gens.push_back(all_x);
  for (int k = 1; k < n; ++k) {
    PauliString zz(n);
    zz.set_op(k - 1, PauliOp::Z);
    zz.set_op(k, PauliOp::Z);
    gens.push_back(zz);
  }
  return GeneratorSet(n, std::move(gens));
}

GeneratorSet cluster_generators(int n) {
  if (n < 2) throw std::invalid_argument("cluster generators need n >= 2");
  if (n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    PauliString s(n);
    s.set_op(k, PauliOp::X);
    if (k > 0) s.set_op(k - 1, PauliOp::Z);
    if (k + 1 < n) s.set_op(k + 1, PauliOp::Z);
    gens.push_back(s);
  }
  return GeneratorSet(n, std::move(gens));
}

GeneratorSet graph_generators(const GraphSpec& g) {
  const int n = g.size();
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    PauliString s(n);
    s.set_op(k, PauliOp::X);
    std::uint64_t nb = g.neighbors(k);
    while (nb) {
      const int l = std::countr_zero(nb);
      nb &= nb - 1;
      s.set_op(l, PauliOp::Z);
    }
    gens.push_back(s);
  }
  return GeneratorSet(n, std::move(gens));
}

std::vector<PauliString> group_elements(const GeneratorSet& gs) {
  const int n = gs.size();
  if (n > 16)
    throw std::invalid_argument("stabilizer group expansion capped at n = 16");
  const auto report = validate(gs);
  if (!report.noncommuting_pairs.empty())
    throw std::invalid_argument("generators do not commute");
  if (!report.independent)
    throw std::invalid_argument("generators are dependent");
  const std::size_t count = std::size_t{1} << n;
  std::vector<PauliString> elements;
  elements.reserve(count);
  elements.emplace_back(n);  // identity
  for (std::size_t m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    elements.push_back(elements[m & (m - 1)] * gs.generator(low));
  }
  return elements;
}

}  // namespace stabwit
