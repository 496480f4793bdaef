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

#include "stabwit/separability.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stabwit/kernels.hpp"
#include "stabwit/rng.hpp"

namespace stabwit {

namespace {

ConditionReport make_report(double lhs, std::pair<int, int> pair) {
  ConditionReport report;
  report.lhs = lhs;
  report.bound = 1.0;
  report.violated = lhs > report.bound + 1e-12;
  report.pair = pair;
  return report;
}

// Precomputed structure for scattering a block's sub-index into full indices,
// and for restricting Pauli terms to a block.
struct Block {
  std::uint64_t site_mask;
  std::uint64_t index_mask;      // same sites as full-index bits
  std::vector<int> index_bits;   // full-index bit positions, block-local order
  Eigen::Index dim;
};

Block make_block(std::uint64_t site_mask, int n) {
  Block block;
  block.site_mask = site_mask;
  block.index_mask = 0;
  for (int k = 0; k < n; ++k)
    if (site_mask & (1ULL << k)) block.index_bits.push_back(n - 1 - k);
  for (const int b : block.index_bits) block.index_mask |= 1ULL << b;
  block.dim = Eigen::Index{1} << block.index_bits.size();
  return block;
}

// Haar-random block state from two independent Gaussians per amplitude.
Eigen::VectorXcd random_block_state(Eigen::Index dim, std::mt19937_64& eng) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    v[j] = std::complex<double>(normal_double(eng), normal_double(eng));
  return v / v.norm();
}

struct TermData {
  double coeff;
  // Restriction of the term to each block, as a dense matrix (small dims).
  std::vector<Eigen::MatrixXcd> block_ops;
  std::vector<bool> trivial;  // identity on that block
};

}  // namespace

ConditionReport check_ghz(const DensityMatrix& rho, int m) {
  const int n = rho.n_qubits;
  if (m < 2 || m > n)
    throw std::invalid_argument("generator index m must lie in 2..N");
  const auto gens = ghz_generators(n).generators();
  const double lhs = expectation(gens[0], rho) +
                     expectation(gens[static_cast<std::size_t>(m - 1)], rho);
  return make_report(lhs, {1, m});
}

ConditionReport check_cluster(const DensityMatrix& rho, int k) {
  const int n = rho.n_qubits;
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("generator index k must lie in 1..N-1");
  const auto gens = cluster_generators(n).generators();
  const double lhs = expectation(gens[static_cast<std::size_t>(k - 1)], rho) +
                     expectation(gens[static_cast<std::size_t>(k)], rho);
  return make_report(lhs, {k, k + 1});
}

ConditionReport check_graph(const DensityMatrix& rho, const GraphSpec& g,
                            int k, int m) {
  if (g.size() != rho.n_qubits)
    throw std::invalid_argument("graph/state qubit count mismatch");
  if (!g.has_edge(k, m))
    throw std::invalid_argument(
        "the separability condition needs neighboring vertices");
  const auto gens = graph_generators(g).generators();
  const double lhs = expectation(gens[static_cast<std::size_t>(k)], rho) +
                     expectation(gens[static_cast<std::size_t>(m)], rho);
  return make_report(lhs, {k, m});
}

ProductMaxResult block_product_max(const ObservableSum& o,
                                   const std::vector<std::uint64_t>& blocks,
                                   const ProductMaxConfig& config,
                                   const std::vector<Rank1Term>& rank1) {
  const int n = o.size();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  std::uint64_t seen = 0;
  for (const std::uint64_t mask : blocks) {
    if ((mask & all) == 0 || (mask & ~all) != 0)
      throw std::invalid_argument("invalid block site mask");
    if (mask & seen) throw std::invalid_argument("blocks overlap");
    seen |= mask;
  }
  if (seen != all) throw std::invalid_argument("blocks must cover every site");
  for (const auto& r : rank1)
    if (r.state.n_qubits != n)
      throw std::invalid_argument("rank-1 term qubit count mismatch");

  const std::size_t nb = blocks.size();
  std::vector<Block> block_info;
  block_info.reserve(nb);
  for (const std::uint64_t mask : blocks) block_info.push_back(make_block(mask, n));

  const auto obs_terms = o.terms();
  std::vector<TermData> terms;
  terms.reserve(obs_terms.size());
  for (const auto& term : obs_terms) {
    TermData data;
    data.coeff = term.coeff;
    data.block_ops.reserve(nb);
    data.trivial.reserve(nb);
    for (const auto& block : block_info) {
      const bool is_trivial =
          (term.string.support_mask() & block.index_mask) == 0;
      data.trivial.push_back(is_trivial);
      if (is_trivial) {
        data.block_ops.emplace_back();
        continue;
      }
      const PauliString sub = term.string.restrict_to_sites(block.site_mask);
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(block.dim, block.dim);
      kernels::serial::accumulate_pauli(m, {1.0, 0.0}, sub);
      data.block_ops.push_back(std::move(m));
    }
    terms.push_back(std::move(data));
  }

  const Eigen::Index full_dim = Eigen::Index{1} << n;

  struct StartResult {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<Eigen::VectorXcd> states;
    std::vector<double> history;
  };
  std::vector<StartResult> outcomes(static_cast<std::size_t>(config.starts));

  // Starts are independent; each derives its own generator stream.
#pragma omp parallel for schedule(dynamic)
  for (int start = 0; start < config.starts; ++start) {
    std::mt19937_64 eng(derive_stream_seed(config.seed, static_cast<std::uint64_t>(start)));
    std::vector<Eigen::VectorXcd> states;
    states.reserve(nb);
    for (const auto& block : block_info)
      states.push_back(random_block_state(block.dim, eng));

    // brackets[t][b] = <psi_b| term_t restricted to b |psi_b>
    std::vector<std::vector<std::complex<double>>> brackets(
        terms.size(), std::vector<std::complex<double>>(nb, {1.0, 0.0}));
    auto refresh_brackets = [&](std::size_t b) {
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (terms[t].trivial[b]) {
          brackets[t][b] = {1.0, 0.0};
        } else {
          brackets[t][b] =
              states[b].dot(terms[t].block_ops[b] * states[b]);
        }
      }
    };
    for (std::size_t b = 0; b < nb; ++b) refresh_brackets(b);

    auto objective = [&]() {
      double value = o.identity_coeff();
      for (std::size_t t = 0; t < terms.size(); ++t) {
        std::complex<double> prod{1.0, 0.0};
        for (std::size_t b = 0; b < nb; ++b) prod *= brackets[t][b];
        value += terms[t].coeff * prod.real();
      }
      for (const auto& r : rank1) {
        // |<state|prod psi>|^2 via the scattered product amplitudes.
        std::complex<double> ov{0.0, 0.0};
        for (Eigen::Index j = 0; j < full_dim; ++j) {
          std::complex<double> amp{1.0, 0.0};
          for (std::size_t b = 0; b < nb; ++b) {
            std::uint64_t sub = 0;
            for (std::size_t i = 0; i < block_info[b].index_bits.size(); ++i)
              if (static_cast<std::uint64_t>(j) &
                  (1ULL << block_info[b].index_bits[i]))
                sub |= 1ULL << i;
            amp *= states[b][static_cast<Eigen::Index>(sub)];
          }
          ov += std::conj(r.state.amplitudes[j]) * amp;
        }
        value += r.coeff * std::norm(ov);
      }
      return value;
    };

    double current = objective();
    std::vector<double> history{current};
    for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
      for (std::size_t b = 0; b < nb; ++b) {
        Eigen::MatrixXcd effective =
            Eigen::MatrixXcd::Zero(block_info[b].dim, block_info[b].dim);
        for (std::size_t t = 0; t < terms.size(); ++t) {
          if (terms[t].trivial[b]) continue;
          std::complex<double> prod{1.0, 0.0};
          for (std::size_t bb = 0; bb < nb; ++bb)
            if (bb != b) prod *= brackets[t][bb];
          effective += (terms[t].coeff * prod.real()) * terms[t].block_ops[b];
        }
        for (const auto& r : rank1) {
          // phi_b = partial overlap of the target with the other blocks.
          Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(block_info[b].dim);
          for (Eigen::Index j = 0; j < full_dim; ++j) {
            std::complex<double> amp{1.0, 0.0};
            std::uint64_t own_sub = 0;
            for (std::size_t bb = 0; bb < nb; ++bb) {
              std::uint64_t sub = 0;
              for (std::size_t i = 0; i < block_info[bb].index_bits.size(); ++i)
                if (static_cast<std::uint64_t>(j) &
                    (1ULL << block_info[bb].index_bits[i]))
                  sub |= 1ULL << i;
              if (bb == b)
                own_sub = sub;
              else
                amp *= std::conj(states[bb][static_cast<Eigen::Index>(sub)]);
            }
            phi[static_cast<Eigen::Index>(own_sub)] +=
                amp * r.state.amplitudes[j];
          }
          effective += r.coeff * (phi * phi.adjoint());
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            0.5 * (effective + effective.adjoint()));
        states[b] = solver.eigenvectors().col(block_info[b].dim - 1);
        refresh_brackets(b);
      }
      const double next = objective();
      history.push_back(next);
      if (next - current < config.tolerance) {
        current = next;
        break;
      }
      current = next;
    }

    StartResult& outcome = outcomes[static_cast<std::size_t>(start)];
    outcome.value = current;
    outcome.states = std::move(states);
    if (config.track_history) outcome.history = std::move(history);
  }

  ProductMaxResult best;
  best.value = -std::numeric_limits<double>::infinity();
  best.blocks = blocks;
  for (auto& outcome : outcomes) {
    if (outcome.value > best.value) {
      best.value = outcome.value;
      best.block_states = std::move(outcome.states);
      best.history = std::move(outcome.history);
    }
  }
  return best;
}

ProductMaxResult product_state_max(const ObservableSum& o, int n,
                                   const ProductMaxConfig& config) {
  if (o.size() != n)
    throw std::invalid_argument("observable qubit count mismatch");
  if (n > 8)
    throw std::invalid_argument("product-state optimization capped at n = 8");
  std::vector<std::uint64_t> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) blocks.push_back(1ULL << k);
  return block_product_max(o, blocks, config);
}

double biseparable_minimum(const ObservableSum& o, int n,
                           const ProductMaxConfig& config) {
  if (o.size() != n)
    throw std::invalid_argument("observable qubit count mismatch");
  if (n < 2) throw std::invalid_argument("biseparable check needs n >= 2");
  ObservableSum negated = o;
  negated.scale(-1.0);
  const std::uint64_t all = (1ULL << n) - 1;
  double minimum = std::numeric_limits<double>::infinity();
  const std::uint64_t rest_count = 1ULL << (n - 1);
  for (std::uint64_t rest = 0; rest + 1 < rest_count; ++rest) {
    const std::uint64_t mask = 1ULL | (rest << 1);
    const auto result =
        block_product_max(negated, {mask, all & ~mask}, config);
    minimum = std::min(minimum, -result.value);
  }
  return minimum;
}

}  // namespace stabwit
