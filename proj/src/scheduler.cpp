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

#include "stabwit/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace stabwit {

namespace {

// Site-wise operator pattern in (x|z) mask form; identity sites are free.
struct Pattern {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  std::uint64_t support() const { return x | z; }
  bool compatible_with(const Pattern& other) const {
    // Conflict: a site where both are non-identity and the operators differ.
    const std::uint64_t both = support() & other.support();
    return (both & ((x ^ other.x) | (z ^ other.z))) == 0;
  }
  void merge(const Pattern& other) {
    x |= other.x;
    z |= other.z;
  }
  bool operator==(const Pattern& other) const {
    return x == other.x && z == other.z;
  }
};

std::string pattern_string(const Pattern& p, int n) {
  std::string out(static_cast<std::size_t>(n), 'Z');
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = 1ULL << (n - 1 - k);
    if (p.x & bit)
      out[static_cast<std::size_t>(k)] = (p.z & bit) ? 'Y' : 'X';
    else if (p.z & bit)
      out[static_cast<std::size_t>(k)] = 'Z';
  }
  return out;  // unconstrained sites default to Z
}

// Exact minimum set cover by iterative deepening over candidate subsets.
struct ExactCover {
  const std::vector<std::uint32_t>& candidate_masks;
  std::uint32_t universe;
  std::vector<int> chosen;

  bool extend(std::uint32_t uncovered, int budget) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    const int element = std::countr_zero(uncovered);
    for (std::size_t c = 0; c < candidate_masks.size(); ++c) {
      if (!(candidate_masks[c] >> element & 1U)) continue;
      chosen.push_back(static_cast<int>(c));
      if (extend(uncovered & ~candidate_masks[c], budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<int> solve() {
    for (int k = 1; k <= static_cast<int>(candidate_masks.size()); ++k) {
      chosen.clear();
      if (extend(universe, k)) return chosen;
    }
    return {};
  }
};

// Bron-Kerbosch with pivoting over <= 32 vertices.
void maximal_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t r,
                     std::uint32_t p, std::uint32_t x,
                     std::vector<std::uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const std::uint32_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint32_t cand = px; cand;) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const int deg = std::popcount(p & adj[static_cast<std::size_t>(v)]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  std::uint32_t ext = p & ~adj[static_cast<std::size_t>(pivot)];
  while (ext) {
    const int v = std::countr_zero(ext);
    ext &= ext - 1;
    const std::uint32_t vbit = 1U << v;
    maximal_cliques(adj, r | vbit, p & adj[static_cast<std::size_t>(v)],
                    x & adj[static_cast<std::size_t>(v)], out);
    p &= ~vbit;
    x |= vbit;
  }
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::vector<PauliOp> b)
    : bases(std::move(b)) {
  if (bases.empty()) throw std::invalid_argument("empty measurement setting");
  for (const PauliOp op : bases)
    if (op == PauliOp::I)
      throw std::invalid_argument(
          "a measurement setting fixes a non-trivial basis at every site");
}

MeasurementSetting MeasurementSetting::parse(const std::string& text) {
  std::vector<PauliOp> ops;
  ops.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case 'X': ops.push_back(PauliOp::X); break;
      case 'Y': ops.push_back(PauliOp::Y); break;
      case 'Z': ops.push_back(PauliOp::Z); break;
      default:
        throw std::invalid_argument(std::string("invalid basis character '") +
                                    c + "'");
    }
  }
  return MeasurementSetting(std::move(ops));
}

std::string MeasurementSetting::str() const {
  std::string out;
  out.reserve(bases.size());
  for (const PauliOp op : bases) out += pauli_char(op);
  return out;
}

bool compatible(const PauliString& term, const MeasurementSetting& setting) {
  if (term.size() != setting.size())
    throw std::invalid_argument("term/setting length mismatch");
  for (int k = 0; k < term.size(); ++k) {
    const PauliOp op = term.op(k);
    if (op != PauliOp::I && op != setting.bases[static_cast<std::size_t>(k)])
      return false;
  }
  return true;
}

SettingPlan min_settings(const std::vector<PauliString>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty term list");
  const int n = terms.front().size();
  for (const auto& t : terms)
    if (t.size() != n)
      throw std::invalid_argument("terms have mismatched qubit counts");

  SettingPlan plan;
  plan.assignment.assign(terms.size(), -1);

  // Distinct non-identity patterns; identity terms need no measurement.
  std::vector<Pattern> patterns;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> pattern_index;
  for (const auto& t : terms) {
    if (t.is_identity_ops()) {
      ++plan.identity_terms;
      continue;
    }
    const auto key = std::make_pair(t.x_mask(), t.z_mask());
    if (pattern_index.emplace(key, static_cast<int>(patterns.size())).second)
      patterns.push_back(Pattern{t.x_mask(), t.z_mask()});
  }
  if (patterns.empty()) {
    plan.optimal = true;
    return plan;
  }

  const int count = static_cast<int>(patterns.size());
  bool exact = count <= 20;
  std::vector<Pattern> cover;

  if (exact) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(count), 0);
    for (int a = 0; a < count; ++a)
      for (int b = a + 1; b < count; ++b)
        if (patterns[static_cast<std::size_t>(a)].compatible_with(
                patterns[static_cast<std::size_t>(b)])) {
          adj[static_cast<std::size_t>(a)] |= 1U << b;
          adj[static_cast<std::size_t>(b)] |= 1U << a;
        }
    std::vector<std::uint32_t> cliques;
    const std::uint32_t universe =
        count == 32 ? ~0U : ((1U << count) - 1U);
    maximal_cliques(adj, 0, universe, 0, cliques);

    // Candidate = union pattern of a maximal clique; it covers that clique
    // exactly. Sort for deterministic search order: large first, then by
    // setting string.
    std::vector<std::pair<std::uint32_t, Pattern>> candidates;
    candidates.reserve(cliques.size());
    for (const std::uint32_t clique : cliques) {
      Pattern u;
      for (std::uint32_t rem = clique; rem;) {
        const int v = std::countr_zero(rem);
        rem &= rem - 1;
        u.merge(patterns[static_cast<std::size_t>(v)]);
      }
      candidates.emplace_back(clique, u);
    }
    std::sort(candidates.begin(), candidates.end(),
              [n](const auto& a, const auto& b) {
                const int ca = std::popcount(a.first);
                const int cb = std::popcount(b.first);
                if (ca != cb) return ca > cb;
                return pattern_string(a.second, n) < pattern_string(b.second, n);
              });
    std::vector<std::uint32_t> masks;
    masks.reserve(candidates.size());
    for (const auto& [mask, pattern] : candidates) masks.push_back(mask);
    ExactCover solver{masks, universe, {}};
    for (const int c : solver.solve())
      cover.push_back(candidates[static_cast<std::size_t>(c)].second);
  } else {
    // Greedy: per round, grow a maximal merge from every uncovered seed and
    // keep the one covering the most uncovered patterns.
    std::vector<bool> covered(static_cast<std::size_t>(count), false);
    int remaining = count;
    while (remaining > 0) {
      Pattern best{};
      int best_cover = -1;
      std::string best_str;
      for (int seed = 0; seed < count; ++seed) {
        if (covered[static_cast<std::size_t>(seed)]) continue;
        Pattern merged = patterns[static_cast<std::size_t>(seed)];
        for (int t = 0; t < count; ++t) {
          if (covered[static_cast<std::size_t>(t)] || t == seed) continue;
          if (merged.compatible_with(patterns[static_cast<std::size_t>(t)]))
            merged.merge(patterns[static_cast<std::size_t>(t)]);
        }
        int covers = 0;
        for (int t = 0; t < count; ++t)
          if (!covered[static_cast<std::size_t>(t)] &&
              merged.compatible_with(patterns[static_cast<std::size_t>(t)]))
            ++covers;
        const std::string s = pattern_string(merged, n);
        if (covers > best_cover || (covers == best_cover && s < best_str)) {
          best = merged;
          best_cover = covers;
          best_str = s;
        }
      }
      cover.push_back(best);
      for (int t = 0; t < count; ++t)
        if (!covered[static_cast<std::size_t>(t)] &&
            best.compatible_with(patterns[static_cast<std::size_t>(t)])) {
          covered[static_cast<std::size_t>(t)] = true;
          --remaining;
        }
    }
  }

  // Deterministic setting order, then assign each term to its first
  // compatible setting and drop anything left unused.
  std::vector<std::string> setting_strings;
  setting_strings.reserve(cover.size());
  for (const auto& p : cover) setting_strings.push_back(pattern_string(p, n));
  std::sort(setting_strings.begin(), setting_strings.end());
  setting_strings.erase(
      std::unique(setting_strings.begin(), setting_strings.end()),
      setting_strings.end());

  std::vector<MeasurementSetting> settings;
  settings.reserve(setting_strings.size());
  for (const auto& s : setting_strings)
    settings.push_back(MeasurementSetting::parse(s));

  std::vector<bool> used(settings.size(), false);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].is_identity_ops()) continue;
    for (std::size_t s = 0; s < settings.size(); ++s) {
      if (compatible(terms[t], settings[s])) {
        plan.assignment[t] = static_cast<int>(s);
        used[s] = true;
        break;
      }
    }
  }
  std::vector<int> remap(settings.size(), -1);
  for (std::size_t s = 0; s < settings.size(); ++s) {
    if (!used[s]) continue;
    remap[s] = static_cast<int>(plan.settings.size());
    plan.settings.push_back(settings[s]);
  }
  for (auto& a : plan.assignment)
    if (a >= 0) a = remap[static_cast<std::size_t>(a)];

  if (exact) {
    plan.optimal = true;
  } else {
    // A single incompatible pair forces at least two settings.
    bool incompatible_pair = false;
    for (int a = 0; a < count && !incompatible_pair; ++a)
      for (int b = a + 1; b < count && !incompatible_pair; ++b)
        if (!patterns[static_cast<std::size_t>(a)].compatible_with(
                patterns[static_cast<std::size_t>(b)]))
          incompatible_pair = true;
    const std::size_t lower_bound = incompatible_pair ? 2 : 1;
    plan.optimal = plan.settings.size() <= lower_bound;
  }
  return plan;
}

std::optional<std::vector<int>> two_colorable(const GraphSpec& g) {
  const int n = g.size();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] =
              1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] ==
                   color[static_cast<std::size_t>(v)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  return color;
}

SettingPlan graph_witness_settings(const GraphSpec& g) {
  if (!g.connected())
    throw std::invalid_argument("graph witness settings need a connected graph");
  const auto gens = graph_generators(g).generators();
  std::vector<PauliString> terms(gens.begin(), gens.end());

  const auto coloring = two_colorable(g);
  if (!coloring.has_value()) return min_settings(terms);

  const int n = g.size();
  std::vector<PauliOp> a(static_cast<std::size_t>(n));
  std::vector<PauliOp> b(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const bool first_class = (*coloring)[static_cast<std::size_t>(k)] == 0;
    a[static_cast<std::size_t>(k)] = first_class ? PauliOp::X : PauliOp::Z;
    b[static_cast<std::size_t>(k)] = first_class ? PauliOp::Z : PauliOp::X;
  }
  std::vector<MeasurementSetting> settings{MeasurementSetting(std::move(a)),
                                           MeasurementSetting(std::move(b))};
  std::sort(settings.begin(), settings.end(),
            [](const MeasurementSetting& lhs, const MeasurementSetting& rhs) {
              return lhs.str() < rhs.str();
            });

  SettingPlan plan;
  plan.optimal = true;
  plan.assignment.assign(terms.size(), -1);
  std::vector<bool> used(settings.size(), false);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (std::size_t s = 0; s < settings.size(); ++s) {
      if (compatible(terms[t], settings[s])) {
        plan.assignment[t] = static_cast<int>(s);
        used[s] = true;
        break;
      }
    }
    if (plan.assignment[t] < 0)
      throw std::logic_error("two-coloring failed to cover a generator");
  }
  std::vector<int> remap(settings.size(), -1);
  for (std::size_t s = 0; s < settings.size(); ++s) {
    if (!used[s]) continue;
    remap[s] = static_cast<int>(plan.settings.size());
    plan.settings.push_back(settings[s]);
  }
  for (auto& asg : plan.assignment)
    if (asg >= 0) asg = remap[static_cast<std::size_t>(asg)];
  return plan;
}

}  // namespace stabwit
