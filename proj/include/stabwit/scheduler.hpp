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

#include <optional>
#include <string>
#include <vector>

#include "stabwit/pauli.hpp"
#include "stabwit/stabilizer.hpp"

namespace stabwit {

/// One local measurement setting: a non-trivial single-qubit basis (X, Y or
/// Z) fixed at every site. All Pauli terms whose non-identity operators match
/// the setting site-wise come for free from the same shot record.
struct MeasurementSetting {
  std::vector<PauliOp> bases;  // no identity entries

  explicit MeasurementSetting(std::vector<PauliOp> b);
  static MeasurementSetting parse(const std::string& text);
  std::string str() const;
  int size() const { return static_cast<int>(bases.size()); }
};

bool compatible(const PauliString& term, const MeasurementSetting& setting);

struct SettingPlan {
  std::vector<MeasurementSetting> settings;
  // term index -> setting index; -1 for identity-only terms, which need no
  // measurement.
  std::vector<int> assignment;
  bool optimal = false;
  int identity_terms = 0;
};

// Groups the terms into the fewest local settings. Candidate settings are
// maximal site-wise merges of compatible terms; an exact set-cover search
// runs for up to 20 distinct non-identity terms, and a largest-uncovered-
// first greedy cover (optimal flag cleared unless the count hits a proven
// lower bound) beyond that. Unconstrained sites default to Z. Ties break
// toward the lexicographically smallest setting string.
SettingPlan min_settings(const std::vector<PauliString>& terms);

// BFS 2-coloring; empty when the graph has an odd cycle. Works per component.
std::optional<std::vector<int>> two_colorable(const GraphSpec& g);

// Two-setting plan for the graph witness of a two-colorable graph (one color
// class measures X while the other measures Z, then swapped); falls back to
// min_settings otherwise. The graph must be connected.
SettingPlan graph_witness_settings(const GraphSpec& g);

}  // namespace stabwit
