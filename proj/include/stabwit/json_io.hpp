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

#include <json.hpp>
#include <string>

#include "stabwit/sampling.hpp"
#include "stabwit/scheduler.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/witness.hpp"

namespace stabwit {

// Witness serialization: identity coefficient plus {coeff, pauli} terms in
// canonical order; the projector family carries its constant and target tag
// instead of terms.
nlohmann::json witness_to_json(const Witness& w);
ObservableSum observable_from_json(const nlohmann::json& j);

// Plan serialization: {"settings": [...], "assignment": [...], "optimal": b}.
nlohmann::json plan_to_json(const SettingPlan& plan);

nlohmann::json estimate_to_json(const ShotEstimate& estimate,
                                const SettingPlan& plan);

nlohmann::json threshold_to_json(const WitnessSpec& spec,
                                 const ThresholdResult& result);

// Graph format: {"n": <int>, "edges": [[i, j], ...]} with 0-based vertices;
// duplicate and self edges are rejected.
GraphSpec graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const GraphSpec& g);
GraphSpec load_graph_file(const std::string& path);

}  // namespace stabwit
