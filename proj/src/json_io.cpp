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

#include "stabwit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace stabwit {

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  j["family"] = family_name(w.spec.family);
  j["n"] = w.spec.n_qubits;
  if (w.pauli_backed()) {
    j["identity_coeff"] = w.observable.identity_coeff();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : w.observable.terms()) {
      terms.push_back({{"coeff", term.coeff}, {"pauli", term.string.str()}});
    }
    j["terms"] = std::move(terms);
  } else {
    j["projector"] = {{"c_tilde", w.projector_constant}, {"target", "ghz"}};
  }
  if (w.spec.graph.has_value()) j["graph"] = graph_to_json(*w.spec.graph);
  return j;
}

ObservableSum observable_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  ObservableSum obs(n, j.at("identity_coeff").get<double>());
  for (const auto& term : j.at("terms")) {
    obs.add(term.at("coeff").get<double>(),
            PauliString::parse(term.at("pauli").get<std::string>()));
  }
  return obs;
}

nlohmann::json plan_to_json(const SettingPlan& plan) {
  nlohmann::json j;
  nlohmann::json settings = nlohmann::json::array();
  for (const auto& s : plan.settings) settings.push_back(s.str());
  j["settings"] = std::move(settings);
  j["assignment"] = plan.assignment;
  j["optimal"] = plan.optimal;
  if (plan.identity_terms > 0) j["identity_terms"] = plan.identity_terms;
  return j;
}

nlohmann::json estimate_to_json(const ShotEstimate& estimate,
                                const SettingPlan& plan) {
  nlohmann::json j;
  j["mean"] = estimate.mean;
  j["stderr"] = estimate.stderr_value;
  j["shots_per_setting"] = estimate.shots_per_setting;
  nlohmann::json settings = nlohmann::json::array();
  for (std::size_t s = 0; s < estimate.per_setting_counts.size(); ++s) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [outcome, count] : estimate.per_setting_counts[s])
      counts[outcome] = count;
    settings.push_back(
        {{"setting", plan.settings[s].str()}, {"counts", std::move(counts)}});
  }
  j["per_setting"] = std::move(settings);
  return j;
}

nlohmann::json threshold_to_json(const WitnessSpec& spec,
                                 const ThresholdResult& result) {
  nlohmann::json j;
  j["family"] = family_name(spec.family);
  j["n"] = spec.n_qubits;
  j["p_threshold"] = result.p_threshold;
  if (result.closed_form.has_value()) {
    j["closed_form"] = *result.closed_form;
    j["difference"] = std::abs(result.p_threshold - *result.closed_form);
  } else {
    j["closed_form"] = nullptr;
  }
  j["witness_at_zero"] = result.witness_at_zero;
  j["witness_at_one"] = result.witness_at_one;
  return j;
}

GraphSpec graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph edges must be [i, j] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return GraphSpec(n, std::move(edges));
}

nlohmann::json graph_to_json(const GraphSpec& g) {
  nlohmann::json j;
  j["n"] = g.size();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

GraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  nlohmann::json j;
  in >> j;
  return graph_from_json(j);
}

}  // namespace stabwit
