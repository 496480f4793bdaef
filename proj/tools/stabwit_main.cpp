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

#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stabwit/config.hpp"
#include "stabwit/json_io.hpp"
#include "stabwit/sampling.hpp"
#include "stabwit/scheduler.hpp"
#include "stabwit/separability.hpp"
#include "stabwit/verify.hpp"
#include "stabwit/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string family;
  int n = 0;
  std::string graph_path;
  double p = 0.0;
  std::string p_grid;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "json";
  int dense_cap_override = 0;
};

// Shortest round-trip decimal form; stream formatting depends on locale and
// precision flags, std::to_chars does not.
std::string double_to_string(double v) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

stabwit::WitnessSpec make_spec(const RunConfig& config) {
  const auto family = stabwit::family_from_name(config.family);
  if (!family.has_value())
    throw std::invalid_argument("unknown family '" + config.family + "'");

  stabwit::WitnessSpec spec;
  spec.family = *family;
  if (*family == stabwit::WitnessFamily::Graph) {
    if (config.graph_path.empty())
      throw std::invalid_argument("the graph family needs --graph <file>");
    spec.graph = stabwit::load_graph_file(config.graph_path);
    spec.n_qubits = spec.graph->size();
    if (config.n != 0 && config.n != spec.n_qubits)
      throw std::invalid_argument("--n disagrees with the graph file");
  } else {
    if (!config.graph_path.empty())
      throw std::invalid_argument("--graph is only valid with --family graph");
    if (config.n == 0)
      throw std::invalid_argument("--n is required for this family");
    spec.n_qubits = config.n;
  }
  return spec;
}

std::vector<double> parse_grid(const std::string& grid) {
  // a:b:steps with inclusive endpoints; steps is the number of points.
  const auto first = grid.find(':');
  const auto second = grid.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("--p-grid expects a:b:steps");
  const double a = std::stod(grid.substr(0, first));
  const double b = std::stod(grid.substr(first + 1, second - first - 1));
  const int steps = std::stoi(grid.substr(second + 1));
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    values.push_back(steps == 1
                         ? a
                         : a + (b - a) * static_cast<double>(i) /
                                   static_cast<double>(steps - 1));
  }
  return values;
}

stabwit::SettingPlan plan_for(const stabwit::WitnessSpec& spec,
                              const stabwit::Witness& witness) {
  if (spec.family == stabwit::WitnessFamily::Graph)
    return stabwit::graph_witness_settings(*spec.graph);
  if (!witness.pauli_backed())
    throw std::invalid_argument(
        "the projector witness has no local Pauli decomposition; settings "
        "and sampling are not available for it");
  return stabwit::min_settings(witness.observable.term_strings());
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_build(const RunConfig& config) {
  const auto spec = make_spec(config);
  const auto witness = stabwit::build_witness(spec);
  print_json(stabwit::witness_to_json(witness));
  return kExitOk;
}

int cmd_eval(const RunConfig& config) {
  const auto spec = make_spec(config);
  const auto witness = stabwit::build_witness(spec);
  const auto target = stabwit::target_state(spec);

  std::vector<double> grid;
  if (!config.p_grid.empty())
    grid = parse_grid(config.p_grid);
  else
    grid.push_back(config.p);

  struct Row {
    double p, value;
    bool detected;
  };
  std::vector<Row> rows;
  rows.reserve(grid.size());
  for (const double p : grid) {
    const auto rho = stabwit::noisy_mixture(target, p);
    const double value = stabwit::evaluate(witness, rho);
    rows.push_back({p, value, value < 0.0});
  }

  if (config.format == "csv") {
    std::cout << "p,value,detected\n";
    for (const auto& row : rows)
      std::cout << double_to_string(row.p) << ',' << double_to_string(row.value)
                << ',' << (row.detected ? "true" : "false") << "\n";
  } else if (rows.size() == 1) {
    nlohmann::json j{{"family", stabwit::family_name(spec.family)},
                     {"n", spec.n_qubits},
                     {"p", rows[0].p},
                     {"value", rows[0].value},
                     {"detected", rows[0].detected},
                     {"verdict", rows[0].detected ? "detected" : "not detected"}};
    print_json(j);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows)
      arr.push_back(
          {{"p", row.p}, {"value", row.value}, {"detected", row.detected}});
    print_json(arr);
  }
  return kExitOk;
}

int cmd_threshold(const RunConfig& config) {
  const auto spec = make_spec(config);
  const auto result = stabwit::noise_threshold(spec);
  if (config.format == "csv") {
    std::cout << "family,n,p_threshold,closed_form,difference\n";
    std::cout << stabwit::family_name(spec.family) << ',' << spec.n_qubits
              << ',' << double_to_string(result.p_threshold) << ',';
    if (result.closed_form.has_value())
      std::cout << double_to_string(*result.closed_form) << ','
                << double_to_string(
                       std::abs(result.p_threshold - *result.closed_form));
    else
      std::cout << ',';
    std::cout << "\n";
  } else {
    print_json(stabwit::threshold_to_json(spec, result));
  }
  return kExitOk;
}

int cmd_settings(const RunConfig& config) {
  const auto spec = make_spec(config);
  const auto witness = stabwit::build_witness(spec);
  const auto plan = plan_for(spec, witness);
  nlohmann::json j = stabwit::plan_to_json(plan);
  j["two_settings"] = plan.settings.size() == 2;
  print_json(j);
  return kExitOk;
}

int cmd_sample(const RunConfig& config) {
  if (!config.seed_set)
    throw std::invalid_argument("--seed is required for sampling");
  if (config.shots == 0)
    throw std::invalid_argument("--shots is required for sampling");
  const auto spec = make_spec(config);
  const auto witness = stabwit::build_witness(spec);
  const auto plan = plan_for(spec, witness);
  const auto target = stabwit::target_state(spec);
  const auto rho = stabwit::noisy_mixture(target, config.p);
  const auto estimate = stabwit::estimate_observable(
      witness.observable, plan, rho, config.shots, config.seed);
  nlohmann::json j = stabwit::estimate_to_json(estimate, plan);
  j["family"] = stabwit::family_name(spec.family);
  j["n"] = spec.n_qubits;
  j["p"] = config.p;
  j["seed"] = config.seed;
  print_json(j);
  return kExitOk;
}

int cmd_verify(const RunConfig& config) {
  const auto spec = make_spec(config);
  const auto results = stabwit::run_verification(spec);
  bool all_passed = true;
  for (const auto& check : results) {
    std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << ": "
              << check.detail << "\n";
    all_passed = all_passed && check.passed;
  }
  std::cout << (all_passed ? "verification passed" : "verification FAILED")
            << "\n";
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer entanglement witness toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&config](CLI::App* cmd, bool needs_target) {
    if (needs_target) {
      cmd->add_option("--family", config.family,
                      "witness family: ghz|ghz-prime|ghz3|mermin3|cluster|"
                      "cluster-prime|graph|projector")
          ->required();
      cmd->add_option("--n", config.n, "qubit count");
      cmd->add_option("--graph", config.graph_path,
                      "graph file (JSON: {\"n\":, \"edges\": [[i,j],...]})");
    }
    cmd->add_option("--dense-cap", config.dense_cap_override,
                    "override the dense operator qubit cap (default 12)");
    cmd->add_option("--format", config.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* build = app.add_subcommand(
      "build", "print the expanded witness terms and identity coefficient");
  add_common(build, true);

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate the witness on the noisy target state");
  add_common(eval, true);
  eval->add_option("--p", config.p, "white-noise fraction in [0,1]");
  eval->add_option("--p-grid", config.p_grid, "noise scan a:b:steps");

  CLI::App* threshold = app.add_subcommand(
      "threshold", "solve the noise threshold and compare the closed form");
  add_common(threshold, true);

  CLI::App* settings = app.add_subcommand(
      "settings", "group witness terms into minimal measurement settings");
  add_common(settings, true);

  CLI::App* sample = app.add_subcommand(
      "sample", "simulate finite-shot estimation of the witness");
  add_common(sample, true);
  sample->add_option("--p", config.p, "white-noise fraction in [0,1]");
  sample->add_option("--shots", config.shots, "shots per setting");
  sample->add_option("--seed", config.seed, "master random seed")
      ->each([&config](const std::string&) { config.seed_set = true; });

  CLI::App* verify = app.add_subcommand(
      "verify", "run the per-family property battery; nonzero exit on failure");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (config.dense_cap_override > 0)
      stabwit::set_dense_cap(config.dense_cap_override);
    if (build->parsed()) return cmd_build(config);
    if (eval->parsed()) return cmd_eval(config);
    if (threshold->parsed()) return cmd_threshold(config);
    if (settings->parsed()) return cmd_settings(config);
    if (sample->parsed()) return cmd_sample(config);
    if (verify->parsed()) return cmd_verify(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
