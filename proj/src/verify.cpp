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

#include "stabwit/verify.hpp"

#include <cmath>
#include <sstream>

#include "stabwit/config.hpp"
#include "stabwit/separability.hpp"

namespace stabwit {

namespace {

GeneratorSet family_generators(const WitnessSpec& spec) {
  switch (spec.family) {
    case WitnessFamily::Cluster:
    case WitnessFamily::ClusterPrime:
      return cluster_generators(spec.n_qubits);
    case WitnessFamily::Graph:
      return graph_generators(*spec.graph);
    default:
      return ghz_generators(spec.n_qubits);
  }
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(15);
  out << v;
  return out.str();
}

}  // namespace

std::vector<CheckResult> run_verification(const WitnessSpec& spec) {
  std::vector<CheckResult> results;
  const int n = spec.n_qubits;
  const StateVector target = target_state(spec);
  const GeneratorSet gens = family_generators(spec);

  {
    CheckResult check{"stabilization", true, ""};
    double worst = 0.0;
    for (const auto& g : gens.generators())
      worst = std::max(worst, std::abs(expectation(g, target) - 1.0));
    check.passed = worst < 1e-12;
    check.detail = "max |<S_k> - 1| = " + format_double(worst);
    results.push_back(std::move(check));
  }

  if (spec.family != WitnessFamily::Projector && n <= dense_cap()) {
    CheckResult check{"finer-witness dominance", true, ""};
    const double alpha = spec.family == WitnessFamily::Mermin3 ? 4.0 : 2.0;
    const Witness w = build_witness(spec);
    const bool ghz_diag = spec.family == WitnessFamily::Ghz ||
                          spec.family == WitnessFamily::GhzPrime ||
                          spec.family == WitnessFamily::Ghz3 ||
                          spec.family == WitnessFamily::Mermin3;
    std::vector<StateVector> basis;
    if (ghz_diag) basis = ghz_basis(n);
    const FinerThanReport report =
        finer_than_check(w, target, alpha, ghz_diag ? &basis : nullptr);
    check.passed = report.positive_semidefinite;
    check.detail = "alpha = " + format_double(alpha) +
                   ", min eigenvalue = " + format_double(report.min_eigenvalue);
    if (report.max_off_diagonal.has_value()) {
      check.passed = check.passed && *report.max_off_diagonal < 1e-10;
      check.detail +=
          ", max off-diagonal in the GHZ eigenbasis = " +
          format_double(*report.max_off_diagonal);
    }
    results.push_back(std::move(check));
  }

  {
    CheckResult check{"overlap bound", true, ""};
    const auto proj = projector_witness(target);
    const double err = std::abs(proj.c_tilde - 0.5);
    check.passed = err < 1e-10;
    check.detail = "c_tilde = " + format_double(proj.c_tilde);
    results.push_back(std::move(check));
  }

  if (n <= 8) {
    CheckResult check{"product-state pair bounds", true, ""};
    double worst = 0.0;
    ProductMaxConfig config;
    auto run_pair = [&](int a, int b) {
      ObservableSum pair_sum(n, 0.0);
      pair_sum.add(1.0, gens.generator(a));
      pair_sum.add(1.0, gens.generator(b));
      const auto result = product_state_max(pair_sum, n, config);
      worst = std::max(worst, std::abs(result.value - 1.0));
    };
    switch (spec.family) {
      case WitnessFamily::Cluster:
      case WitnessFamily::ClusterPrime:
        for (int k = 0; k + 1 < n; ++k) run_pair(k, k + 1);
        break;
      case WitnessFamily::Graph:
        for (const auto& [a, b] : spec.graph->edges()) run_pair(a, b);
        break;
      default:
        for (int m = 1; m < n; ++m) run_pair(0, m);
        break;
    }
    check.passed = worst < 1e-8;
    check.detail = "max |max_product <S_a + S_b> - 1| = " + format_double(worst);
    results.push_back(std::move(check));
  }

  return results;
}

}  // namespace stabwit
