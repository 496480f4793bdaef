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

#include "stabwit/dense.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

// Witness constructions. A negative expectation value certifies genuine
// multipartite entanglement for every family except Projector, whose
// certificate is inherited from the projector bound directly.
//
//   Ghz          3I - 2[(S1+I)/2 + prod_{k>=2} (Sk+I)/2] on GHZ generators
//   GhzPrime     (N-1)I - sum_k Sk on GHZ generators
//   Ghz3         the N=3 expansion of Ghz, constructed literally
//   Mermin3      2I - S1(I+S2)(I+S3) on GHZ generators, N=3
//   Cluster      3I - 2[prod_{even k} (Sk+I)/2 + prod_{odd k} (Sk+I)/2]
//   ClusterPrime (N-1)I - sum_k Sk on cluster generators
//   Graph        (N-1)I - sum_k Sk on graph generators
//   Projector    c~ I - |target><target|, dense-backed (no Pauli expansion)
enum class WitnessFamily {
  Ghz,
  GhzPrime,
  Ghz3,
  Mermin3,
  Cluster,
  ClusterPrime,
  Graph,
  Projector,
};

std::string family_name(WitnessFamily family);
std::optional<WitnessFamily> family_from_name(const std::string& name);

struct WitnessSpec {
  WitnessFamily family;
  int n_qubits = 0;
  std::optional<GraphSpec> graph;  // Graph family only
};

struct Witness {
  WitnessSpec spec;
  ObservableSum observable;  // fully expanded; empty for Projector
  std::optional<StateVector> projector_target;
  double projector_constant = 0.0;

  bool pauli_backed() const { return !projector_target.has_value(); }
};

// Fully expanded canonical construction. Product factors (S+I)/2 are
// multiplied out through the Pauli algebra; expanded families are capped at
// n = 16 (2^(n-1) terms).
Witness build_witness(const WitnessSpec& spec);

// The family's target state: GHZ, generator-stabilized cluster, or the
// graph state.
StateVector target_state(const WitnessSpec& spec);

double evaluate(const Witness& w, const DensityMatrix& rho);
double evaluate(const Witness& w, const StateVector& psi);

DenseOperator witness_to_dense(const Witness& w);

struct ThresholdResult {
  double p_threshold = 0.0;
  std::optional<double> closed_form;
  double witness_at_zero = 0.0;
  double witness_at_one = 0.0;
};

// Tr(rho(p) W) is affine in p, so the root is exact:
// p* = e0 / (e0 - e1) with e0 the value on the pure target and e1 the value
// on the maximally mixed state (the identity coefficient; every non-identity
// Pauli string is traceless). Known closed forms are attached per family.
ThresholdResult noise_threshold(const WitnessSpec& spec);

// Root of the affine function through (0, at_zero) and (1, at_one); requires
// at_zero < 0 <= at_one.
double solve_threshold(double at_zero, double at_one);

std::optional<double> closed_form_threshold(const WitnessSpec& spec);

struct FinerThanReport {
  double alpha = 0.0;
  double min_eigenvalue = 0.0;
  bool positive_semidefinite = false;  // at tolerance -1e-10
  std::optional<Eigen::VectorXd> basis_diagonal;
  std::optional<double> max_off_diagonal;
};

// Spectrum check of X = W - alpha (I/2 - |target><target|). When a basis is
// supplied (the GHZ eigenbasis for GHZ-family witnesses), X is conjugated
// into it and the diagonal plus the largest off-diagonal magnitude are
// reported.
FinerThanReport finer_than_check(const Witness& w, const StateVector& target,
                                 double alpha = 2.0,
                                 const std::vector<StateVector>* basis = nullptr);

struct ProjectorWitnessResult {
  double c_tilde = 0.0;          // max over bipartitions of schmidt_max^2
  std::uint64_t worst_partition = 0;
  StateVector target;

  DenseOperator dense() const;   // c~ I - |target><target|
};

ProjectorWitnessResult projector_witness(const StateVector& target);

}  // namespace stabwit
