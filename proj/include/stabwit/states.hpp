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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "stabwit/dense.hpp"
#include "stabwit/pauli.hpp"
#include "stabwit/stabilizer.hpp"

namespace stabwit {

/// Normalized pure state on n qubits. Site 0 is the most significant bit of
/// the amplitude index, matching the Pauli text convention.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  int n_qubits = 0;

  StateVector(int n, Eigen::VectorXcd amps);
  static StateVector zero_state(int n);  // |0...0>
};

/// Hermitian, unit-trace 2^n x 2^n matrix. Positivity is checked on demand
/// (min_eigenvalue) rather than at every construction.
struct DensityMatrix {
  Eigen::MatrixXcd matrix;
  int n_qubits = 0;

  DensityMatrix(int n, Eigen::MatrixXcd m);
  double min_eigenvalue() const;
};

// (|0...0> + |1...1>)/sqrt(2); requires 2 <= n <= state cap.
StateVector ghz_state(int n);

// The unique common +1 eigenstate of a valid generator set, found by
// projecting a computational basis state with each (I + S_k)/2 factor and
// normalizing. The global phase makes the first nonzero amplitude real
// positive.
StateVector stabilizer_state(const GeneratorSet& gs);

// Ising chain dynamics applied to the all-minus product state |1...1>_x with
// |1>_x = (|0> - |1>)/sqrt(2). The interaction phase is diagonal in the
// computational basis: amplitude (-1)^(popcount(b) + adjacent 1-pairs in b).
StateVector ising_chain_evolution(int n);

// Stabilizer state of the graph generators. A disconnected graph is rejected:
// its state factorizes across the components, so it is biseparable by
// construction.
StateVector graph_state(const GraphSpec& g);

// p * I/2^n + (1-p) |psi><psi|.
DensityMatrix noisy_mixture(const StateVector& psi, double p);

DensityMatrix pure_density(const StateVector& psi);

// Expectation values, computed term by term without materializing dense
// observables. Real-phase Pauli strings only; an imaginary residue above
// 1e-10 signals a non-Hermitian caller bug and throws.
double expectation(const PauliString& s, const StateVector& psi);
double expectation(const PauliString& s, const DensityMatrix& rho);
double expectation(const ObservableSum& o, const StateVector& psi);
double expectation(const ObservableSum& o, const DensityMatrix& rho);
double expectation(const DenseOperator& op, const DensityMatrix& rho);
double expectation(const DenseOperator& op, const StateVector& psi);

std::complex<double> overlap(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& psi, const DensityMatrix& rho);  // <psi|rho|psi>

// Largest Schmidt coefficient (singular value) of the amplitude matrix
// reshaped along the bipartition given as a site mask (bit k = site k in
// part A). The mask must be a proper, nonempty subset.
double schmidt_max(const StateVector& psi, std::uint64_t partition_sites);

struct SchmidtSweep {
  double max_coefficient;
  std::uint64_t worst_partition;  // site mask containing site 0
};

// Maximum over all bipartitions, enumerated as subsets containing site 0
// (schmidt_max is symmetric under complement). Parallel over subsets.
SchmidtSweep max_schmidt_over_bipartitions(const StateVector& psi);

// The 2^n simultaneous eigenstates of the GHZ generators, indexed by the
// eigenvalue pattern (s_1..s_n) read as a binary number (+ -> 0, - -> 1,
// s_1 most significant).
std::vector<StateVector> ghz_basis(int n);

struct LocalZCorrection {
  std::uint64_t z_sites;            // site mask of Z corrections
  std::complex<double> global_phase;
};

// Finds Z^(s) and a global phase with (tensor Z^(s_k)) |a> = phase |b>, if
// such a correction exists; used to relate the Ising-evolved state to the
// generator-stabilized cluster state without assuming a sign convention.
std::optional<LocalZCorrection> local_z_correction(const StateVector& a,
                                                   const StateVector& b);

}  // namespace stabwit
