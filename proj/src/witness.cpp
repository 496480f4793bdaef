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

#include "stabwit/witness.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabwit/config.hpp"
#include "stabwit/kernels.hpp"

namespace stabwit {

namespace {

constexpr int kExpandedFamilyCap = 16;

void require_family_n(const WitnessSpec& spec, int min_n) {
  if (spec.n_qubits < min_n)
    throw std::invalid_argument(family_name(spec.family) +
                                " witness needs n >= " + std::to_string(min_n));
  if (spec.n_qubits > kStateCap)
    throw std::invalid_argument("witness qubit count exceeds the state cap");
}

// Adds coeff * prod_{k in subset} gens[k] for every subset of the given
// generator indices. Signed products go through the Pauli algebra, so any
// accumulated -1 phases fold into the coefficients.
void add_subset_products(ObservableSum& obs, double coeff,
                         const std::vector<PauliString>& gens) {
  const std::size_t m = gens.size();
  std::vector<PauliString> products;
  products.reserve(std::size_t{1} << m);
  products.emplace_back(obs.size());  // identity
  obs.add_identity(coeff);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    const int low = std::countr_zero(mask);
    products.push_back(products[mask & (mask - 1)] *
                       gens[static_cast<std::size_t>(low)]);
    obs.add(coeff, products.back());
  }
}

Witness make_pauli_witness(const WitnessSpec& spec, ObservableSum obs) {
  return Witness{spec, std::move(obs), std::nullopt, 0.0};
}

}  // namespace

std::string family_name(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::Ghz: return "ghz";
    case WitnessFamily::GhzPrime: return "ghz-prime";
    case WitnessFamily::Ghz3: return "ghz3";
    case WitnessFamily::Mermin3: return "mermin3";
    case WitnessFamily::Cluster: return "cluster";
    case WitnessFamily::ClusterPrime: return "cluster-prime";
    case WitnessFamily::Graph: return "graph";
    case WitnessFamily::Projector: return "projector";
  }
  return "?";
}

std::optional<WitnessFamily> family_from_name(const std::string& name) {
  if (name == "ghz") return WitnessFamily::Ghz;
  if (name == "ghz-prime") return WitnessFamily::GhzPrime;
  if (name == "ghz3") return WitnessFamily::Ghz3;
  if (name == "mermin3") return WitnessFamily::Mermin3;
  if (name == "cluster") return WitnessFamily::Cluster;
  if (name == "cluster-prime") return WitnessFamily::ClusterPrime;
  if (name == "graph") return WitnessFamily::Graph;
  if (name == "projector") return WitnessFamily::Projector;
  return std::nullopt;
}

Witness build_witness(const WitnessSpec& spec) {
  const int n = spec.n_qubits;
  if (spec.graph.has_value() && spec.family != WitnessFamily::Graph)
    throw std::invalid_argument("only the graph family takes a graph");

  switch (spec.family) {
    case WitnessFamily::Ghz: {
      require_family_n(spec, 2);
      if (n > kExpandedFamilyCap)
        throw std::invalid_argument("expanded GHZ witness capped at n = 16");
      const auto gens = ghz_generators(n).generators();
      ObservableSum obs(n, 3.0);
      obs.add_identity(-1.0);
      obs.add(-1.0, gens[0]);
      std::vector<PauliString> tail(gens.begin() + 1, gens.end());
      add_subset_products(obs, -std::ldexp(1.0, 2 - n), tail);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::GhzPrime: {
      require_family_n(spec, 2);
      const auto gens = ghz_generators(n).generators();
      ObservableSum obs(n, static_cast<double>(n - 1));
      for (const auto& g : gens) obs.add(-1.0, g);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::Ghz3: {
      if (n != 3)
        throw std::invalid_argument("the expanded three-qubit witness needs n = 3");
      ObservableSum obs(3, 1.5);
      obs.add(-1.0, PauliString::parse("XXX"));
      obs.add(-0.5, PauliString::parse("ZZI"));
      obs.add(-0.5, PauliString::parse("IZZ"));
      obs.add(-0.5, PauliString::parse("ZIZ"));
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::Mermin3: {
      if (n != 3)
        throw std::invalid_argument("the Mermin witness needs n = 3");
      const auto gens = ghz_generators(3).generators();
      ObservableSum obs(3, 2.0);
      // 2I - S1 (I + S2)(I + S3), expanded through the Pauli product.
      obs.add(-1.0, gens[0]);
      obs.add(-1.0, gens[0] * gens[1]);
      obs.add(-1.0, gens[0] * gens[2]);
      obs.add(-1.0, gens[0] * gens[1] * gens[2]);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::Cluster: {
      require_family_n(spec, 2);
      if (n > kExpandedFamilyCap)
        throw std::invalid_argument("expanded cluster witness capped at n = 16");
      const auto gens = cluster_generators(n).generators();
      std::vector<PauliString> odd, even;  // positions are 1-based here
      for (int k = 0; k < n; ++k) {
        if ((k + 1) % 2 == 1)
          odd.push_back(gens[static_cast<std::size_t>(k)]);
        else
          even.push_back(gens[static_cast<std::size_t>(k)]);
      }
      ObservableSum obs(n, 3.0);
      add_subset_products(obs, -std::ldexp(1.0, 1 - static_cast<int>(even.size())),
                          even);
      add_subset_products(obs, -std::ldexp(1.0, 1 - static_cast<int>(odd.size())),
                          odd);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::ClusterPrime: {
      require_family_n(spec, 2);
      const auto gens = cluster_generators(n).generators();
      ObservableSum obs(n, static_cast<double>(n - 1));
      for (const auto& g : gens) obs.add(-1.0, g);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::Graph: {
      if (!spec.graph.has_value())
        throw std::invalid_argument("graph family needs a graph");
      const GraphSpec& g = *spec.graph;
      if (g.size() != n)
        throw std::invalid_argument("graph size and n_qubits disagree");
      if (!g.connected())
        throw std::invalid_argument(
            "graph is disconnected; its state is biseparable by construction");
      const auto gens = graph_generators(g).generators();
      ObservableSum obs(n, static_cast<double>(n - 1));
      for (const auto& gen : gens) obs.add(-1.0, gen);
      return make_pauli_witness(spec, std::move(obs));
    }
    case WitnessFamily::Projector: {
      require_family_n(spec, 2);
      // Projector witness around the GHZ target, with the overlap bound 1/2.
      return Witness{spec, ObservableSum(n, 0.0), ghz_state(n), 0.5};
    }
  }
  throw std::logic_error("unknown witness family");
}

StateVector target_state(const WitnessSpec& spec) {
  switch (spec.family) {
    case WitnessFamily::Ghz:
    case WitnessFamily::GhzPrime:
    case WitnessFamily::Ghz3:
    case WitnessFamily::Mermin3:
    case WitnessFamily::Projector:
      return ghz_state(spec.n_qubits);
    case WitnessFamily::Cluster:
    case WitnessFamily::ClusterPrime:
      return stabilizer_state(cluster_generators(spec.n_qubits));
    case WitnessFamily::Graph:
      if (!spec.graph.has_value())
        throw std::invalid_argument("graph family needs a graph");
      return graph_state(*spec.graph);
  }
  throw std::logic_error("unknown witness family");
}

double evaluate(const Witness& w, const DensityMatrix& rho) {
  if (!w.pauli_backed()) {
    return w.projector_constant - fidelity(*w.projector_target, rho);
  }
  return expectation(w.observable, rho);
}

double evaluate(const Witness& w, const StateVector& psi) {
  if (!w.pauli_backed()) {
    const std::complex<double> ov = overlap(*w.projector_target, psi);
    return w.projector_constant - std::norm(ov);
  }
  return expectation(w.observable, psi);
}

DenseOperator witness_to_dense(const Witness& w) {
  if (w.pauli_backed()) return observable_to_dense(w.observable);
  check_dense_cap(w.spec.n_qubits);
  const auto& target = *w.projector_target;
  const Eigen::Index dim = target.amplitudes.size();
  DenseOperator out;
  out.matrix = Eigen::MatrixXcd::Identity(dim, dim) * w.projector_constant -
               target.amplitudes * target.amplitudes.adjoint();
  out.hermitian = true;
  return out;
}

double solve_threshold(double at_zero, double at_one) {
  if (at_one <= 0.0)
    throw std::logic_error(
        "witness is not positive on the maximally mixed state; the "
        "construction is broken");
  if (at_zero >= 0.0)
    throw std::logic_error("witness does not detect its own target state");
  return at_zero / (at_zero - at_one);
}

std::optional<double> closed_form_threshold(const WitnessSpec& spec) {
  const int n = spec.n_qubits;
  switch (spec.family) {
    case WitnessFamily::Ghz:
      return 1.0 / (3.0 - std::ldexp(1.0, 2 - n));
    case WitnessFamily::Ghz3:
      return 0.4;
    case WitnessFamily::GhzPrime:
      return 1.0 / static_cast<double>(n);
    case WitnessFamily::Mermin3:
      return 0.5;
    case WitnessFamily::Cluster:
      if (n % 2 == 0)
        return 1.0 / (4.0 - std::ldexp(1.0, 2 - n / 2));
      return 1.0 / (4.0 - 2.0 * (std::ldexp(1.0, -(n + 1) / 2) +
                                 std::ldexp(1.0, -(n - 1) / 2)));
    case WitnessFamily::ClusterPrime:
    case WitnessFamily::Graph:
    case WitnessFamily::Projector:
      return std::nullopt;
  }
  return std::nullopt;
}

ThresholdResult noise_threshold(const WitnessSpec& spec) {
  const Witness w = build_witness(spec);
  const StateVector target = target_state(spec);
  ThresholdResult result;
  result.witness_at_zero = evaluate(w, target);
  // On the maximally mixed state every non-identity Pauli string is
  // traceless, so only the identity offset survives.
  result.witness_at_one =
      w.pauli_backed()
          ? w.observable.identity_coeff()
          : w.projector_constant - std::ldexp(1.0, -spec.n_qubits);
  result.p_threshold =
      solve_threshold(result.witness_at_zero, result.witness_at_one);
  result.closed_form = closed_form_threshold(spec);
  return result;
}

FinerThanReport finer_than_check(const Witness& w, const StateVector& target,
                                 double alpha,
                                 const std::vector<StateVector>* basis) {
  check_dense_cap(w.spec.n_qubits);
  if (target.n_qubits != w.spec.n_qubits)
    throw std::invalid_argument("target qubit count mismatch");
  const Eigen::Index dim = target.amplitudes.size();
  Eigen::MatrixXcd x = witness_to_dense(w).matrix;
  x -= alpha * (0.5 * Eigen::MatrixXcd::Identity(dim, dim) -
                target.amplitudes * target.amplitudes.adjoint());

  FinerThanReport report;
  report.alpha = alpha;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (x + x.adjoint()), Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.positive_semidefinite = report.min_eigenvalue >= -1e-10;

  if (basis != nullptr) {
    if (static_cast<Eigen::Index>(basis->size()) != dim)
      throw std::invalid_argument("basis size mismatch");
    Eigen::MatrixXcd b(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c)
      b.col(c) = (*basis)[static_cast<std::size_t>(c)].amplitudes;
    const Eigen::MatrixXcd y = b.adjoint() * x * b;
    report.basis_diagonal = y.diagonal().real();
    Eigen::MatrixXcd off = y;
    off.diagonal().setZero();
    report.max_off_diagonal = off.cwiseAbs().maxCoeff();
  }
  return report;
}

DenseOperator ProjectorWitnessResult::dense() const {
  check_dense_cap(target.n_qubits);
  const Eigen::Index dim = target.amplitudes.size();
  DenseOperator out;
  out.matrix = Eigen::MatrixXcd::Identity(dim, dim) * c_tilde -
               target.amplitudes * target.amplitudes.adjoint();
  out.hermitian = true;
  return out;
}

ProjectorWitnessResult projector_witness(const StateVector& target) {
  const SchmidtSweep sweep = max_schmidt_over_bipartitions(target);
  return ProjectorWitnessResult{
      sweep.max_coefficient * sweep.max_coefficient, sweep.worst_partition,
      target};
}

}  // namespace stabwit
