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

#include "stabwit/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabwit/config.hpp"
#include "stabwit/kernels.hpp"

namespace stabwit {

namespace {

void check_state_cap(int n) {
  if (n < 1 || n > kStateCap)
    throw std::invalid_argument("state vector qubit count must be in [1, " +
                                std::to_string(kStateCap) + "]");
}

// Rotates the global phase so the first amplitude above a relative threshold
// is real positive. Deterministic output for tests and serialization.
void fix_global_phase(Eigen::VectorXcd& amps) {
  const double cutoff = amps.cwiseAbs().maxCoeff() * 1e-8;
  for (Eigen::Index j = 0; j < amps.size(); ++j) {
    const std::complex<double> a = amps[j];
    if (std::abs(a) > cutoff) {
      amps *= std::conj(a) / std::abs(a);
      return;
    }
  }
}

double real_with_residue_check(std::complex<double> value, const char* what) {
  if (std::abs(value.imag()) >= 1e-10)
    throw std::logic_error(std::string(what) +
                           " has imaginary residue above 1e-10");
  return value.real();
}

}  // namespace

StateVector::StateVector(int n, Eigen::VectorXcd amps)
    : amplitudes(std::move(amps)), n_qubits(n) {
  check_state_cap(n);
  if (amplitudes.size() != (Eigen::Index{1} << n))
    throw std::invalid_argument("amplitude count must be 2^n");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("state vector is not normalized");
}

StateVector StateVector::zero_state(int n) {
  check_state_cap(n);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amps[0] = 1.0;
  return StateVector(n, std::move(amps));
}

DensityMatrix::DensityMatrix(int n, Eigen::MatrixXcd m)
    : matrix(std::move(m)), n_qubits(n) {
  check_dense_cap(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > 1e-12 ||
      std::abs(matrix.trace().imag()) > 1e-12)
    throw std::invalid_argument("density matrix trace is not 1");
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

StateVector ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("GHZ state needs n >= 2");
  check_state_cap(n);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  const double a = 1.0 / std::sqrt(2.0);
  amps[0] = a;
  amps[amps.size() - 1] = a;
  return StateVector(n, std::move(amps));
}

StateVector stabilizer_state(const GeneratorSet& gs) {
  const int n = gs.size();
  check_state_cap(n);
  const auto report = validate(gs);
  if (!report.noncommuting_pairs.empty())
    throw std::invalid_argument("generators do not commute");
  if (!report.independent)
    throw std::invalid_argument(
        "generators are dependent; the joint projector does not have rank 1");

  const Eigen::Index dim = Eigen::Index{1} << n;
  // Project basis states until one has nonzero overlap with the stabilized
  // state. A stabilizer state's nonzero amplitudes have |amp|^2 >= 2^-n, so
  // the threshold cleanly separates zero from nonzero.
  const double threshold = 0.5 * std::ldexp(1.0, -n);
  for (Eigen::Index b = 0; b < dim; ++b) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi[b] = 1.0;
    for (const auto& g : gs.generators())
      psi = 0.5 * (psi + kernels::apply_pauli(psi, g));
    const double norm2 = psi.squaredNorm();
    if (norm2 > threshold) {
      psi /= std::sqrt(norm2);
      fix_global_phase(psi);
      return StateVector(n, std::move(psi));
    }
  }
  throw std::logic_error(
      "no basis state overlaps the stabilized state; generator set is "
      "inconsistent");
}

StateVector ising_chain_evolution(int n) {
  check_state_cap(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps(dim);
  // |1...1>_x amplitude is (-1)^popcount(b) / 2^(n/2); the chain phase adds
  // (-1) per adjacent 11 pair.
  const double scale = std::pow(2.0, -0.5 * n);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const std::uint64_t bits = static_cast<std::uint64_t>(b);
    const int ones = std::popcount(bits);
    const int pairs = std::popcount(bits & (bits >> 1));
    amps[b] = (((ones + pairs) & 1) ? -1.0 : 1.0) * scale;
  }
  amps /= std::sqrt(amps.squaredNorm());
  return StateVector(n, std::move(amps));
}

StateVector graph_state(const GraphSpec& g) {
  if (!g.connected())
    throw std::invalid_argument(
        "graph is disconnected; the graph state factorizes across components "
        "and is biseparable by construction");
  return stabilizer_state(graph_generators(g));
}

DensityMatrix pure_density(const StateVector& psi) {
  check_dense_cap(psi.n_qubits);
  Eigen::MatrixXcd m = psi.amplitudes * psi.amplitudes.adjoint();
  // Symmetrize away the last-bit asymmetry of the outer product.
  m = 0.5 * (m + m.adjoint()).eval();
  m /= m.trace().real();
  return DensityMatrix(psi.n_qubits, std::move(m));
}

DensityMatrix noisy_mixture(const StateVector& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("noise fraction must lie in [0, 1]");
  check_dense_cap(psi.n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << psi.n_qubits;
  Eigen::MatrixXcd m = (1.0 - p) * (psi.amplitudes * psi.amplitudes.adjoint());
  m = 0.5 * (m + m.adjoint()).eval();
  const double uniform = p / static_cast<double>(dim);
  for (Eigen::Index j = 0; j < dim; ++j) m(j, j) += uniform;
  // Pin the trace exactly: diagonal entries are real by construction.
  const double trace = m.trace().real();
  m *= 1.0 / trace;
  return DensityMatrix(psi.n_qubits, std::move(m));
}

double expectation(const PauliString& s, const StateVector& psi) {
  if (s.size() != psi.n_qubits)
    throw std::invalid_argument("operator/state qubit count mismatch");
  if (!s.phase_is_real())
    throw std::invalid_argument("expectation of a non-Hermitian Pauli string");
  return real_with_residue_check(kernels::pauli_expval(psi.amplitudes, s),
                                 "Pauli expectation");
}

double expectation(const PauliString& s, const DensityMatrix& rho) {
  if (s.size() != rho.n_qubits)
    throw std::invalid_argument("operator/state qubit count mismatch");
  if (!s.phase_is_real())
    throw std::invalid_argument("expectation of a non-Hermitian Pauli string");
  return real_with_residue_check(kernels::pauli_trace(rho.matrix, s),
                                 "Pauli expectation");
}

double expectation(const ObservableSum& o, const StateVector& psi) {
  if (o.size() != psi.n_qubits)
    throw std::invalid_argument("observable/state qubit count mismatch");
  double value = o.identity_coeff();
  for (const auto& term : o.terms())
    value += term.coeff *
             real_with_residue_check(
                 kernels::pauli_expval(psi.amplitudes, term.string),
                 "observable term");
  return value;
}

double expectation(const ObservableSum& o, const DensityMatrix& rho) {
  if (o.size() != rho.n_qubits)
    throw std::invalid_argument("observable/state qubit count mismatch");
  double value = o.identity_coeff();
  for (const auto& term : o.terms())
    value += term.coeff * real_with_residue_check(
                              kernels::pauli_trace(rho.matrix, term.string),
                              "observable term");
  return value;
}

double expectation(const DenseOperator& op, const DensityMatrix& rho) {
  if (op.dim() != rho.matrix.rows())
    throw std::invalid_argument("operator/state dimension mismatch");
  return real_with_residue_check((rho.matrix * op.matrix).trace(),
                                 "dense expectation");
}

double expectation(const DenseOperator& op, const StateVector& psi) {
  if (op.dim() != psi.amplitudes.size())
    throw std::invalid_argument("operator/state dimension mismatch");
  return real_with_residue_check(
      psi.amplitudes.dot(op.matrix * psi.amplitudes), "dense expectation");
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("state qubit count mismatch");
  return a.amplitudes.dot(b.amplitudes);
}

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.n_qubits != rho.n_qubits)
    throw std::invalid_argument("state qubit count mismatch");
  return real_with_residue_check(
      psi.amplitudes.dot(rho.matrix * psi.amplitudes), "fidelity");
}

double schmidt_max(const StateVector& psi, std::uint64_t partition_sites) {
  const int n = psi.n_qubits;
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  partition_sites &= all;
  if (partition_sites == 0 || partition_sites == all)
    throw std::invalid_argument("bipartition must be a proper nonempty subset");

  // Collect index-bit positions for each side (site k -> bit n-1-k).
  std::vector<int> a_bits, b_bits;
  for (int k = 0; k < n; ++k) {
    if (partition_sites & (1ULL << k))
      a_bits.push_back(n - 1 - k);
    else
      b_bits.push_back(n - 1 - k);
  }
  // Work on the smaller side; singular values are symmetric.
  if (a_bits.size() > b_bits.size()) std::swap(a_bits, b_bits);
  const Eigen::Index da = Eigen::Index{1} << a_bits.size();
  const Eigen::Index db = Eigen::Index{1} << b_bits.size();

  Eigen::MatrixXcd m(da, db);
  const Eigen::Index dim = psi.amplitudes.size();
  for (Eigen::Index j = 0; j < dim; ++j) {
    std::uint64_t r = 0, c = 0;
    for (std::size_t i = 0; i < a_bits.size(); ++i)
      r |= ((static_cast<std::uint64_t>(j) >> a_bits[i]) & 1ULL) << i;
    for (std::size_t i = 0; i < b_bits.size(); ++i)
      c |= ((static_cast<std::uint64_t>(j) >> b_bits[i]) & 1ULL) << i;
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        psi.amplitudes[j];
  }
  Eigen::MatrixXcd gram = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

SchmidtSweep max_schmidt_over_bipartitions(const StateVector& psi) {
  const int n = psi.n_qubits;
  if (n < 2) throw std::invalid_argument("bipartitions need n >= 2");
  // Subsets containing site 0: masks 1 | (rest << 1), rest over the other
  // n-1 sites, excluding the full set.
  const std::uint64_t rest_count = 1ULL << (n - 1);
  std::vector<double> values(rest_count - 1, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t rest = 0;
       rest < static_cast<std::int64_t>(rest_count) - 1; ++rest) {
    const std::uint64_t mask =
        1ULL | (static_cast<std::uint64_t>(rest) << 1);
    values[static_cast<std::size_t>(rest)] = schmidt_max(psi, mask);
  }
  SchmidtSweep sweep{0.0, 1ULL};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > sweep.max_coefficient) {
      sweep.max_coefficient = values[i];
      sweep.worst_partition = 1ULL | (static_cast<std::uint64_t>(i) << 1);
    }
  }
  return sweep;
}

std::vector<StateVector> ghz_basis(int n) {
  if (n < 2) throw std::invalid_argument("GHZ basis needs n >= 2");
  check_state_cap(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<StateVector> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  const double a = 1.0 / std::sqrt(2.0);
  for (std::uint64_t m = 0; m < static_cast<std::uint64_t>(dim); ++m) {
    // Sign pattern: s_k = -1 iff bit (n-k) of m is set (s_1 most significant).
    const bool s1_minus = (m >> (n - 1)) & 1ULL;
    std::uint64_t b = 0;
    std::uint64_t prev = 0;
    for (int k = 2; k <= n; ++k) {
      const std::uint64_t sk_minus = (m >> (n - k)) & 1ULL;
      const std::uint64_t bk = prev ^ sk_minus;
      b |= bk << (n - k);
      prev = bk;
    }
    const std::uint64_t b_comp = ~b & ((dim - 1));
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps[static_cast<Eigen::Index>(b)] = a;
    amps[static_cast<Eigen::Index>(b_comp)] = s1_minus ? -a : a;
    basis.emplace_back(n, std::move(amps));
  }
  return basis;
}

std::optional<LocalZCorrection> local_z_correction(const StateVector& a,
                                                   const StateVector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("state qubit count mismatch");
  const int n = a.n_qubits;
  if (n > 20)
    throw std::invalid_argument("local correction search capped at n = 20");
  const Eigen::Index dim = a.amplitudes.size();
  const double cutoff = a.amplitudes.cwiseAbs().maxCoeff() * 1e-8;

  // Magnitudes must agree pointwise for a diagonal sign correction to exist.
  Eigen::Index ref = -1;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const bool a_zero = std::abs(a.amplitudes[j]) <= cutoff;
    const bool b_zero = std::abs(b.amplitudes[j]) <= cutoff;
    if (a_zero != b_zero) return std::nullopt;
    if (!a_zero && ref < 0) ref = j;
  }
  if (ref < 0) return std::nullopt;

  // Determine the sign bits where an adjacent index pair is available, then
  // verify the full vector.
  std::uint64_t z_index_mask = 0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = 1ULL << p;
    bool found = false;
    for (Eigen::Index j = 0; j < dim && !found; ++j) {
      const Eigen::Index j2 = static_cast<Eigen::Index>(
          static_cast<std::uint64_t>(j) ^ bit);
      if (std::abs(a.amplitudes[j]) > cutoff &&
          std::abs(a.amplitudes[j2]) > cutoff) {
        const std::complex<double> r1 = b.amplitudes[j] / a.amplitudes[j];
        const std::complex<double> r2 = b.amplitudes[j2] / a.amplitudes[j2];
        if (std::abs(r1 + r2) < std::abs(r1 - r2)) z_index_mask |= bit;
        found = true;
      }
    }
    // Without such a pair the bit is unconstrained; leave it clear.
  }

  const std::uint64_t ref_u = static_cast<std::uint64_t>(ref);
  const double ref_sign = (std::popcount(ref_u & z_index_mask) & 1) ? -1.0 : 1.0;
  const std::complex<double> phase =
      b.amplitudes[ref] / (ref_sign * a.amplitudes[ref]);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::uint64_t ju = static_cast<std::uint64_t>(j);
    const double sign = (std::popcount(ju & z_index_mask) & 1) ? -1.0 : 1.0;
    if (std::abs(b.amplitudes[j] - phase * sign * a.amplitudes[j]) > 1e-10)
      return std::nullopt;
  }

  // Convert the index mask back to a site mask.
  std::uint64_t z_sites = 0;
  for (int k = 0; k < n; ++k)
    if (z_index_mask & (1ULL << (n - 1 - k))) z_sites |= 1ULL << k;
  return LocalZCorrection{z_sites, phase};
}

}  // namespace stabwit
