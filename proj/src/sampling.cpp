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

#include "stabwit/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabwit/kernels.hpp"
#include "stabwit/rng.hpp"

namespace stabwit {

namespace {

// Rotation mapping the chosen basis eigenvectors onto |0>, |1>.
Eigen::Matrix2cd basis_rotation(PauliOp basis) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  switch (basis) {
    case PauliOp::X:
      u << s, s, s, -s;
      return u;
    case PauliOp::Y:
      u << s, std::complex<double>(0.0, -s), s, std::complex<double>(0.0, s);
      return u;
    case PauliOp::Z:
      return Eigen::Matrix2cd::Identity();
    case PauliOp::I:
      break;
  }
  throw std::invalid_argument("measurement basis must be X, Y or Z");
}

std::string outcome_bitstring(std::uint64_t outcome, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k)
    if (outcome & (1ULL << (n - 1 - k))) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

}  // namespace

Eigen::VectorXd outcome_distribution(const MeasurementSetting& setting,
                                     const DensityMatrix& rho) {
  if (setting.size() != rho.n_qubits)
    throw std::invalid_argument("setting/state qubit count mismatch");
  Eigen::MatrixXcd rotated = rho.matrix;
  for (int k = 0; k < setting.size(); ++k) {
    const PauliOp basis = setting.bases[static_cast<std::size_t>(k)];
    if (basis == PauliOp::Z) continue;
    kernels::conjugate_single_qubit(rotated, rho.n_qubits, k,
                                    basis_rotation(basis));
  }
  Eigen::VectorXd probs = rotated.diagonal().real();
  probs = probs.cwiseMax(0.0);
  const double total = probs.sum();
  if (std::abs(total - 1.0) > 1e-10)
    throw std::logic_error("outcome distribution does not sum to 1");
  return probs / total;
}

Eigen::VectorXd outcome_distribution(const MeasurementSetting& setting,
                                     const StateVector& psi) {
  if (setting.size() != psi.n_qubits)
    throw std::invalid_argument("setting/state qubit count mismatch");
  Eigen::VectorXcd rotated = psi.amplitudes;
  for (int k = 0; k < setting.size(); ++k) {
    const PauliOp basis = setting.bases[static_cast<std::size_t>(k)];
    if (basis == PauliOp::Z) continue;
    kernels::apply_single_qubit(rotated, psi.n_qubits, k,
                                basis_rotation(basis));
  }
  Eigen::VectorXd probs = rotated.cwiseAbs2();
  return probs / probs.sum();
}

ShotEstimate estimate_observable(const ObservableSum& observable,
                                 const SettingPlan& plan,
                                 const DensityMatrix& rho,
                                 std::uint64_t shots_per_setting,
                                 std::uint64_t seed) {
  if (shots_per_setting < 2)
    throw std::invalid_argument("at least 2 shots per setting are required");
  const auto terms = observable.terms();
  if (plan.assignment.size() != terms.size())
    throw std::invalid_argument(
        "plan does not match the observable's term list");
  const std::size_t setting_count = plan.settings.size();
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const int s = plan.assignment[t];
    if (s < 0 || static_cast<std::size_t>(s) >= setting_count)
      throw std::invalid_argument("term has no assigned setting");
    if (!compatible(terms[t].string,
                    plan.settings[static_cast<std::size_t>(s)]))
      throw std::invalid_argument("term is incompatible with its setting");
  }

  const int n = rho.n_qubits;
  ShotEstimate estimate;
  estimate.shots_per_setting = shots_per_setting;
  estimate.per_setting_counts.resize(setting_count);

  // Outcome histograms, one independent stream per setting.
  std::vector<std::vector<std::uint64_t>> histograms(setting_count);
  for (std::size_t s = 0; s < setting_count; ++s) {
    const Eigen::VectorXd probs = outcome_distribution(plan.settings[s], rho);
    Eigen::VectorXd cdf(probs.size());
    double run = 0.0;
    for (Eigen::Index j = 0; j < probs.size(); ++j) {
      run += probs[j];
      cdf[j] = run;
    }
    cdf[probs.size() - 1] = 1.0;

    std::mt19937_64 eng(derive_stream_seed(seed, s));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(probs.size()),
                                      0);
    for (std::uint64_t shot = 0; shot < shots_per_setting; ++shot) {
      const double u = uniform_double(eng);
      const double* begin = cdf.data();
      const double* pos = std::upper_bound(begin, begin + cdf.size(), u);
      std::size_t idx = static_cast<std::size_t>(pos - begin);
      if (idx >= counts.size()) idx = counts.size() - 1;
      ++counts[idx];
    }
    for (std::size_t o = 0; o < counts.size(); ++o)
      if (counts[o] > 0)
        estimate.per_setting_counts[s][outcome_bitstring(o, n)] = counts[o];
    histograms[s] = std::move(counts);
  }

  // Term estimates and within-setting covariance from the shared histogram:
  // the per-shot value of a setting is the coefficient-weighted sum of its
  // terms' +/-1 products, so its sample variance captures the covariance.
  const double m = static_cast<double>(shots_per_setting);
  double mean = observable.identity_coeff();
  double variance_of_mean = 0.0;
  for (std::size_t s = 0; s < setting_count; ++s) {
    std::vector<std::size_t> term_indices;
    for (std::size_t t = 0; t < terms.size(); ++t)
      if (plan.assignment[t] == static_cast<int>(s)) term_indices.push_back(t);
    if (term_indices.empty()) continue;

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t o = 0; o < histograms[s].size(); ++o) {
      const std::uint64_t count = histograms[s][o];
      if (count == 0) continue;
      double value = 0.0;
      for (const std::size_t t : term_indices) {
        const std::uint64_t support = terms[t].string.support_mask();
        const double sign =
            (std::popcount(static_cast<std::uint64_t>(o) & support) & 1)
                ? -1.0
                : 1.0;
        value += terms[t].coeff * sign;
      }
      sum += static_cast<double>(count) * value;
      sum_sq += static_cast<double>(count) * value * value;
    }
    const double setting_mean = sum / m;
    const double sample_var =
        std::max(0.0, (sum_sq - m * setting_mean * setting_mean) / (m - 1.0));
    mean += setting_mean;
    variance_of_mean += sample_var / m;
  }
  estimate.mean = mean;
  estimate.stderr_value = std::sqrt(variance_of_mean);
  return estimate;
}

}  // namespace stabwit
