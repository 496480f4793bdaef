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

// Test-only oracles. These deliberately avoid the library's bit-indexed
// kernels: dense matrices are built by explicit Kronecker products so the
// fast paths are checked against an independent construction.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "stabwit/pauli.hpp"
#include "stabwit/rng.hpp"
#include "stabwit/states.hpp"

namespace testing_oracles {

using complexd = std::complex<double>;

inline Eigen::Matrix2cd single_site_matrix(stabwit::PauliOp op) {
  Eigen::Matrix2cd m;
  switch (op) {
    case stabwit::PauliOp::I: m << 1, 0, 0, 1; break;
    case stabwit::PauliOp::X: m << 0, 1, 1, 0; break;
    case stabwit::PauliOp::Y:
      m << 0, complexd(0, -1), complexd(0, 1), 0;
      break;
    case stabwit::PauliOp::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// phase * sigma_(op 0) x sigma_(op 1) x ... built by explicit kron chain.
inline Eigen::MatrixXcd naive_dense(const stabwit::PauliString& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < p.size(); ++k) m = kron(m, single_site_matrix(p.op(k)));
  return stabwit::ipow(p.phase_exponent()) * m;
}

inline Eigen::MatrixXcd naive_observable_dense(const stabwit::ObservableSum& o) {
  const Eigen::Index dim = Eigen::Index{1} << o.size();
  Eigen::MatrixXcd m =
      o.identity_coeff() * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& term : o.terms()) m += term.coeff * naive_dense(term.string);
  return m;
}

inline stabwit::PauliString random_pauli(int n, std::mt19937_64& eng,
                                         bool random_phase = false) {
  stabwit::PauliString p(n);
  for (int k = 0; k < n; ++k)
    p.set_op(k, static_cast<stabwit::PauliOp>(eng() % 4));
  if (random_phase) p.set_phase_exponent(static_cast<int>(eng() % 4));
  return p;
}

inline Eigen::Vector2cd random_qubit(std::mt19937_64& eng) {
  Eigen::Vector2cd v;
  v << complexd(stabwit::normal_double(eng), stabwit::normal_double(eng)),
      complexd(stabwit::normal_double(eng), stabwit::normal_double(eng));
  return v / v.norm();
}

inline stabwit::StateVector random_product_state(int n, std::mt19937_64& eng) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector2cd q = random_qubit(eng);
    Eigen::VectorXcd next(amps.size() * 2);
    for (Eigen::Index j = 0; j < amps.size(); ++j) {
      next[2 * j] = amps[j] * q[0];
      next[2 * j + 1] = amps[j] * q[1];
    }
    amps = next;
  }
  amps /= amps.norm();
  return stabwit::StateVector(n, std::move(amps));
}

inline stabwit::StateVector random_state(int n, std::mt19937_64& eng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps(dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    amps[j] = complexd(stabwit::normal_double(eng), stabwit::normal_double(eng));
  amps /= amps.norm();
  return stabwit::StateVector(n, std::move(amps));
}

// Exhaustive minimal setting count: tries all subsets of {X,Y,Z}^n settings
// in increasing size. Only feasible for tiny n and term counts.
inline int brute_force_min_settings(const std::vector<stabwit::PauliString>& terms,
                                    int n) {
  std::vector<std::vector<stabwit::PauliOp>> all_settings;
  const int total = [&] {
    int t = 1;
    for (int k = 0; k < n; ++k) t *= 3;
    return t;
  }();
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::vector<stabwit::PauliOp> setting(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      setting[static_cast<std::size_t>(k)] =
          static_cast<stabwit::PauliOp>(1 + c % 3);
      c /= 3;
    }
    all_settings.push_back(std::move(setting));
  }
  auto term_fits = [&](const stabwit::PauliString& term,
                       const std::vector<stabwit::PauliOp>& setting) {
    for (int k = 0; k < n; ++k) {
      const stabwit::PauliOp op = term.op(k);
      if (op != stabwit::PauliOp::I &&
          op != setting[static_cast<std::size_t>(k)])
        return false;
    }
    return true;
  };
  std::vector<stabwit::PauliString> live;
  for (const auto& t : terms)
    if (!t.is_identity_ops()) live.push_back(t);
  if (live.empty()) return 0;

  const int setting_count = static_cast<int>(all_settings.size());
  for (int size = 1; size <= setting_count; ++size) {
    // Enumerate subsets of the given size via combination indices.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      bool covers_all = true;
      for (const auto& t : live) {
        bool covered = false;
        for (const int s : idx)
          if (term_fits(t, all_settings[static_cast<std::size_t>(s)])) {
            covered = true;
            break;
          }
        if (!covered) {
          covers_all = false;
          break;
        }
      }
      if (covers_all) return size;
      int i = size - 1;
      while (i >= 0 &&
             idx[static_cast<std::size_t>(i)] == setting_count - size + i)
        --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return setting_count;
}

}  // namespace testing_oracles
