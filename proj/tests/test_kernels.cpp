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

// The OpenMP kernels must agree with the serial reference implementations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stabwit/kernels.hpp"
#include "test_helpers.hpp"

using namespace stabwit;

TEST_CASE("expectation kernels agree") {
  std::mt19937_64 eng(101);
  for (const int n : {4, 8, 11}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      psi[j] = std::complex<double>(normal_double(eng), normal_double(eng));
    psi /= psi.norm();
    for (int rep = 0; rep < 20; ++rep) {
      const PauliString p = testing_oracles::random_pauli(n, eng, true);
      const auto serial = kernels::serial::pauli_expval(psi, p);
      const auto parallel = kernels::parallel::pauli_expval(psi, p);
      CHECK(std::abs(serial - parallel) < 1e-12);
      const auto dispatched = kernels::pauli_expval(psi, p);
      CHECK(std::abs(serial - dispatched) < 1e-12);
    }
  }
}

TEST_CASE("trace kernels agree") {
  std::mt19937_64 eng(103);
  for (const int n : {3, 6, 9}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(dim, dim);
    rho = (rho * rho.adjoint()).eval();
    rho /= rho.trace().real();
    for (int rep = 0; rep < 15; ++rep) {
      const PauliString p = testing_oracles::random_pauli(n, eng, true);
      const auto serial = kernels::serial::pauli_trace(rho, p);
      const auto parallel = kernels::parallel::pauli_trace(rho, p);
      CHECK(std::abs(serial - parallel) < 1e-12);
    }
  }
}

TEST_CASE("accumulation kernels agree exactly") {
  std::mt19937_64 eng(107);
  for (const int n : {3, 7}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
    for (int rep = 0; rep < 10; ++rep) {
      const PauliString p = testing_oracles::random_pauli(n, eng, true);
      const std::complex<double> coeff(uniform_double(eng) - 0.5,
                                       uniform_double(eng) - 0.5);
      kernels::serial::accumulate_pauli(a, coeff, p);
      kernels::parallel::accumulate_pauli(b, coeff, p);
    }
    // Entry-wise identical expressions, so equality is exact.
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("rotation kernels agree") {
  std::mt19937_64 eng(109);
  const Eigen::Matrix2cd hadamard =
      (Eigen::Matrix2cd() << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2)
          .finished();
  Eigen::Matrix2cd ymap;
  ymap << M_SQRT1_2, std::complex<double>(0, -M_SQRT1_2), M_SQRT1_2,
      std::complex<double>(0, M_SQRT1_2);

  for (const int n : {2, 5, 8}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      psi[j] = std::complex<double>(normal_double(eng), normal_double(eng));
    psi /= psi.norm();
    for (int site = 0; site < n; ++site) {
      Eigen::VectorXcd a = psi;
      Eigen::VectorXcd b = psi;
      kernels::serial::apply_single_qubit(a, n, site, hadamard);
      kernels::parallel::apply_single_qubit(b, n, site, hadamard);
      CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    }

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(dim, dim);
    rho = (rho * rho.adjoint()).eval();
    rho /= rho.trace().real();
    for (int site = 0; site < n; ++site) {
      Eigen::MatrixXcd a = rho;
      Eigen::MatrixXcd b = rho;
      kernels::serial::conjugate_single_qubit(a, n, site, ymap);
      kernels::parallel::conjugate_single_qubit(b, n, site, ymap);
      CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("apply_pauli matches the dense action") {
  std::mt19937_64 eng(113);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + static_cast<int>(eng() % 5);
    const StateVector psi = testing_oracles::random_state(n, eng);
    const PauliString p = testing_oracles::random_pauli(n, eng, true);
    const Eigen::VectorXcd fast = kernels::apply_pauli(psi.amplitudes, p);
    const Eigen::VectorXcd dense =
        testing_oracles::naive_dense(p) * psi.amplitudes;
    CHECK((fast - dense).cwiseAbs().maxCoeff() < 1e-14);
  }
}
