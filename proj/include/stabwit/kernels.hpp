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

#include "stabwit/pauli.hpp"

namespace stabwit::kernels {

// Data-parallel inner loops over 2^n amplitudes / matrix entries.
//
// A Pauli string acts on a computational basis index j as
//   P |j> = c_j |j ^ x_mask>,   c_j = i^(e + #Y) * (-1)^popcount(j & z_mask),
// which makes every kernel below a single pass over j. Each kernel has a
// serial reference implementation and an OpenMP variant; the unqualified
// entry points dispatch on problem size. The two variants may differ in the
// last bits of a floating-point reduction, never beyond.

// Constant prefactor i^(e + #Y sites) of the action above.
std::complex<double> pauli_prefactor(const PauliString& p);

namespace serial {

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p);
std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p);
void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p);
// psi <- (u on the given site) psi, with u a 2x2 matrix.
void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u);
// rho <- (u on site) rho (u on site)^dagger.
void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u);

}  // namespace serial

namespace parallel {

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p);
std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p);
void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p);
void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u);
void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u);

}  // namespace parallel

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p);
std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p);
void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p);
void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u);
void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u);

// P |psi>, exact phase included. Single pass, serial (used on small vectors
// and inside the stabilizer projection loop where calls are already batched).
Eigen::VectorXcd apply_pauli(const Eigen::VectorXcd& psi, const PauliString& p);

}  // namespace stabwit::kernels
