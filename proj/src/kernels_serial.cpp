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

#include <bit>
#include <stdexcept>

#include "stabwit/kernels.hpp"

namespace stabwit::kernels {

std::complex<double> pauli_prefactor(const PauliString& p) {
  const int y_count = std::popcount(p.x_mask() & p.z_mask());
  return ipow(p.phase_exponent() + y_count);
}

namespace serial {

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
    acc += std::conj(psi[static_cast<Eigen::Index>(j ^ x)]) * sign *
           psi[static_cast<Eigen::Index>(j)];
  }
  return pauli_prefactor(p) * acc;
}

std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  std::complex<double> acc{0.0, 0.0};
  // Tr(rho P) touches one entry per column: P's column j holds c_j at row j^x.
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
    acc += sign * rho(static_cast<Eigen::Index>(j ^ x),
                      static_cast<Eigen::Index>(j));
  }
  return pauli_prefactor(p) * acc;
}

void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(out.cols());
  const std::complex<double> base = coeff * pauli_prefactor(p);
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(j ^ x), static_cast<Eigen::Index>(j)) +=
        base * sign;
  }
}

void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u) {
  const int bit = n - 1 - site;
  const std::uint64_t stride = 1ULL << bit;
  const std::uint64_t pairs = static_cast<std::uint64_t>(psi.size()) >> 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t base =
        ((i >> bit) << (bit + 1)) | (i & (stride - 1));
    const auto a0 = psi[static_cast<Eigen::Index>(base)];
    const auto a1 = psi[static_cast<Eigen::Index>(base | stride)];
    psi[static_cast<Eigen::Index>(base)] = u(0, 0) * a0 + u(0, 1) * a1;
    psi[static_cast<Eigen::Index>(base | stride)] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u) {
  const int bit = n - 1 - site;
  const std::uint64_t stride = 1ULL << bit;
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  const std::uint64_t pairs = dim >> 1;
  // Left action on rows, column by column.
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const std::uint64_t base =
          ((i >> bit) << (bit + 1)) | (i & (stride - 1));
      const auto v0 = rho(static_cast<Eigen::Index>(base),
                          static_cast<Eigen::Index>(c));
      const auto v1 = rho(static_cast<Eigen::Index>(base | stride),
                          static_cast<Eigen::Index>(c));
      rho(static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(c)) =
          u(0, 0) * v0 + u(0, 1) * v1;
      rho(static_cast<Eigen::Index>(base | stride),
          static_cast<Eigen::Index>(c)) = u(1, 0) * v0 + u(1, 1) * v1;
    }
  }
  // Right action by u^dagger, column pair at a time.
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t c0 = ((i >> bit) << (bit + 1)) | (i & (stride - 1));
    const std::uint64_t c1 = c0 | stride;
    Eigen::VectorXcd tmp = rho.col(static_cast<Eigen::Index>(c0));
    rho.col(static_cast<Eigen::Index>(c0)) =
        tmp * std::conj(u(0, 0)) +
        rho.col(static_cast<Eigen::Index>(c1)) * std::conj(u(0, 1));
    rho.col(static_cast<Eigen::Index>(c1)) =
        tmp * std::conj(u(1, 0)) +
        rho.col(static_cast<Eigen::Index>(c1)) * std::conj(u(1, 1));
  }
}

}  // namespace serial

Eigen::VectorXcd apply_pauli(const Eigen::VectorXcd& psi, const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
  const std::complex<double> base = pauli_prefactor(p);
  Eigen::VectorXcd out(psi.size());
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(j ^ x)] =
        base * sign * psi[static_cast<Eigen::Index>(j)];
  }
  return out;
}

}  // namespace stabwit::kernels
