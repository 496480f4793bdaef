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
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabwit/kernels.hpp"

namespace stabwit::kernels {

namespace {

// Reductions accumulate per-thread partials over fixed contiguous chunks and
// combine them in thread order, so a given thread count always produces the
// same bits.
int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Below this many amplitudes the fork/join overhead dominates.
constexpr std::uint64_t kParallelThreshold = 1ULL << 12;

bool use_parallel(std::uint64_t work) {
  return thread_count() > 1 && work >= kParallelThreshold;
}

}  // namespace

namespace parallel {

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
  const int nt = thread_count();
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(nt),
                                            {0.0, 0.0});
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    const std::uint64_t lo = dim * static_cast<std::uint64_t>(t) /
                             static_cast<std::uint64_t>(nt);
    const std::uint64_t hi = dim * static_cast<std::uint64_t>(t + 1) /
                             static_cast<std::uint64_t>(nt);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t j = lo; j < hi; ++j) {
      const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
      acc += std::conj(psi[static_cast<Eigen::Index>(j ^ x)]) * sign *
             psi[static_cast<Eigen::Index>(j)];
    }
    partial[static_cast<std::size_t>(t)] = acc;
  }
  std::complex<double> total{0.0, 0.0};
  for (const auto& v : partial) total += v;
  return pauli_prefactor(p) * total;
}

std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  const int nt = thread_count();
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(nt),
                                            {0.0, 0.0});
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    const std::uint64_t lo = dim * static_cast<std::uint64_t>(t) /
                             static_cast<std::uint64_t>(nt);
    const std::uint64_t hi = dim * static_cast<std::uint64_t>(t + 1) /
                             static_cast<std::uint64_t>(nt);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t j = lo; j < hi; ++j) {
      const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
      acc += sign * rho(static_cast<Eigen::Index>(j ^ x),
                        static_cast<Eigen::Index>(j));
    }
    partial[static_cast<std::size_t>(t)] = acc;
  }
  std::complex<double> total{0.0, 0.0};
  for (const auto& v : partial) total += v;
  return pauli_prefactor(p) * total;
}

void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::uint64_t dim = static_cast<std::uint64_t>(out.cols());
  const std::complex<double> base = coeff * pauli_prefactor(p);
  // Column j is written exactly once (row j^x), so columns partition the work.
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(dim); ++j) {
    const std::uint64_t ju = static_cast<std::uint64_t>(j);
    const double sign = (std::popcount(ju & z) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(ju ^ x), static_cast<Eigen::Index>(ju)) +=
        base * sign;
  }
}

void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u) {
  const int bit = n - 1 - site;
  const std::uint64_t stride = 1ULL << bit;
  const std::uint64_t pairs = static_cast<std::uint64_t>(psi.size()) >> 1;
  const std::complex<double> u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0),
                             u11 = u(1, 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs); ++i) {
    const std::uint64_t iu = static_cast<std::uint64_t>(i);
    const std::uint64_t base = ((iu >> bit) << (bit + 1)) | (iu & (stride - 1));
    const auto a0 = psi[static_cast<Eigen::Index>(base)];
    const auto a1 = psi[static_cast<Eigen::Index>(base | stride)];
    psi[static_cast<Eigen::Index>(base)] = u00 * a0 + u01 * a1;
    psi[static_cast<Eigen::Index>(base | stride)] = u10 * a0 + u11 * a1;
  }
}

void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u) {
  const int bit = n - 1 - site;
  const std::uint64_t stride = 1ULL << bit;
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  const std::uint64_t pairs = dim >> 1;
  const std::complex<double> u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0),
                             u11 = u(1, 1);
  // Left action: each column is independent.
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(dim); ++c) {
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const std::uint64_t base = ((i >> bit) << (bit + 1)) | (i & (stride - 1));
      const auto v0 =
          rho(static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(c));
      const auto v1 = rho(static_cast<Eigen::Index>(base | stride),
                          static_cast<Eigen::Index>(c));
      rho(static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(c)) =
          u00 * v0 + u01 * v1;
      rho(static_cast<Eigen::Index>(base | stride),
          static_cast<Eigen::Index>(c)) = u10 * v0 + u11 * v1;
    }
  }
  // Right action: column pairs are independent of each other.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs); ++i) {
    const std::uint64_t iu = static_cast<std::uint64_t>(i);
    const std::uint64_t c0 = ((iu >> bit) << (bit + 1)) | (iu & (stride - 1));
    const std::uint64_t c1 = c0 | stride;
    for (std::uint64_t r = 0; r < dim; ++r) {
      const auto v0 =
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c0));
      const auto v1 =
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c1));
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c0)) =
          v0 * std::conj(u00) + v1 * std::conj(u01);
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c1)) =
          v0 * std::conj(u10) + v1 * std::conj(u11);
    }
  }
}

}  // namespace parallel

std::complex<double> pauli_expval(const Eigen::VectorXcd& psi,
                                  const PauliString& p) {
  if (!use_parallel(static_cast<std::uint64_t>(psi.size())))
    return serial::pauli_expval(psi, p);
  return parallel::pauli_expval(psi, p);
}

std::complex<double> pauli_trace(const Eigen::MatrixXcd& rho,
                                 const PauliString& p) {
  if (!use_parallel(static_cast<std::uint64_t>(rho.rows())))
    return serial::pauli_trace(rho, p);
  return parallel::pauli_trace(rho, p);
}

void accumulate_pauli(Eigen::MatrixXcd& out, std::complex<double> coeff,
                      const PauliString& p) {
  if (!use_parallel(static_cast<std::uint64_t>(out.cols())))
    serial::accumulate_pauli(out, coeff, p);
  else
    parallel::accumulate_pauli(out, coeff, p);
}

void apply_single_qubit(Eigen::VectorXcd& psi, int n, int site,
                        const Eigen::Matrix2cd& u) {
  if (!use_parallel(static_cast<std::uint64_t>(psi.size())))
    serial::apply_single_qubit(psi, n, site, u);
  else
    parallel::apply_single_qubit(psi, n, site, u);
}

void conjugate_single_qubit(Eigen::MatrixXcd& rho, int n, int site,
                            const Eigen::Matrix2cd& u) {
  // Matrix conjugation does 2^n work per row, so the cutoff is lower.
  if (!use_parallel(static_cast<std::uint64_t>(rho.rows()) << 4))
    serial::conjugate_single_qubit(rho, n, site, u);
  else
    parallel::conjugate_single_qubit(rho, n, site, u);
}

}  // namespace stabwit::kernels
