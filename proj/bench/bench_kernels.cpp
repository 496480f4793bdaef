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

// Times the serial reference kernels against the OpenMP variants.
// Usage: bench_kernels [state_qubits] [density_qubits]

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabwit/config.hpp"
#include "stabwit/kernels.hpp"
#include "stabwit/rng.hpp"

using stabwit::PauliOp;
using stabwit::PauliString;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

PauliString random_pauli(int n, std::mt19937_64& eng) {
  PauliString p(n);
  for (int k = 0; k < n; ++k)
    p.set_op(k, static_cast<PauliOp>(1 + eng() % 3));
  return p;
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_ms();
    f();
    const double t1 = now_ms();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const char* name, int n, double serial_ms, double parallel_ms) {
  std::printf("%-28s n=%-3d serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx\n",
              name, n, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int state_n = argc > 1 ? std::atoi(argv[1]) : 20;
  int density_n = argc > 2 ? std::atoi(argv[2]) : 11;
  if (state_n < 2 || state_n > stabwit::kStateCap) state_n = 20;
  if (density_n < 2 || density_n > 12) density_n = 11;
  stabwit::set_dense_cap(12);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel variants run serially\n");
#endif

  std::mt19937_64 eng(12345);

  {
    const Eigen::Index dim = Eigen::Index{1} << state_n;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      psi[j] = std::complex<double>(stabwit::normal_double(eng),
                                    stabwit::normal_double(eng));
    psi /= psi.norm();
    const PauliString p = random_pauli(state_n, eng);

    volatile double sink = 0.0;
    const double serial_ms = time_best_of(5, [&] {
      sink = stabwit::kernels::serial::pauli_expval(psi, p).real();
    });
    const double parallel_ms = time_best_of(5, [&] {
      sink = stabwit::kernels::parallel::pauli_expval(psi, p).real();
    });
    (void)sink;
    report("statevector expectation", state_n, serial_ms, parallel_ms);

    const double sa = time_best_of(3, [&] {
      Eigen::VectorXcd copy = psi;
      stabwit::kernels::serial::apply_single_qubit(
          copy, state_n, state_n / 2,
          (Eigen::Matrix2cd() << 0.6, 0.8, 0.8, -0.6).finished());
    });
    const double pa = time_best_of(3, [&] {
      Eigen::VectorXcd copy = psi;
      stabwit::kernels::parallel::apply_single_qubit(
          copy, state_n, state_n / 2,
          (Eigen::Matrix2cd() << 0.6, 0.8, 0.8, -0.6).finished());
    });
    report("single-qubit rotation", state_n, sa, pa);
  }

  {
    const Eigen::Index dim = Eigen::Index{1} << density_n;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(dim, dim);
    rho = (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    const PauliString p = random_pauli(density_n, eng);

    volatile double sink = 0.0;
    const double serial_ms = time_best_of(5, [&] {
      sink = stabwit::kernels::serial::pauli_trace(rho, p).real();
    });
    const double parallel_ms = time_best_of(5, [&] {
      sink = stabwit::kernels::parallel::pauli_trace(rho, p).real();
    });
    (void)sink;
    report("density-matrix trace", density_n, serial_ms, parallel_ms);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    const double sacc = time_best_of(3, [&] {
      stabwit::kernels::serial::accumulate_pauli(acc, {0.25, 0.0}, p);
    });
    const double pacc = time_best_of(3, [&] {
      stabwit::kernels::parallel::accumulate_pauli(acc, {0.25, 0.0}, p);
    });
    report("dense term accumulation", density_n, sacc, pacc);

    const Eigen::Matrix2cd had =
        (Eigen::Matrix2cd() << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2)
            .finished();
    const double sc = time_best_of(3, [&] {
      Eigen::MatrixXcd copy = rho;
      stabwit::kernels::serial::conjugate_single_qubit(copy, density_n, 0, had);
    });
    const double pc = time_best_of(3, [&] {
      Eigen::MatrixXcd copy = rho;
      stabwit::kernels::parallel::conjugate_single_qubit(copy, density_n, 0,
                                                         had);
    });
    report("basis-rotation conjugation", density_n, sc, pc);
  }

  return 0;
}
