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

#include "stabwit/dense.hpp"

#include <stdexcept>
#include <string>

#include "stabwit/config.hpp"
#include "stabwit/kernels.hpp"

namespace stabwit {

void check_dense_cap(int n_qubits) {
  const int cap = dense_cap();
  if (n_qubits > cap)
    throw std::invalid_argument("dense operator for " +
                                std::to_string(n_qubits) +
                                " qubits exceeds the dense cap of " +
                                std::to_string(cap));
}

DenseOperator to_dense(const PauliString& s) {
  check_dense_cap(s.size());
  const Eigen::Index dim = Eigen::Index{1} << s.size();
  DenseOperator out;
  out.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  kernels::accumulate_pauli(out.matrix, {1.0, 0.0}, s);
  out.hermitian = s.phase_is_real();
  return out;
}

DenseOperator observable_to_dense(const ObservableSum& o) {
  check_dense_cap(o.size());
  const Eigen::Index dim = Eigen::Index{1} << o.size();
  DenseOperator out;
  out.matrix = Eigen::MatrixXcd::Identity(dim, dim) * o.identity_coeff();
  for (const auto& term : o.terms())
    kernels::accumulate_pauli(out.matrix, {term.coeff, 0.0}, term.string);
  out.hermitian = true;
  return out;
}

}  // namespace stabwit
