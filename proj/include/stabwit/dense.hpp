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

#include "stabwit/pauli.hpp"

namespace stabwit {

/// Dense 2^n x 2^n realization of an operator, with a Hermiticity tag set by
/// the construction path.
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  bool hermitian = false;

  Eigen::Index dim() const { return matrix.rows(); }
};

// Throws when 2^n x 2^n storage would exceed the configured dense cap.
void check_dense_cap(int n_qubits);

// phase * tensor product of the single-site operators. Hermitian iff the
// phase is real.
DenseOperator to_dense(const PauliString& s);

// identity_coeff * I + sum of coeff * dense(term); always Hermitian.
DenseOperator observable_to_dense(const ObservableSum& o);

}  // namespace stabwit
