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

namespace stabwit {

// Largest qubit count for which 2^n x 2^n dense objects (operators, density
// matrices) may be materialized. Default 12 (~270 MB per complex matrix).
int dense_cap();
void set_dense_cap(int cap);

// Pure state vectors are 2^n complex amplitudes and go further than dense
// matrices; threshold scans on stabilized states use this path.
inline constexpr int kStateCap = 24;

// Hard limit imposed by the bitmask Pauli representation.
inline constexpr int kMaxQubits = 64;

}  // namespace stabwit
