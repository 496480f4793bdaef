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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stabwit {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliOp op);

/// An n-qubit tensor product of single-qubit Pauli operators together with a
/// global phase restricted to {+1, +i, -1, -i} (stored as the exponent e in
/// i^e).
///
/// Representation: two bitmasks in the symplectic (x|z) convention.
/// Site k maps to bit (n-1-k), so site 0 is the leftmost character of the
/// text form and the most significant bit of a computational basis index.
/// Per site: I=(x0,z0), X=(x1,z0), Y=(x1,z1), Z=(x0,z1).
class PauliString {
 public:
  // Identity string of n sites, phase +1.
  explicit PauliString(int n_qubits);
  PauliString(const std::vector<PauliOp>& ops, int phase_exponent = 0);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase_exponent);

  // Text grammar: optional phase token in {+, -, +i, -i} followed by one of
  // I, X, Y, Z per site. parse(str()) is the identity.
  static PauliString parse(std::string_view text);
  std::string str() const;

  int size() const { return n_; }
  PauliOp op(int site) const;
  void set_op(int site, PauliOp op);

  // Global phase is i^phase_exponent with exponent in {0,1,2,3}.
  int phase_exponent() const { return phase_exp_; }
  std::complex<double> phase() const;
  bool phase_is_real() const { return (phase_exp_ & 1) == 0; }
  void set_phase_exponent(int e) { phase_exp_ = static_cast<std::uint8_t>(e & 3); }

  bool is_identity_ops() const { return (x_ | z_) == 0; }
  int weight() const;  // number of non-identity sites

  // Index-space masks (bit p of a basis index corresponds to site n-1-p).
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support_mask() const { return x_ | z_; }

  // Group product with exact phase tracking.
  PauliString operator*(const PauliString& other) const;
  bool commutes_with(const PauliString& other) const;

  bool same_ops(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }
  bool operator==(const PauliString& other) const {
    return same_ops(other) && phase_exp_ == other.phase_exp_;
  }
  bool operator!=(const PauliString& other) const { return !(*this == other); }

  // Restriction to a subset of sites (given as a site mask, bit k = site k),
  // keeping the sites' relative order. Phase carries over unchanged.
  PauliString restrict_to_sites(std::uint64_t site_mask) const;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int n_ = 0;
  std::uint8_t phase_exp_ = 0;

  int bit_for_site(int site) const { return n_ - 1 - site; }
};

std::complex<double> ipow(int exponent);  // i^exponent

/// Real linear combination of Pauli strings plus an identity offset, kept in
/// canonical merged form: stored strings always carry phase +1 (a term's
/// +/-1 phase is folded into its coefficient; an imaginary total phase is
/// rejected since the observable would not be Hermitian), identity strings
/// fold into the offset, and duplicate strings merge. Terms iterate in
/// site-lexicographic order (I < X < Y < Z), which makes serialization and
/// test output deterministic.
class ObservableSum {
 public:
  struct Term {
    double coeff;
    PauliString string;
  };

  explicit ObservableSum(int n_qubits, double identity_coeff = 0.0);

  int size() const { return n_; }
  double identity_coeff() const { return identity_coeff_; }

  void add_identity(double coeff) { identity_coeff_ += coeff; }
  void add(double coeff, const PauliString& s);
  void add(const ObservableSum& other);
  void scale(double factor);

  std::size_t term_count() const { return terms_.size(); }
  std::vector<Term> terms() const;
  std::vector<PauliString> term_strings() const;

  bool operator==(const ObservableSum& other) const;

 private:
  struct Key {
    std::uint64_t x;
    std::uint64_t z;
    int n;
    // Site-lexicographic comparison with I < X < Y < Z.
    bool operator<(const Key& other) const;
    bool operator==(const Key& other) const {
      return x == other.x && z == other.z && n == other.n;
    }
  };

  int n_;
  double identity_coeff_;
  std::map<Key, double> terms_;
};

}  // namespace stabwit
