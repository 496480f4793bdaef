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

#include "stabwit/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabwit/config.hpp"

namespace stabwit {

namespace {

// phase_table[a][b] = t such that sigma_a * sigma_b = i^t * sigma_(a xor-b),
// with op codes I=0, X=1, Y=2, Z=3.
constexpr int kPhaseTable[4][4] = {
    // I  X  Y  Z
    {0, 0, 0, 0},  // I
    {0, 0, 1, 3},  // X: XY=iZ, XZ=-iY
    {0, 3, 0, 1},  // Y: YX=-iZ, YZ=iX
    {0, 1, 3, 0},  // Z: ZX=iY, ZY=-iX
};

PauliOp op_from_bits(bool x, bool z) {
  if (x) return z ? PauliOp::Y : PauliOp::X;
  return z ? PauliOp::Z : PauliOp::I;
}

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
}

}  // namespace

char pauli_char(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

std::complex<double> ipow(int exponent) {
  switch (exponent & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n_qubits) : n_(n_qubits) { check_qubit_count(n_); }

PauliString::PauliString(const std::vector<PauliOp>& ops, int phase_exponent)
    : n_(static_cast<int>(ops.size())),
      phase_exp_(static_cast<std::uint8_t>(phase_exponent & 3)) {
  check_qubit_count(n_);
  for (int k = 0; k < n_; ++k) set_op(k, ops[static_cast<std::size_t>(k)]);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                         int phase_exponent)
    : x_(x_mask), z_(z_mask), n_(n_qubits),
      phase_exp_(static_cast<std::uint8_t>(phase_exponent & 3)) {
  check_qubit_count(n_);
  if (n_ < 64 && ((x_ | z_) >> n_) != 0)
    throw std::invalid_argument("Pauli mask exceeds qubit count");
}

PauliOp PauliString::op(int site) const {
  if (site < 0 || site >= n_) throw std::out_of_range("Pauli site out of range");
  const std::uint64_t bit = 1ULL << bit_for_site(site);
  return op_from_bits(x_ & bit, z_ & bit);
}

void PauliString::set_op(int site, PauliOp op) {
  if (site < 0 || site >= n_) throw std::out_of_range("Pauli site out of range");
  const std::uint64_t bit = 1ULL << bit_for_site(site);
  x_ &= ~bit;
  z_ &= ~bit;
  if (op == PauliOp::X || op == PauliOp::Y) x_ |= bit;
  if (op == PauliOp::Z || op == PauliOp::Y) z_ |= bit;
}

int PauliString::weight() const {
  return std::popcount(x_ | z_);
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  int phase_exp = 0;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    const bool negative = text[0] == '-';
    pos = 1;
    if (pos < text.size() && text[pos] == 'i') {
      phase_exp = negative ? 3 : 1;
      ++pos;
    } else {
      phase_exp = negative ? 2 : 0;
    }
  }
  if (pos >= text.size())
    throw std::invalid_argument("Pauli string has no operators: '" +
                                std::string(text) + "'");
  std::vector<PauliOp> ops;
  ops.reserve(text.size() - pos);
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': ops.push_back(PauliOp::I); break;
      case 'X': ops.push_back(PauliOp::X); break;
      case 'Y': ops.push_back(PauliOp::Y); break;
      case 'Z': ops.push_back(PauliOp::Z); break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli character '") +
                                    text[pos] + "'");
    }
  }
  return PauliString(ops, phase_exp);
}

std::string PauliString::str() const {
  std::string out;
  switch (phase_exp_) {
    case 0: break;
    case 1: out += "+i"; break;
    case 2: out += "-"; break;
    case 3: out += "-i"; break;
  }
  out.reserve(out.size() + static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) out += pauli_char(op(k));
  return out;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  int phase = phase_exp_ + other.phase_exp_;
  for (int p = 0; p < n_; ++p) {
    const std::uint64_t bit = 1ULL << p;
    const int a = static_cast<int>(op_from_bits(x_ & bit, z_ & bit));
    const int b = static_cast<int>(op_from_bits(other.x_ & bit, other.z_ & bit));
    phase += kPhaseTable[a][b];
  }
  return PauliString(n_, x_ ^ other.x_, z_ ^ other.z_, phase);
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  // Symplectic form: sites where the operators differ and neither is identity.
  const std::uint64_t anti = (x_ & other.z_) ^ (z_ & other.x_);
  return (std::popcount(anti) & 1) == 0;
}

PauliString PauliString::restrict_to_sites(std::uint64_t site_mask) const {
  std::vector<PauliOp> ops;
  for (int k = 0; k < n_; ++k)
    if (site_mask & (1ULL << k)) ops.push_back(op(k));
  if (ops.empty()) throw std::invalid_argument("empty site restriction");
  return PauliString(ops, phase_exp_);
}

bool ObservableSum::Key::operator<(const Key& other) const {
  // Compare site by site, site 0 (the high bit) first, with I < X < Y < Z.
  for (int p = n - 1; p >= 0; --p) {
    const std::uint64_t bit = 1ULL << p;
    const int a = static_cast<int>(op_from_bits(x & bit, z & bit));
    const int b = static_cast<int>(op_from_bits(other.x & bit, other.z & bit));
    if (a != b) return a < b;
  }
  return false;
}

ObservableSum::ObservableSum(int n_qubits, double identity_coeff)
    : n_(n_qubits), identity_coeff_(identity_coeff) {
  check_qubit_count(n_);
}

void ObservableSum::add(double coeff, const PauliString& s) {
  if (s.size() != n_)
    throw std::invalid_argument("observable term has wrong qubit count");
  if (!s.phase_is_real())
    throw std::invalid_argument(
        "imaginary Pauli phase in observable term; Hermitian observables "
        "require real total phases");
  const double signed_coeff = s.phase_exponent() == 2 ? -coeff : coeff;
  if (s.is_identity_ops()) {
    identity_coeff_ += signed_coeff;
    return;
  }
  const Key key{s.x_mask(), s.z_mask(), n_};
  auto [it, inserted] = terms_.try_emplace(key, signed_coeff);
  if (!inserted) {
    it->second += signed_coeff;
    if (it->second == 0.0) terms_.erase(it);
  } else if (it->second == 0.0) {
    terms_.erase(it);
  }
}

void ObservableSum::add(const ObservableSum& other) {
  if (other.n_ != n_)
    throw std::invalid_argument("observable qubit count mismatch");
  identity_coeff_ += other.identity_coeff_;
  for (const auto& [key, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
}

void ObservableSum::scale(double factor) {
  identity_coeff_ *= factor;
  for (auto& [key, coeff] : terms_) coeff *= factor;
}

std::vector<ObservableSum::Term> ObservableSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_)
    out.push_back(Term{coeff, PauliString(key.n, key.x, key.z, 0)});
  return out;
}

std::vector<PauliString> ObservableSum::term_strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_)
    out.emplace_back(key.n, key.x, key.z, 0);
  return out;
}

bool ObservableSum::operator==(const ObservableSum& other) const {
  return n_ == other.n_ && identity_coeff_ == other.identity_coeff_ &&
         terms_ == other.terms_;
}

}  // namespace stabwit
