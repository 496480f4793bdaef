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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stabwit/config.hpp"
#include "stabwit/dense.hpp"
#include "stabwit/pauli.hpp"
#include "test_helpers.hpp"

using namespace stabwit;
using testing_oracles::naive_dense;
using testing_oracles::naive_observable_dense;
using testing_oracles::random_pauli;

TEST_CASE("multiplication tracks phases exactly") {
  const PauliString xxx = PauliString::parse("XXX");
  const PauliString zzi = PauliString::parse("ZZI");
  CHECK((xxx * zzi).str() == "-YYX");

  // Involution for real-phase X/Z strings.
  const PauliString s = PauliString::parse("-XZIXZ");
  const PauliString square = s * s;
  CHECK(square.is_identity_ops());
  CHECK(square.phase_exponent() == 0);

  // Site phases (-i)(+i) cancel.
  const PauliString a = PauliString::parse("XZ");
  const PauliString b = PauliString::parse("ZX");
  const PauliString ab = a * b;
  CHECK(ab.str() == "YY");
  const Eigen::MatrixXcd expected = naive_dense(a) * naive_dense(b);
  CHECK((naive_dense(ab) - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("multiplication matches the dense product") {
  std::mt19937_64 eng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const PauliString a = random_pauli(n, eng, true);
      const PauliString b = random_pauli(n, eng, true);
      const Eigen::MatrixXcd product = naive_dense(a) * naive_dense(b);
      CHECK((naive_dense(a * b) - product).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("multiplication is associative") {
  // Exhaustive over operator content for n <= 3 (phases compose trivially).
  for (int n = 1; n <= 3; ++n) {
    const int total = 1 << (2 * n);
    std::vector<PauliString> all;
    for (int code = 0; code < total; ++code) {
      PauliString p(n);
      for (int k = 0; k < n; ++k)
        p.set_op(k, static_cast<PauliOp>((code >> (2 * k)) & 3));
      all.push_back(p);
    }
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          CHECK((a * b) * c == a * (b * c));
  }
  // Randomized with phases for larger n.
  std::mt19937_64 eng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(eng() % 7);
    const PauliString a = random_pauli(n, eng, true);
    const PauliString b = random_pauli(n, eng, true);
    const PauliString c = random_pauli(n, eng, true);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutation follows the site parity rule") {
  CHECK(PauliString::parse("XXX").commutes_with(PauliString::parse("ZZI")));
  CHECK_FALSE(PauliString::parse("XZ").commutes_with(PauliString::parse("ZZ")));
  std::mt19937_64 eng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(eng() % 6);
    const PauliString a = random_pauli(n, eng);
    const PauliString b = random_pauli(n, eng);
    CHECK(a.commutes_with(a));
    const Eigen::MatrixXcd da = naive_dense(a);
    const Eigen::MatrixXcd db = naive_dense(b);
    const double commutator = (da * db - db * da).cwiseAbs().maxCoeff();
    CHECK(a.commutes_with(b) == (commutator < 1e-12));
  }
}

TEST_CASE("length mismatches are rejected") {
  CHECK_THROWS_AS(PauliString::parse("XX") * PauliString::parse("X"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PauliString::parse("XX").commutes_with(PauliString::parse("XXX")),
      std::invalid_argument);
}

TEST_CASE("text round trip") {
  CHECK(PauliString::parse("-YYX").phase_exponent() == 2);
  CHECK(PauliString::parse("-YYX").op(0) == PauliOp::Y);
  CHECK(PauliString::parse("-YYX").op(2) == PauliOp::X);
  CHECK(PauliString::parse("XXX").phase_exponent() == 0);
  CHECK(PauliString::parse("+iZ").phase_exponent() == 1);
  CHECK(PauliString::parse("-iZ").phase_exponent() == 3);
  CHECK_THROWS_AS(PauliString::parse("XQZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+i"), std::invalid_argument);

  std::mt19937_64 eng(17);
  for (int rep = 0; rep < 100; ++rep) {
    const PauliString p = random_pauli(1 + static_cast<int>(eng() % 12), eng, true);
    CHECK(PauliString::parse(p.str()) == p);
  }
}

TEST_CASE("dense realization") {
  const Eigen::MatrixXcd x = to_dense(PauliString::parse("X")).matrix;
  CHECK(x(0, 1) == std::complex<double>(1, 0));
  CHECK(x(1, 0) == std::complex<double>(1, 0));
  CHECK(x(0, 0) == std::complex<double>(0, 0));

  const Eigen::MatrixXcd zz = to_dense(PauliString::parse("ZZ")).matrix;
  for (int j = 0; j < 4; ++j)
    CHECK(zz(j, j).real() == (j == 0 || j == 3 ? 1.0 : -1.0));

  // i * Y = [[0, 1], [-1, 0]].
  const Eigen::MatrixXcd iy = to_dense(PauliString::parse("+iY")).matrix;
  CHECK(std::abs(iy(0, 1) - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(iy(1, 0) - std::complex<double>(-1, 0)) < 1e-15);
  CHECK_FALSE(to_dense(PauliString::parse("+iY")).hermitian);

  std::mt19937_64 eng(19);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(eng() % 6);
    const PauliString p = random_pauli(n, eng, true);
    CHECK((to_dense(p).matrix - naive_dense(p)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("dense cap is enforced") {
  const int original = dense_cap();
  set_dense_cap(4);
  CHECK_THROWS_AS(to_dense(PauliString(5)), std::invalid_argument);
  ObservableSum obs(5, 1.0);
  CHECK_THROWS_AS(observable_to_dense(obs), std::invalid_argument);
  set_dense_cap(original);
}

TEST_CASE("observable canonical form") {
  ObservableSum obs(2, 0.0);
  obs.add(0.5, PauliString::parse("XZ"));
  obs.add(0.25, PauliString::parse("-XZ"));  // merges with opposite sign
  CHECK(obs.term_count() == 1);
  CHECK(obs.terms()[0].coeff == 0.25);

  obs.add(-0.25, PauliString::parse("XZ"));  // cancels entirely
  CHECK(obs.term_count() == 0);

  obs.add(1.0, PauliString::parse("-II"));  // identity folds into the offset
  CHECK(obs.identity_coeff() == -1.0);
  CHECK(obs.term_count() == 0);

  CHECK_THROWS_AS(obs.add(1.0, PauliString::parse("+iXZ")),
                  std::invalid_argument);
}

TEST_CASE("merging duplicates leaves the dense realization unchanged") {
  std::mt19937_64 eng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 3);
    ObservableSum merged(n, 0.3);
    Eigen::MatrixXcd direct = 0.3 * Eigen::MatrixXcd::Identity(1 << n, 1 << n);
    for (int t = 0; t < 12; ++t) {
      const PauliString p = random_pauli(n, eng);
      const double coeff = stabwit::uniform_double(eng) - 0.5;
      if (!p.is_identity_ops()) {
        merged.add(coeff, p);
        direct += coeff * naive_dense(p);
      }
    }
    CHECK((observable_to_dense(merged).matrix - direct).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("observable dense examples") {
  ObservableSum identity_only(3, 1.0);
  const Eigen::MatrixXcd id = observable_to_dense(identity_only).matrix;
  CHECK((id - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  ObservableSum empty(2, 0.0);
  CHECK(observable_to_dense(empty).matrix.cwiseAbs().maxCoeff() == 0.0);

  // The expanded three-qubit witness has eigenvalue -1.
  ObservableSum w(3, 1.5);
  w.add(-1.0, PauliString::parse("XXX"));
  w.add(-0.5, PauliString::parse("ZZI"));
  w.add(-0.5, PauliString::parse("IZZ"));
  w.add(-0.5, PauliString::parse("ZIZ"));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      naive_observable_dense(w));
  CHECK(solver.eigenvalues().minCoeff() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK((observable_to_dense(w).matrix - naive_observable_dense(w))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}
