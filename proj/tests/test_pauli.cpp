// Copyright 2026 The spdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spd/pauli.hpp"

#include <random>

#include "doctest.h"
#include "support/dense.hpp"
#include "support/random_cases.hpp"

using namespace spd;
using spd::testing::random_pauli;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("single-qubit products") {
  const auto X = PauliString::parse("X");
  const auto Y = PauliString::parse("Y");
  const auto Z = PauliString::parse("Z");
  const auto I = PauliString::identity(1);

  // X * Z = -iY
  CHECK(multiply(X, Z) == Y.times_i(3));
  // Z * Z = +I
  CHECK(multiply(Z, Z) == I);
  CHECK(multiply(X, Y) == Z.times_i(1));
  CHECK(multiply(Y, Z) == X.times_i(1));
  CHECK(multiply(Z, X) == Y.times_i(1));
}

TEST_CASE("two-qubit product with phase") {
  // (X (x) Z) * (Z (x) Z) = -i (Y (x) I)
  const auto a = PauliString::parse("XZ");
  const auto b = PauliString::parse("ZZ");
  const auto expected = PauliString::parse("-i YI");
  CHECK(multiply(a, b) == expected);
}

TEST_CASE("product rejects mismatched sizes") {
  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
  CHECK_THROWS_AS(anticommutes(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
}

TEST_CASE("anticommutation") {
  CHECK(anticommutes(PauliString::parse("X"), PauliString::parse("Z")));
  // two anticommuting sites -> even parity -> commute
  CHECK_FALSE(anticommutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
  CHECK_FALSE(anticommutes(PauliString::parse("X"), PauliString::parse("X")));
  // phases are irrelevant
  CHECK(anticommutes(PauliString::parse("X").times_i(2), PauliString::parse("Z")));
}

TEST_CASE("vacuum expectation") {
  CHECK(vacuum_expectation(PauliString::parse("ZZ")) == std::complex<double>{1.0, 0.0});
  CHECK(vacuum_expectation(PauliString::parse("XI")) == std::complex<double>{0.0, 0.0});
  CHECK(vacuum_expectation(PauliString::parse("-Z")) == std::complex<double>{-1.0, 0.0});
  CHECK(vacuum_expectation(PauliString::parse("IIII")) == std::complex<double>{1.0, 0.0});
}

TEST_CASE("weight") {
  CHECK(weight(PauliString::parse("III")) == 0);
  CHECK(weight(PauliString::parse("XYI")) == 2);
  CHECK(weight(PauliString::parse(std::string(17, 'Z'))) == 17);
  // straddles a word boundary
  std::string long_text(70, 'I');
  long_text[0] = 'X';
  long_text[69] = 'Y';
  CHECK(weight(PauliString::parse(long_text)) == 2);
}

TEST_CASE("parse dense and sparse forms") {
  const auto zz = PauliString::parse("ZZ", 2);
  CHECK(zz.phase_exp() == 0);
  CHECK(zz.z_bit(0));
  CHECK(zz.z_bit(1));
  CHECK_FALSE(zz.x_bit(0));

  // "-Y0" with n=2: the operator -Y on qubit 0
  const auto neg_y = PauliString::parse("-Y0", 2);
  CHECK(neg_y.x_bit(0));
  CHECK(neg_y.z_bit(0));
  CHECK_FALSE(neg_y.x_bit(1));
  CHECK(neg_y == PauliString::single(2, 0, 'Y').times_i(2));
  CHECK(neg_y.str() == "-YI");

  CHECK(PauliString::parse("X0 X1", 3) == PauliString::parse("XXI"));
  CHECK(PauliString::parse("+i Z2", 4) == PauliString::single(4, 2, 'Z').times_i(1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X0 X0", 2), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X5", 2), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X0 Y0", 2), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X0"), std::invalid_argument);  // sparse needs n
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("XX", 3), std::invalid_argument);
}

TEST_CASE("format round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 80);
    const PauliString p = random_pauli(rng, n);
    CHECK(PauliString::parse(p.str()) == p);
  }
}

TEST_CASE("hermiticity predicate") {
  CHECK(PauliString::parse("Y").is_hermitian());
  CHECK(PauliString::parse("-Y").is_hermitian());
  CHECK_FALSE(PauliString::parse("Y").times_i(1).is_hermitian());
  CHECK(PauliString::parse("XYZ").is_hermitian());
  CHECK_FALSE(PauliString::parse("+i XX").is_hermitian());
}

TEST_CASE("associativity: exhaustive n=1, randomized n<=8") {
  // every signed single-qubit operator
  std::vector<PauliString> all;
  for (const char* text : {"I", "X", "Y", "Z"}) {
    for (int e = 0; e < 4; ++e) all.push_back(PauliString::parse(text).times_i(e));
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        CHECK(multiply(a, multiply(b, c)) == multiply(multiply(a, b), c));
      }
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 8);
    const auto a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
    CHECK(multiply(a, multiply(b, c)) == multiply(multiply(a, b), c));
  }
}

TEST_CASE("involution: hermitian squares are exactly +I") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 8);
    const PauliString a = random_pauli(rng, n, /*hermitian=*/true);
    CHECK(multiply(a, a) == PauliString::identity(n));
  }
}

TEST_CASE("commutation consistency with products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 8);
    const auto a = random_pauli(rng, n), b = random_pauli(rng, n);
    const auto ab = multiply(a, b), ba = multiply(b, a);
    CHECK(ab.same_paulis(ba));
    if (anticommutes(a, b)) {
      CHECK(((ab.phase_exp() + 2) & 3) == ba.phase_exp());
    } else {
      CHECK(ab == ba);
    }
  }
}

TEST_CASE("nonzero vacuum expectation implies no X support") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 8);
    const PauliString a = random_pauli(rng, n);
    if (vacuum_expectation(a) != std::complex<double>{0.0, 0.0}) {
      bool any_x = false;
      for (uint32_t q = 0; q < n; ++q) any_x |= a.x_bit(q);
      CHECK_FALSE(any_x);
    }
  }
}

TEST_CASE("agreement with dense matrices for n<=4") {
  using spd::testing::matmul;
  using spd::testing::pauli_matrix;

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 4);
    const auto a = random_pauli(rng, n), b = random_pauli(rng, n);

    // multiply
    const auto product = multiply(a, b);
    CHECK(spd::testing::max_abs_diff(matmul(pauli_matrix(a), pauli_matrix(b)),
                                     pauli_matrix(product)) == 0.0);

    // anticommutes: AB + BA == 0
    auto ab = matmul(pauli_matrix(a), pauli_matrix(b));
    const auto ba = matmul(pauli_matrix(b), pauli_matrix(a));
    double anti_norm = 0.0;
    for (size_t k = 0; k < ab.a.size(); ++k) anti_norm += std::abs(ab.a[k] + ba.a[k]);
    CHECK(anticommutes(a, b) == (anti_norm == 0.0));

    // vacuum expectation is the top-left matrix element
    CHECK(vacuum_expectation(a) == pauli_matrix(a).at(0, 0));
  }
}

TEST_SUITE_END();
