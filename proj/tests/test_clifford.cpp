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

#include "spd/clifford.hpp"

#include <random>

#include "doctest.h"
#include "spd/circuits.hpp"
#include "spd/engine.hpp"
#include "spd/statevector.hpp"
#include "support/random_cases.hpp"

using namespace spd;

namespace {

double spd_untruncated(const FoldedCircuit& folded) {
  return run(folded, SpdConfig{}).value;
}

}  // namespace

TEST_SUITE_BEGIN("clifford");

TEST_CASE("conjugate_pauli quarter turn: X through ZZ(pi/2)") {
  const RotationGate gate{PauliString::parse("ZZ"), kPi / 2};
  const auto sigma = PauliString::parse("XI");
  CHECK(conjugate_pauli(sigma, gate) == PauliString::parse("-YZ"));
}

TEST_CASE("conjugate_pauli leaves commuting operators alone") {
  for (double theta : {kPi / 2, kPi, -kPi / 2, 2 * kPi}) {
    const RotationGate gate{PauliString::parse("ZZ"), theta};
    const auto sigma = PauliString::parse("ZI");
    CHECK(conjugate_pauli(sigma, gate) == sigma);
  }
}

TEST_CASE("conjugate_pauli half turn negates anticommuting operators") {
  const RotationGate gate{PauliString::parse("Z"), kPi};
  CHECK(conjugate_pauli(PauliString::parse("X"), gate) == PauliString::parse("-X"));
}

TEST_CASE("conjugate_pauli rejects non-Clifford angles") {
  const RotationGate gate{PauliString::parse("Z"), 0.3};
  CHECK_THROWS_AS(conjugate_pauli(PauliString::parse("X"), gate), ContractViolation);
}

TEST_CASE("conjugate_pauli preserves hermiticity and off-support sites") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng() % 6);
    const auto gen = spd::testing::random_nonidentity_hermitian(rng, n);
    const long k = static_cast<long>(rng() % 4);
    const RotationGate gate{gen, static_cast<double>(k) * (kPi / 2)};
    const auto sigma = spd::testing::random_pauli(rng, n, /*hermitian=*/true);
    const auto out = conjugate_pauli(sigma, gate);
    CHECK(out.is_hermitian());
    for (uint32_t q = 0; q < n; ++q) {
      if (!gen.x_bit(q) && !gen.z_bit(q)) {
        CHECK(out.x_bit(q) == sigma.x_bit(q));
        CHECK(out.z_bit(q) == sigma.z_bit(q));
      }
    }
  }
}

TEST_CASE("split_angle examples") {
  auto s = split_angle(0.3);
  CHECK(s.remainder == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(s.quarter_turns == 0);

  s = split_angle(kPi / 2);
  CHECK(s.remainder == 0.0);
  CHECK(s.quarter_turns == 1);

  s = split_angle(1.0);
  CHECK(s.remainder == doctest::Approx(1.0 - kPi / 2).epsilon(1e-15));
  CHECK(s.quarter_turns == 1);

  // boundary resolves to +pi/4
  s = split_angle(kPi / 4);
  CHECK(s.remainder == doctest::Approx(kPi / 4));
  CHECK(s.quarter_turns == 0);
  s = split_angle(3 * kPi / 4);
  CHECK(s.remainder == doctest::Approx(kPi / 4));
  CHECK(s.quarter_turns == 1);
  s = split_angle(-kPi / 4);
  CHECK(s.remainder == doctest::Approx(kPi / 4));
  CHECK(s.quarter_turns == -1);

  CHECK_THROWS_AS(split_angle(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("split_angle reconstruction and range over random angles") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double theta = dist(rng);
    const auto s = split_angle(theta);
    CHECK(std::abs(s.remainder) <= kPi / 4 + 1e-12);
    CHECK(std::abs(theta - (s.remainder + static_cast<double>(s.quarter_turns) * (kPi / 2))) <
          1e-12);
  }
}

TEST_CASE("folding a single Clifford into the observable") {
  const std::vector<RotationGate> circuit{{PauliString::parse("ZZ"), kPi / 2}};
  const std::vector<ObservableTerm> obs{{1.0, PauliString::parse("XI")}};
  const auto folded = fold(circuit, obs);
  CHECK(folded.rotations.empty());
  REQUIRE(folded.observable_terms.size() == 1);
  CHECK(folded.observable_terms[0].pauli == PauliString::parse("-YZ"));
  CHECK(folded.observable_terms[0].coefficient == std::complex<double>{1.0, 0.0});
}

TEST_CASE("one kicked-Ising step on two qubits matches the oracle") {
  const auto lattice = LatticeSpec::create(2, {{0, 1}});
  const auto circuit = build_circuit({lattice, 1, 0.2, false});
  REQUIRE(circuit.size() == 3);  // two X rotations, one ZZ rotation

  const std::vector<ObservableTerm> obs{{1.0, PauliString::parse("ZI")}};
  const auto folded = fold(circuit, obs);
  CHECK(folded.rotations.size() == 2);
  for (const auto& rot : folded.rotations) {
    CHECK(rot.angle == doctest::Approx(0.2).epsilon(1e-15));
  }
  const double expected = oracle_expectation(circuit, obs);
  CHECK(spd_untruncated(folded) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("theta_h = pi/2 folds to an empty rotation list and stays exact") {
  std::mt19937_64 rng(47);
  for (uint32_t n : {2u, 5u, 12u}) {
    const auto lattice = spd::testing::random_lattice(rng, n);
    const auto circuit = build_circuit({lattice, 3, kPi / 2, false});
    const std::vector<ObservableTerm> obs{
        {1.0, PauliString::single(n, n / 2, 'Z')}};
    const auto folded = fold(circuit, obs);
    CHECK(folded.rotations.empty());
    CHECK(folded.observable_terms.size() == 1);
    const double expected = oracle_expectation(circuit, obs);
    CHECK(std::abs(spd_untruncated(folded) - expected) < 1e-12);
  }
}

TEST_CASE("folding preserves expectation values on random circuits") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng() % 7);  // n <= 8
    const auto circuit = spd::testing::random_rotation_circuit(rng, n, 3 * n);
    const std::vector<ObservableTerm> obs{
        {0.8, spd::testing::random_pauli(rng, n, /*hermitian=*/true)},
        {-0.4, spd::testing::random_pauli(rng, n, /*hermitian=*/true)}};
    const auto folded = fold(circuit, obs);
    for (const auto& rot : folded.rotations) {
      CHECK(std::abs(rot.angle) <= kPi / 4 + 1e-12);
      CHECK(std::abs(rot.angle) > kCliffordAngleTol);
    }
    const double expected = oracle_expectation(circuit, obs);
    CHECK(spd_untruncated(folded) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("folding with the angle transform stays exact") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng() % 5);
    const auto lattice = spd::testing::random_lattice(rng, n);
    const double theta_h = std::uniform_real_distribution<double>(0.05, kPi / 2 - 0.05)(rng);
    const auto circuit = build_circuit({lattice, 2, theta_h, trial % 2 == 0});
    const std::vector<ObservableTerm> obs{
        {1.0, spd::testing::random_pauli(rng, n, /*hermitian=*/true)}};
    const auto folded = fold(circuit, obs, {.angle_transform = true});
    for (const auto& rot : folded.rotations) {
      CHECK(std::abs(rot.angle) < kPi / 2);
      // every non-Clifford X rotation carries exactly one quarter-turn kick
      CHECK(rot.angle == doctest::Approx(theta_h - kPi / 2).epsilon(1e-12));
    }
    const double expected = oracle_expectation(circuit, obs);
    CHECK(spd_untruncated(folded) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("purely Clifford circuits fold to one term per input term") {
  std::mt19937_64 rng(61);
  const uint32_t n = 4;
  std::vector<RotationGate> circuit;
  for (int g = 0; g < 10; ++g) {
    circuit.emplace_back(spd::testing::random_nonidentity_hermitian(rng, n),
                         static_cast<double>(static_cast<long>(rng() % 7) - 3) * (kPi / 2));
  }
  const std::vector<ObservableTerm> obs{{0.5, PauliString::parse("ZIII")},
                                        {0.5, PauliString::parse("IZII")}};
  const auto folded = fold(circuit, obs);
  CHECK(folded.rotations.empty());
  CHECK(folded.observable_terms.size() == 2);
}

TEST_CASE("rotation gate basics") {
  CHECK_THROWS_AS(RotationGate(PauliString::parse("+i XX"), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(RotationGate(PauliString::parse("X"),
                               std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK(RotationGate(PauliString::parse("X"), kPi / 2).is_clifford());
  CHECK(RotationGate(PauliString::parse("X"), kPi / 2 + 5e-13).is_clifford());
  CHECK_FALSE(RotationGate(PauliString::parse("X"), 0.3).is_clifford());
}

TEST_SUITE_END();
