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

// Seeded generators for property-style tests. Everything is driven by an
// explicit mt19937_64 so failures replay exactly.

#ifndef SPD_TESTS_SUPPORT_RANDOM_CASES_HPP_
#define SPD_TESTS_SUPPORT_RANDOM_CASES_HPP_

#include <random>
#include <vector>

#include "spd/circuits.hpp"
#include "spd/clifford.hpp"
#include "spd/pauli.hpp"

namespace spd::testing {

inline PauliString random_pauli(std::mt19937_64& rng, uint32_t n,
                                bool hermitian = false) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::string text;
  for (uint32_t q = 0; q < n; ++q) text.push_back("IXYZ"[letter(rng)]);
  PauliString p = PauliString::parse(text);
  const int e = std::uniform_int_distribution<int>(0, hermitian ? 1 : 3)(rng);
  return p.times_i(hermitian ? 2 * e : e);
}

inline PauliString random_nonidentity_hermitian(std::mt19937_64& rng, uint32_t n) {
  while (true) {
    PauliString p = random_pauli(rng, n, /*hermitian=*/true);
    if (!p.has_identity_paulis()) return p;
  }
}

/// Random circuit of Pauli rotations with arbitrary angles, Clifford
/// multiples sprinkled in so folding always has work to do.
inline std::vector<RotationGate> random_rotation_circuit(std::mt19937_64& rng, uint32_t n,
                                                         size_t num_gates) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<int> quarter(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<RotationGate> circuit;
  circuit.reserve(num_gates);
  for (size_t g = 0; g < num_gates; ++g) {
    PauliString gen = random_nonidentity_hermitian(rng, n);
    const double theta =
        kind(rng) == 0 ? quarter(rng) * (kPi / 2) : angle(rng);
    circuit.emplace_back(std::move(gen), theta);
  }
  return circuit;
}

/// Random connected lattice with max degree 3 (a chain plus a few extra
/// degree-respecting edges).
inline LatticeSpec random_lattice(std::mt19937_64& rng, uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<uint32_t> degree(n, 0);
  for (uint32_t q = 0; q + 1 < n; ++q) {
    edges.emplace_back(q, q + 1);
    ++degree[q];
    ++degree[q + 1];
  }
  std::uniform_int_distribution<uint32_t> pick(0, n - 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const uint32_t a = pick(rng), b = pick(rng);
    if (a == b || degree[a] >= 3 || degree[b] >= 3) continue;
    const auto e = std::minmax(a, b);
    if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) !=
        edges.end()) {
      continue;
    }
    edges.emplace_back(e.first, e.second);
    ++degree[a];
    ++degree[b];
  }
  return LatticeSpec::create(n, std::move(edges));
}

}  // namespace spd::testing

#endif  // SPD_TESTS_SUPPORT_RANDOM_CASES_HPP_
