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

#include <cmath>
#include <string>

namespace spd {

RotationGate::RotationGate(PauliString gen, double theta)
    : generator(std::move(gen)), angle(theta) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  if (!generator.is_hermitian()) {
    throw std::invalid_argument("rotation generator must be Hermitian: " +
                                generator.str());
  }
}

bool RotationGate::is_clifford() const {
  const double k = std::round(angle / (kPi / 2));
  return std::abs(angle - k * (kPi / 2)) <= kCliffordAngleTol;
}

AngleSplit split_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("split_angle: non-finite angle");
  }
  // ceil(ratio - 1/2) rounds half down, which lands the pi/4 boundary on
  // the positive side.
  const double ratio = theta / (kPi / 2);
  const long k = static_cast<long>(std::ceil(ratio - 0.5));
  double remainder = theta - static_cast<double>(k) * (kPi / 2);
  if (std::abs(remainder) < kCliffordAngleTol) remainder = 0.0;
  return {remainder, k};
}

PauliString conjugate_pauli(const PauliString& sigma, const RotationGate& gate) {
  if (!gate.is_clifford()) {
    throw ContractViolation("conjugate_pauli requires a Clifford angle, got " +
                            std::to_string(gate.angle));
  }
  if (!sigma.anticommutes_with(gate.generator)) return sigma;
  const long k = std::lround(gate.angle / (kPi / 2));
  switch (((k % 4) + 4) % 4) {
    case 0:
      return sigma;
    case 1:
      return multiply(gate.generator, sigma).times_i(1);
    case 2:
      return sigma.times_i(2);
    default:
      return multiply(gate.generator, sigma).times_i(3);
  }
}

namespace {

// Quarter-turn count placing theta next to the nearest odd multiple of
// pi/2. Only called for non-Clifford theta, so the rounding never ties.
long nearest_odd_quarter_turns(double theta) {
  const double ratio = theta / (kPi / 2);
  return 2 * std::lround((ratio - 1.0) / 2.0) + 1;
}

PauliString conjugate_through(PauliString p, const std::vector<RotationGate>& cliffords) {
  // The accumulated product C_m ... C_1 conjugates as C_1^d ... C_m^d p C_m ... C_1,
  // so the most recent quarter-turn applies first.
  for (auto it = cliffords.rbegin(); it != cliffords.rend(); ++it) {
    p = conjugate_pauli(p, *it);
  }
  return p;
}

}  // namespace

FoldedCircuit fold(std::span<const RotationGate> circuit,
                   std::span<const ObservableTerm> observable,
                   const FoldOptions& options) {
  uint32_t n = 0;
  if (!circuit.empty()) {
    n = circuit.front().num_qubits();
  } else if (!observable.empty()) {
    n = observable.front().pauli.num_qubits();
  } else {
    throw std::invalid_argument("fold: empty circuit and empty observable");
  }
  for (const auto& gate : circuit) {
    if (gate.num_qubits() != n) {
      throw std::invalid_argument("fold: mixed qubit counts in circuit");
    }
  }
  for (const auto& term : observable) {
    if (term.pauli.num_qubits() != n) {
      throw std::invalid_argument("fold: observable qubit count mismatch");
    }
  }

  std::vector<RotationGate> cliffords;  // physical order, original generators
  std::vector<RotationGate> emitted;    // physical order, conjugated generators

  for (const auto& gate : circuit) {
    AngleSplit split = split_angle(gate.angle);
    if (options.angle_transform && split.remainder != 0.0) {
      split.quarter_turns = nearest_odd_quarter_turns(gate.angle);
      split.remainder = gate.angle - static_cast<double>(split.quarter_turns) * (kPi / 2);
    }
    if (split.remainder != 0.0) {
      emitted.emplace_back(conjugate_through(gate.generator, cliffords), split.remainder);
    }
    if (((split.quarter_turns % 4) + 4) % 4 != 0) {
      cliffords.emplace_back(gate.generator,
                             static_cast<double>(split.quarter_turns) * (kPi / 2));
    }
  }

  FoldedCircuit out;
  out.num_qubits = n;
  out.rotations.assign(emitted.rbegin(), emitted.rend());
  out.observable_terms.reserve(observable.size());
  for (const auto& term : observable) {
    out.observable_terms.push_back({term.coefficient, conjugate_through(term.pauli, cliffords)});
  }
  return out;
}

}  // namespace spd
