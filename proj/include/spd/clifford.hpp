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

#ifndef SPD_CLIFFORD_HPP_
#define SPD_CLIFFORD_HPP_

#include <span>
#include <vector>

#include "spd/pauli.hpp"

namespace spd {

/// Angles within this distance of an integer multiple of pi/2 are treated
/// as exactly Clifford.
inline constexpr double kCliffordAngleTol = 1e-12;

/// One Pauli rotation exp(-i * angle * generator / 2).
struct RotationGate {
  PauliString generator;  // Hermitian
  double angle = 0.0;

  RotationGate(PauliString gen, double theta);

  uint32_t num_qubits() const { return generator.num_qubits(); }
  bool is_clifford() const;
};

/// Result of splitting theta = remainder + quarter_turns * (pi/2) with
/// remainder in [-pi/4, pi/4]; a remainder of exactly pi/4 resolves to the
/// positive side.
struct AngleSplit {
  double remainder = 0.0;
  long quarter_turns = 0;
};

AngleSplit split_angle(double theta);

/// Heisenberg conjugation U^dag sigma U through a Clifford rotation
/// U = exp(-i k (pi/2) P / 2): the anticommuting case maps sigma to
/// +/- i P sigma (k odd) or -sigma (k = 2 mod 4); commuting sigma passes
/// through unchanged. Throws ContractViolation for non-Clifford angles.
PauliString conjugate_pauli(const PauliString& sigma, const RotationGate& gate);

/// A circuit with all Clifford content folded away. `rotations` holds only
/// the small-angle non-Clifford remainders, already ordered for Heisenberg
/// consumption (last physical gate first); `observable_terms` is the
/// measured observable conjugated through the full Clifford product.
struct FoldedCircuit {
  uint32_t num_qubits = 0;
  std::vector<RotationGate> rotations;
  std::vector<ObservableTerm> observable_terms;
};

struct FoldOptions {
  /// Pull one extra pi/2 quarter-turn out of every non-Clifford rotation
  /// (remainders then lie in (-pi/2, pi/2) instead of [-pi/4, pi/4]).
  bool angle_transform = false;
};

/// Folds a physical-order rotation circuit around an observable.
///
/// Each gate splits into a non-Clifford remainder and Clifford quarter
/// turns. Writing the circuit as U = C_tot * S_N' ... S_1', every
/// remainder's generator is conjugated (one quarter-turn at a time) through
/// the Clifford parts of all earlier gates, and the observable through
/// C_tot; the folded circuit then reproduces the original expectation
/// value exactly when evolved without truncation.
FoldedCircuit fold(std::span<const RotationGate> circuit,
                   std::span<const ObservableTerm> observable,
                   const FoldOptions& options = {});

}  // namespace spd

#endif  // SPD_CLIFFORD_HPP_
