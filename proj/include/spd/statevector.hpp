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

#ifndef SPD_STATEVECTOR_HPP_
#define SPD_STATEVECTOR_HPP_

#include <complex>
#include <span>
#include <vector>

#include "spd/clifford.hpp"
#include "spd/pauli.hpp"

namespace spd {

/// Brute-force statevector simulator; ground truth for small instances.
/// Hard-capped at 24 qubits, it is a test fixture rather than a product
/// feature.
class StateVector {
 public:
  static constexpr uint32_t kMaxQubits = 24;

  /// Initializes |0...0>.
  explicit StateVector(uint32_t num_qubits);

  uint32_t num_qubits() const { return n_; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  /// Applies exp(-i*theta*P/2) = cos(theta/2) I - i sin(theta/2) P via
  /// in-place amplitude pair updates indexed by the generator's masks.
  void apply_pauli_rotation(const RotationGate& gate);

  void apply_circuit(std::span<const RotationGate> circuit);

  std::complex<double> expectation(const PauliString& op) const;
  double expectation(std::span<const ObservableTerm> terms) const;

  double norm() const;

 private:
  uint32_t n_;
  std::vector<std::complex<double>> amps_;
};

/// End-to-end oracle value <0|U^dag O U|0> for a physical-order circuit.
double oracle_expectation(std::span<const RotationGate> circuit,
                          std::span<const ObservableTerm> observable);

}  // namespace spd

#endif  // SPD_STATEVECTOR_HPP_
