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

#include "spd/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spd {

namespace {

constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

// Sign-and-phase factor phi_b with P|b> = phi_b |b xor x>.
inline std::complex<double> basis_factor(unsigned phase_exp, uint64_t z_mask, uint64_t b) {
  const unsigned e = (phase_exp + 2 * (std::popcount(z_mask & b) & 1)) & 3;
  return kIPow[e];
}

}  // namespace

StateVector::StateVector(uint32_t num_qubits) : n_(num_qubits) {
  if (n_ == 0 || n_ > kMaxQubits) {
    throw std::invalid_argument("StateVector supports 1.." + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(n_));
  }
  amps_.assign(uint64_t{1} << n_, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

void StateVector::apply_pauli_rotation(const RotationGate& gate) {
  if (gate.num_qubits() != n_) {
    throw std::invalid_argument("gate qubit count mismatch");
  }
  const uint64_t xm = gate.generator.x_bits()[0];
  const uint64_t zm = gate.generator.z_bits()[0];
  const unsigned e = gate.generator.phase_exp();
  const double c = std::cos(gate.angle / 2);
  const std::complex<double> mis{0.0, -std::sin(gate.angle / 2)};  // -i sin(theta/2)
  const uint64_t dim = uint64_t{1} << n_;

  if (xm == 0) {
    for (uint64_t b = 0; b < dim; ++b) {
      amps_[b] *= c + mis * basis_factor(e, zm, b);
    }
    return;
  }
  const uint64_t pivot = xm & (~xm + 1);
  for (uint64_t b = 0; b < dim; ++b) {
    if (b & pivot) continue;
    const uint64_t p = b ^ xm;
    const std::complex<double> ab = amps_[b], ap = amps_[p];
    amps_[b] = c * ab + mis * basis_factor(e, zm, p) * ap;
    amps_[p] = c * ap + mis * basis_factor(e, zm, b) * ab;
  }
}

void StateVector::apply_circuit(std::span<const RotationGate> circuit) {
  for (const auto& gate : circuit) apply_pauli_rotation(gate);
}

std::complex<double> StateVector::expectation(const PauliString& op) const {
  if (op.num_qubits() != n_) {
    throw std::invalid_argument("observable qubit count mismatch");
  }
  const uint64_t xm = op.x_bits()[0];
  const uint64_t zm = op.z_bits()[0];
  const unsigned e = op.phase_exp();
  const uint64_t dim = uint64_t{1} << n_;
  std::complex<double> acc{0.0, 0.0};
  for (uint64_t b = 0; b < dim; ++b) {
    // (P psi)[b] = phi_{b^x} psi[b^x]
    acc += std::conj(amps_[b]) * basis_factor(e, zm, b ^ xm) * amps_[b ^ xm];
  }
  return acc;
}

double StateVector::expectation(std::span<const ObservableTerm> terms) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& term : terms) {
    acc += term.coefficient * expectation(term.pauli);
  }
  return acc.real();
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double oracle_expectation(std::span<const RotationGate> circuit,
                          std::span<const ObservableTerm> observable) {
  if (observable.empty()) return 0.0;
  StateVector psi(observable.front().pauli.num_qubits());
  psi.apply_circuit(circuit);
  return psi.expectation(observable);
}

}  // namespace spd
