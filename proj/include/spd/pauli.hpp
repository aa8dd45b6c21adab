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

#ifndef SPD_PAULI_HPP_
#define SPD_PAULI_HPP_

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spd {

inline constexpr double kPi = std::numbers::pi;

/// Thrown when a caller breaks an operation's contract (as opposed to
/// feeding malformed input, which raises std::invalid_argument).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A signed n-qubit Pauli operator in symplectic binary form:
///
///   i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}
///
/// Qubit q carries I/X/Z/Y for (x_q, z_q) = (0,0)/(1,0)/(0,1)/(1,1).
/// Since Y = i*XZ, the Hermitian letter string with the same masks equals
/// i^{popcount(x & z)} * X^x Z^z; a PauliString is Hermitian exactly when
/// phase_exp + popcount(x & z) is even.
///
/// Bit vectors are packed into 64-bit words so that products, commutation
/// checks and weights are word-parallel. Values are immutable after
/// construction and safe to share across threads.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(uint32_t num_qubits);  // identity on num_qubits

  static PauliString identity(uint32_t num_qubits);
  /// Single-site Hermitian operator; pauli must be 'X', 'Y' or 'Z'.
  static PauliString single(uint32_t num_qubits, uint32_t qubit, char pauli);
  static PauliString from_bits(uint32_t num_qubits, std::vector<uint64_t> x,
                               std::vector<uint64_t> z, unsigned phase_exp);

  /// Parses either a dense letter string over {I,X,Y,Z} ("ZZ", "-YI") or a
  /// sparse site list ("X0 X1", "-i Y3 Z5"); optional prefix +, -, +i, -i.
  /// The sparse form needs an explicit qubit count.
  static PauliString parse(std::string_view text,
                           std::optional<uint32_t> num_qubits = std::nullopt);

  uint32_t num_qubits() const { return n_; }
  size_t num_words() const { return x_.size(); }
  std::span<const uint64_t> x_bits() const { return x_; }
  std::span<const uint64_t> z_bits() const { return z_; }
  unsigned phase_exp() const { return phase_exp_; }

  bool x_bit(uint32_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
  bool z_bit(uint32_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
  char letter(uint32_t q) const;

  bool is_hermitian() const;
  bool has_identity_paulis() const;  // both masks all-zero
  uint32_t weight() const;           // number of non-identity sites

  std::complex<double> phase() const;  // i^phase_exp
  std::complex<double> vacuum_expectation() const;
  bool anticommutes_with(const PauliString& other) const;
  bool same_paulis(const PauliString& other) const;  // ignores phase

  /// Copy with the global phase multiplied by i^k (k may be negative).
  PauliString times_i(int k) const;

  /// i exponent of the Hermitian letter string sharing these masks.
  unsigned canonical_phase_exp() const;

  /// Dense text form with sign prefix; parse(str()) round-trips exactly.
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  uint32_t n_ = 0;
  unsigned phase_exp_ = 0;  // mod 4
  std::vector<uint64_t> x_, z_;
};

/// Exact operator product a*b; masks XOR, phase accumulates as
/// i^{a.e + b.e + 2*popcount(a.z & b.x)}.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

/// True iff {a, b} = 0, i.e. the symplectic form
/// parity(a.x & b.z) xor parity(a.z & b.x) is 1. Phases are irrelevant.
bool anticommutes(const PauliString& a, const PauliString& b);

/// <0^n| a |0^n>: i^phase_exp when a has no X component, else 0.
std::complex<double> vacuum_expectation(const PauliString& a);

uint32_t weight(const PauliString& a);

PauliString parse_pauli(std::string_view text,
                        std::optional<uint32_t> num_qubits = std::nullopt);
std::string format_pauli(const PauliString& a);

std::ostream& operator<<(std::ostream& os, const PauliString& p);

/// One weighted term of a Pauli-sum observable.
struct ObservableTerm {
  std::complex<double> coefficient;
  PauliString pauli;
};

}  // namespace spd

#endif  // SPD_PAULI_HPP_
