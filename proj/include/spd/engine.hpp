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

#ifndef SPD_ENGINE_HPP_
#define SPD_ENGINE_HPP_

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "spd/clifford.hpp"
#include "spd/pauli.hpp"

namespace spd {

inline constexpr uint32_t kUnboundedOrder = std::numeric_limits<uint32_t>::max();

struct SpdConfig {
  /// Maximum truncation order K; kUnboundedOrder disables truncation.
  uint32_t max_order = kUnboundedOrder;
  /// Amplitude pruning threshold; 0 keeps order-only truncation (default).
  double coeff_prune_threshold = 0.0;
};

/// Per-gate accounting from apply_rotation; size growth reconciles as
/// created - purged.
struct ApplyStats {
  size_t paired = 0;             // sigma <-> P*sigma pairs rotated together
  size_t created = 0;            // partner terms added this gate
  size_t discarded_by_order = 0; // partners dropped at creation (order > K)
  size_t purged = 0;             // entries removed at gate end
};

struct RunStats {
  size_t peak_terms = 0;
  size_t final_terms = 0;
  size_t gate_count = 0;
  double wall_time_seconds = 0.0;
  std::vector<double> per_gate_seconds;
  size_t total_created = 0;
  size_t total_purged = 0;
};

/// JSON object with fields peak_terms, final_terms, gate_count,
/// wall_time_seconds.
std::string run_stats_to_json(const RunStats& stats);

/// A Pauli-sum observable stored over the hashed symplectic key
/// (x_bits, z_bits). Phases live in the coefficients: the basis element
/// behind each key is the Hermitian letter string for those masks, so +P
/// and -P merge into one entry. Each entry also carries its creation
/// order k (the fewest generator products reaching it from the initial
/// observable).
///
/// Entries live in a flat insertion-ordered array; the hash table only
/// resolves point lookups, so iteration order (and therefore every
/// floating-point result) is deterministic.
class SparseObservable {
 public:
  explicit SparseObservable(uint32_t num_qubits);

  uint32_t num_qubits() const { return n_; }
  size_t size() const { return coeffs_.size(); }

  /// Adds coeff * p, folding p's phase into the coefficient. Merging with
  /// an existing entry keeps the smaller order.
  void accumulate(const PauliString& p, std::complex<double> coeff, uint32_t order);

  struct Term {
    PauliString pauli;  // canonical Hermitian representative
    std::complex<double> coeff;
    uint32_t order;
  };
  Term term(size_t i) const;
  std::complex<double> coefficient(size_t i) const { return coeffs_[i]; }
  uint32_t order(size_t i) const { return orders_[i]; }
  std::optional<size_t> find(const PauliString& p) const;

  /// Sum of coefficients over pure-Z/I entries; the imaginary part must
  /// stay below 1e-9 or a ContractViolation is thrown.
  double expectation() const;

  /// Drops entries with |coeff| <= threshold (exact zeros when 0).
  size_t purge(double threshold);

  /// Asserts the stored invariants; test helper.
  void check_invariants(uint32_t max_order) const;

 private:
  friend SparseObservable& apply_rotation(SparseObservable&, const RotationGate&,
                                          const SpdConfig&, ApplyStats*);

  static constexpr uint32_t kEmptySlot = std::numeric_limits<uint32_t>::max();

  const uint64_t* key(size_t i) const { return keys_.data() + i * 2 * words_; }
  uint32_t lookup(const uint64_t* key, uint64_t hash) const;
  void append(const uint64_t* key, std::complex<double> coeff, uint32_t order,
              uint64_t hash);
  void grow_table();
  void rebuild_table();

  uint32_t n_ = 0;
  uint32_t words_ = 0;                        // 64-bit words per mask
  std::vector<uint64_t> keys_;                // 2*words_ per entry: x then z
  std::vector<std::complex<double>> coeffs_;
  std::vector<uint32_t> orders_;
  std::vector<uint32_t> slots_;               // open addressing, linear probe
  uint64_t slot_mask_ = 0;
  std::vector<uint32_t> scratch_hits_;        // reused across gate applications
};

/// One sparse-dynamics step: rotates every stored term that anticommutes
/// with the gate generator against its partner P*sigma, reading pre-gate
/// coefficients only. New partners enter with order k_source + 1 and are
/// discarded at creation when that exceeds cfg.max_order. Requires a
/// non-Clifford gate with |angle| < pi/2.
SparseObservable& apply_rotation(SparseObservable& obs, const RotationGate& gate,
                                 const SpdConfig& cfg, ApplyStats* stats = nullptr);

struct RunResult {
  double value = 0.0;
  RunStats stats;
};

/// Evolves the folded observable through all folded rotations and takes
/// the vacuum expectation.
RunResult run(const FoldedCircuit& folded, const SpdConfig& cfg);

/// Sum of run() values over independently evolved folded circuits
/// (shared rotation list, one observable term each in the common case).
double run_sum(std::span<const FoldedCircuit> folded_terms, const SpdConfig& cfg,
               RunStats* aggregate = nullptr);

}  // namespace spd

#endif  // SPD_ENGINE_HPP_
