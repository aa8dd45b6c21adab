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

#include "spd/engine.hpp"

#include <bit>
#include <chrono>
#include <cmath>

#include "json.hpp"

namespace spd {

namespace {

constexpr double kImagTol = 1e-9;

size_t words_for(uint32_t n) { return (static_cast<size_t>(n) + 63) / 64; }

uint64_t hash_key(const uint64_t* words, size_t count) {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (size_t i = 0; i < count; ++i) {
    h ^= words[i];
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 29;
  }
  h *= 0x94d049bb133111ebull;
  h ^= h >> 32;
  return h;
}

// a * i^e for e in 0..3, avoiding a full complex multiply.
inline std::complex<double> mul_ipow(std::complex<double> a, unsigned e) {
  switch (e & 3) {
    case 0:
      return a;
    case 1:
      return {-a.imag(), a.real()};
    case 2:
      return -a;
    default:
      return {a.imag(), -a.real()};
  }
}

}  // namespace

SparseObservable::SparseObservable(uint32_t num_qubits)
    : n_(num_qubits), words_(static_cast<uint32_t>(words_for(num_qubits))) {
  if (n_ == 0) throw std::invalid_argument("SparseObservable needs at least one qubit");
  slots_.assign(16, kEmptySlot);
  slot_mask_ = 15;
}

uint32_t SparseObservable::lookup(const uint64_t* key_words, uint64_t hash) const {
  const size_t kw = 2 * static_cast<size_t>(words_);
  uint64_t s = hash & slot_mask_;
  while (true) {
    const uint32_t idx = slots_[s];
    if (idx == kEmptySlot) return kEmptySlot;
    const uint64_t* stored = key(idx);
    bool eq = true;
    for (size_t w = 0; w < kw; ++w) {
      if (stored[w] != key_words[w]) {
        eq = false;
        break;
      }
    }
    if (eq) return idx;
    s = (s + 1) & slot_mask_;
  }
}

void SparseObservable::append(const uint64_t* key_words, std::complex<double> coeff,
                              uint32_t order, uint64_t hash) {
  const size_t kw = 2 * static_cast<size_t>(words_);
  const uint32_t idx = static_cast<uint32_t>(coeffs_.size());
  keys_.insert(keys_.end(), key_words, key_words + kw);
  coeffs_.push_back(coeff);
  orders_.push_back(order);
  uint64_t s = hash & slot_mask_;
  while (slots_[s] != kEmptySlot) s = (s + 1) & slot_mask_;
  slots_[s] = idx;
  if (2 * coeffs_.size() > slots_.size()) grow_table();
}

void SparseObservable::grow_table() {
  slots_.assign(slots_.size() * 2, kEmptySlot);
  slot_mask_ = slots_.size() - 1;
  rebuild_table();
}

void SparseObservable::rebuild_table() {
  const size_t kw = 2 * static_cast<size_t>(words_);
  for (uint32_t i = 0; i < coeffs_.size(); ++i) {
    uint64_t s = hash_key(key(i), kw) & slot_mask_;
    while (slots_[s] != kEmptySlot) s = (s + 1) & slot_mask_;
    slots_[s] = i;
  }
}

void SparseObservable::accumulate(const PauliString& p, std::complex<double> coeff,
                                  uint32_t order) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("observable term qubit count mismatch");
  }
  const size_t kw = 2 * static_cast<size_t>(words_);
  std::vector<uint64_t> key_words(kw);
  for (uint32_t w = 0; w < words_; ++w) {
    key_words[w] = p.x_bits()[w];
    key_words[words_ + w] = p.z_bits()[w];
  }
  // i^e X^x Z^z = i^{e - e_canonical} * (Hermitian representative)
  const std::complex<double> canonical =
      mul_ipow(coeff, (p.phase_exp() + 3 * p.canonical_phase_exp()) & 3);
  const uint64_t h = hash_key(key_words.data(), kw);
  const uint32_t idx = lookup(key_words.data(), h);
  if (idx == kEmptySlot) {
    append(key_words.data(), canonical, order, h);
  } else {
    coeffs_[idx] += canonical;
    orders_[idx] = std::min(orders_[idx], order);
  }
}

SparseObservable::Term SparseObservable::term(size_t i) const {
  const uint64_t* k = key(i);
  std::vector<uint64_t> x(k, k + words_), z(k + words_, k + 2 * words_);
  PauliString p = PauliString::from_bits(n_, std::move(x), std::move(z), 0);
  p = p.times_i(static_cast<int>(p.canonical_phase_exp()));
  return {std::move(p), coeffs_[i], orders_[i]};
}

std::optional<size_t> SparseObservable::find(const PauliString& p) const {
  if (p.num_qubits() != n_) return std::nullopt;
  const size_t kw = 2 * static_cast<size_t>(words_);
  std::vector<uint64_t> key_words(kw);
  for (uint32_t w = 0; w < words_; ++w) {
    key_words[w] = p.x_bits()[w];
    key_words[words_ + w] = p.z_bits()[w];
  }
  const uint32_t idx = lookup(key_words.data(), hash_key(key_words.data(), kw));
  if (idx == kEmptySlot) return std::nullopt;
  return idx;
}

double SparseObservable::expectation() const {
  // Canonical pure-Z/I representatives have vacuum expectation exactly +1.
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const uint64_t* k = key(i);
    uint64_t any_x = 0;
    for (uint32_t w = 0; w < words_; ++w) any_x |= k[w];
    if (any_x == 0) acc += coeffs_[i];
  }
  if (std::abs(acc.imag()) >= kImagTol) {
    throw ContractViolation("expectation has non-negligible imaginary part " +
                            std::to_string(acc.imag()));
  }
  return acc.real();
}

size_t SparseObservable::purge(double threshold) {
  const double limit = threshold * threshold;
  size_t kept = 0;
  const size_t kw = 2 * static_cast<size_t>(words_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (std::norm(coeffs_[i]) <= limit) continue;
    if (kept != i) {
      std::copy(key(i), key(i) + kw, keys_.begin() + kept * kw);
      coeffs_[kept] = coeffs_[i];
      orders_[kept] = orders_[i];
    }
    ++kept;
  }
  const size_t removed = coeffs_.size() - kept;
  if (removed) {
    keys_.resize(kept * kw);
    coeffs_.resize(kept);
    orders_.resize(kept);
    std::fill(slots_.begin(), slots_.end(), kEmptySlot);
    rebuild_table();
  }
  return removed;
}

void SparseObservable::check_invariants(uint32_t max_order) const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == std::complex<double>{0.0, 0.0}) {
      throw ContractViolation("stored coefficient is exactly zero");
    }
    if (orders_[i] > max_order) {
      throw ContractViolation("stored order " + std::to_string(orders_[i]) +
                              " exceeds K=" + std::to_string(max_order));
    }
    if (std::abs(coeffs_[i].imag()) >= kImagTol) {
      throw ContractViolation("coefficient has non-negligible imaginary part");
    }
    const uint64_t* k = key(i);
    if (lookup(k, hash_key(k, 2 * static_cast<size_t>(words_))) != i) {
      throw ContractViolation("hash table entry out of sync");
    }
  }
}

SparseObservable& apply_rotation(SparseObservable& obs, const RotationGate& gate,
                                 const SpdConfig& cfg, ApplyStats* stats) {
  if (gate.num_qubits() != obs.num_qubits()) {
    throw std::invalid_argument("gate qubit count mismatch");
  }
  if (gate.is_clifford()) {
    throw ContractViolation(
        "apply_rotation requires a non-Clifford gate; fold Clifford rotations first");
  }
  if (std::abs(gate.angle) >= kPi / 2) {
    throw ContractViolation("apply_rotation requires |angle| < pi/2, got " +
                            std::to_string(gate.angle));
  }

  const uint32_t W = obs.words_;
  const size_t kw = 2 * static_cast<size_t>(W);
  const double c = std::cos(gate.angle);
  const double s = std::sin(gate.angle);

  // Local copy of the generator masks; generator phase folds into the
  // product phase below.
  std::vector<uint64_t> p(kw);
  for (uint32_t w = 0; w < W; ++w) {
    p[w] = gate.generator.x_bits()[w];
    p[W + w] = gate.generator.z_bits()[w];
  }
  const unsigned pe = gate.generator.phase_exp();

  // Phase of the scattered term: a_sigma contributes
  // sin * i^{1 + g - e_tau} to the partner key tau, with
  // P * sigma_hat = i^g X^x Z^z and g = pe + e_sigma + 2*pc(P.z & sigma.x).
  auto scatter_phase = [&](const uint64_t* from, const uint64_t* to) -> unsigned {
    unsigned e_from = 0, e_to = 0, swaps = 0;
    for (uint32_t w = 0; w < W; ++w) {
      e_from += static_cast<unsigned>(std::popcount(from[w] & from[W + w]));
      e_to += static_cast<unsigned>(std::popcount(to[w] & to[W + w]));
      swaps += static_cast<unsigned>(std::popcount(p[W + w] & from[w]));
    }
    return (1 + pe + e_from + 2 * swaps + 3 * e_to) & 3;
  };

  // Classify against the pre-gate term set only; entries appended below
  // are partners of already-processed terms and must not be revisited.
  const size_t size0 = obs.size();
  auto& hits = obs.scratch_hits_;
  hits.clear();
  for (size_t i = 0; i < size0; ++i) {
    const uint64_t* k = obs.key(i);
    unsigned acc = 0;
    for (uint32_t w = 0; w < W; ++w) {
      acc ^= static_cast<unsigned>(std::popcount(k[w] & p[W + w]));
      acc ^= static_cast<unsigned>(std::popcount(k[W + w] & p[w]));
    }
    if (acc & 1) hits.push_back(static_cast<uint32_t>(i));
  }

  ApplyStats local;
  std::vector<uint64_t> tau(kw);
  for (const uint32_t i : hits) {
    const uint64_t* ki = obs.key(i);
    for (size_t w = 0; w < kw; ++w) tau[w] = ki[w] ^ p[w];
    const uint64_t h = hash_key(tau.data(), kw);
    const uint32_t j = obs.lookup(tau.data(), h);
    if (j != SparseObservable::kEmptySlot) {
      if (j < i) continue;  // pair already rotated when j was visited
      // Both members present: rotate the pair with pre-gate values.
      const std::complex<double> ai = obs.coeffs_[i];
      const std::complex<double> aj = obs.coeffs_[j];
      obs.coeffs_[i] = c * ai + s * mul_ipow(aj, scatter_phase(tau.data(), ki));
      obs.coeffs_[j] = c * aj + s * mul_ipow(ai, scatter_phase(ki, tau.data()));
      const uint32_t oi = obs.orders_[i], oj = obs.orders_[j];
      obs.orders_[i] = std::min(oi, oj + 1);
      obs.orders_[j] = std::min(oj, oi + 1);
      ++local.paired;
    } else {
      const uint32_t new_order = obs.orders_[i] + 1;
      const std::complex<double> ai = obs.coeffs_[i];
      obs.coeffs_[i] = c * ai;
      if (new_order <= cfg.max_order) {
        const std::complex<double> contrib = s * mul_ipow(ai, scatter_phase(ki, tau.data()));
        obs.append(tau.data(), contrib, new_order, h);  // may invalidate ki
        ++local.created;
      } else {
        ++local.discarded_by_order;
      }
    }
  }

  local.purged = obs.purge(cfg.coeff_prune_threshold);
  if (stats) *stats = local;
  return obs;
}

RunResult run(const FoldedCircuit& folded, const SpdConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SparseObservable obs(folded.num_qubits);
  for (const auto& term : folded.observable_terms) {
    if (!term.pauli.is_hermitian()) {
      throw std::invalid_argument("observable term is not Hermitian: " + term.pauli.str());
    }
    obs.accumulate(term.pauli, term.coefficient, 0);
  }
  obs.purge(0.0);

  RunResult result;
  result.stats.gate_count = folded.rotations.size();
  result.stats.peak_terms = obs.size();
  result.stats.per_gate_seconds.reserve(folded.rotations.size());

  for (const auto& gate : folded.rotations) {
    const auto g0 = std::chrono::steady_clock::now();
    ApplyStats gate_stats;
    apply_rotation(obs, gate, cfg, &gate_stats);
    const auto g1 = std::chrono::steady_clock::now();
    result.stats.per_gate_seconds.push_back(std::chrono::duration<double>(g1 - g0).count());
    // High-water mark is reached just before the end-of-gate purge.
    result.stats.peak_terms = std::max(result.stats.peak_terms, obs.size() + gate_stats.purged);
    result.stats.total_created += gate_stats.created;
    result.stats.total_purged += gate_stats.purged;
  }

  result.value = obs.expectation();
  result.stats.final_terms = obs.size();
  const auto t1 = std::chrono::steady_clock::now();
  result.stats.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
  return result;
}

double run_sum(std::span<const FoldedCircuit> folded_terms, const SpdConfig& cfg,
               RunStats* aggregate) {
  double total = 0.0;
  RunStats agg;
  for (const auto& folded : folded_terms) {
    if (folded.num_qubits != folded_terms.front().num_qubits) {
      throw std::invalid_argument("run_sum: mixed qubit counts");
    }
    RunResult r = run(folded, cfg);
    total += r.value;
    agg.peak_terms = std::max(agg.peak_terms, r.stats.peak_terms);
    agg.final_terms += r.stats.final_terms;
    agg.gate_count = std::max(agg.gate_count, r.stats.gate_count);
    agg.wall_time_seconds += r.stats.wall_time_seconds;
    agg.total_created += r.stats.total_created;
    agg.total_purged += r.stats.total_purged;
  }
  if (aggregate) *aggregate = agg;
  return total;
}

std::string run_stats_to_json(const RunStats& stats) {
  nlohmann::json j{{"peak_terms", stats.peak_terms},
                   {"final_terms", stats.final_terms},
                   {"gate_count", stats.gate_count},
                   {"wall_time_seconds", stats.wall_time_seconds}};
  return j.dump();
}

}  // namespace spd
