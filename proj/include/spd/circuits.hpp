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

#ifndef SPD_CIRCUITS_HPP_
#define SPD_CIRCUITS_HPP_

#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include "spd/clifford.hpp"
#include "spd/pauli.hpp"

namespace spd {

/// ZZ-layer rotation angle in the exp(-i*theta*P/2) convention; each edge
/// factor equals exp(+i(pi/4) Z_i Z_j) up to global phase, the entangling
/// Clifford of the kicked Ising step.
inline constexpr double kZzRotationAngle = -kPi / 2;

/// Qubit count plus coupling map. Edges are normalized to (lo, hi) and
/// sorted, so layer order is deterministic regardless of input order.
struct LatticeSpec {
  uint32_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  /// Validates (no self-loops, no duplicates, indices < n) and normalizes.
  static LatticeSpec create(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

  /// Plain-text format: optional '#' comment lines, first data line is n,
  /// then one "i j" pair per line.
  static LatticeSpec load(const std::filesystem::path& path);

  static LatticeSpec chain(uint32_t n);  // open chain, n-1 edges
  static LatticeSpec ring(uint32_t n);

  uint32_t max_degree() const;
  bool is_connected() const;

  /// Heavy-hex instances must keep every vertex degree <= 3.
  void require_heavy_hex_valid() const;
};

/// Heavy-hexagon lattice family: a d x d brick-wall honeycomb with an
/// extra vertex on every edge. d=1 is the single subdivided hexagon.
/// (The 127-qubit Eagle coupling map is shipped as a data fixture, not
/// generated; this family covers scaling studies and desk-scale tests.)
LatticeSpec heavy_hex(uint32_t distance_parameter);

struct KickedIsingSpec {
  LatticeSpec lattice;
  uint32_t trotter_steps = 0;
  double theta_h = 0.0;
  bool extra_rx_layer = false;
};

/// Trotter circuit [R_ZZ R_X(theta_h)]^t in physical order: per step one
/// X rotation per qubit (ascending), then one ZZ Clifford rotation per
/// edge (ascending); optionally one more X layer at the end.
std::vector<RotationGate> build_circuit(const KickedIsingSpec& spec);

/// Named observables: "Mz" (terms (1/n, Z_q) for every q), "Z_q:<index>",
/// or "custom:<pauli text>" in the parse_pauli grammar.
std::vector<ObservableTerm> observable_preset(std::string_view name,
                                              const LatticeSpec& lattice);

/// Observable file: one "coefficient <whitespace> pauli-text" per line,
/// '#' comments allowed.
std::vector<ObservableTerm> load_observable_file(const std::filesystem::path& path,
                                                 uint32_t num_qubits);

}  // namespace spd

#endif  // SPD_CIRCUITS_HPP_
