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

#include "spd/circuits.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace spd {

LatticeSpec LatticeSpec::create(uint32_t n,
                                std::vector<std::pair<uint32_t, uint32_t>> edges) {
  if (n == 0) throw std::invalid_argument("lattice needs at least one qubit");
  for (auto& [a, b] : edges) {
    if (a == b) {
      throw std::invalid_argument("lattice has self-loop at qubit " + std::to_string(a));
    }
    if (a >= n || b >= n) {
      throw std::invalid_argument("lattice edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range for n=" +
                                  std::to_string(n));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("lattice has a duplicate edge");
  }
  return {n, std::move(edges)};
}

LatticeSpec LatticeSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open lattice file " + path.string());
  std::string line;
  std::optional<uint32_t> n;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!n) {
      uint32_t v;
      if (fields >> v) {
        n = v;
        uint32_t extra;
        if (fields >> extra) {
          throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                      ": expected a single qubit count");
        }
      }
      continue;
    }
    uint32_t a, b;
    if (fields >> a) {
      if (!(fields >> b)) {
        throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                    ": expected an 'i j' edge pair");
      }
      edges.emplace_back(a, b);
    }
  }
  if (!n) throw std::invalid_argument(path.string() + ": missing qubit count line");
  return create(*n, std::move(edges));
}

LatticeSpec LatticeSpec::chain(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  return create(n, std::move(edges));
}

LatticeSpec LatticeSpec::ring(uint32_t n) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 qubits");
  auto edges = chain(n).edges;
  edges.emplace_back(0, n - 1);
  return create(n, std::move(edges));
}

uint32_t LatticeSpec::max_degree() const {
  std::vector<uint32_t> deg(n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return edges.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool LatticeSpec::is_connected() const {
  if (n <= 1) return true;
  std::vector<std::vector<uint32_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<uint32_t> stack{0};
  seen[0] = 1;
  uint32_t count = 1;
  while (!stack.empty()) {
    const uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

void LatticeSpec::require_heavy_hex_valid() const {
  if (max_degree() > 3) {
    throw std::invalid_argument("not a heavy-hex lattice: vertex degree " +
                                std::to_string(max_degree()) + " exceeds 3");
  }
}

LatticeSpec heavy_hex(uint32_t distance_parameter) {
  if (distance_parameter < 1) {
    throw std::invalid_argument("heavy_hex distance parameter must be >= 1");
  }
  const uint32_t d = distance_parameter;
  // Brick-wall honeycomb on grid points (row, col) with rows 0..d and
  // columns 0..2d: all horizontal edges, vertical edges where row+col is
  // even. Subdividing every edge yields the heavy-hex graph.
  const uint32_t rows = d + 1, cols = 2 * d + 1;
  auto corner = [&](uint32_t r, uint32_t c) { return r * cols + c; };
  const uint32_t num_corners = rows * cols;

  std::vector<std::pair<uint32_t, uint32_t>> hex_edges;
  for (uint32_t r = 0; r < rows; ++r) {
    for (uint32_t c = 0; c + 1 < cols; ++c) hex_edges.emplace_back(corner(r, c), corner(r, c + 1));
  }
  for (uint32_t r = 0; r + 1 < rows; ++r) {
    for (uint32_t c = 0; c < cols; ++c) {
      if ((r + c) % 2 == 0) hex_edges.emplace_back(corner(r, c), corner(r + 1, c));
    }
  }
  std::sort(hex_edges.begin(), hex_edges.end());

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(2 * hex_edges.size());
  uint32_t next = num_corners;  // one subdivision vertex per honeycomb edge
  for (const auto& [a, b] : hex_edges) {
    edges.emplace_back(a, next);
    edges.emplace_back(next, b);
    ++next;
  }
  LatticeSpec lattice = LatticeSpec::create(next, std::move(edges));
  lattice.require_heavy_hex_valid();
  return lattice;
}

std::vector<RotationGate> build_circuit(const KickedIsingSpec& spec) {
  std::vector<RotationGate> circuit;
  const uint32_t n = spec.lattice.n;
  const size_t per_step = n + spec.lattice.edges.size();
  circuit.reserve(per_step * spec.trotter_steps + (spec.extra_rx_layer ? n : 0));

  auto push_x_layer = [&] {
    for (uint32_t q = 0; q < n; ++q) {
      circuit.emplace_back(PauliString::single(n, q, 'X'), spec.theta_h);
    }
  };
  for (uint32_t step = 0; step < spec.trotter_steps; ++step) {
    push_x_layer();
    for (const auto& [i, j] : spec.lattice.edges) {
      circuit.emplace_back(multiply(PauliString::single(n, i, 'Z'),
                                    PauliString::single(n, j, 'Z')),
                           kZzRotationAngle);
    }
  }
  if (spec.extra_rx_layer) push_x_layer();
  return circuit;
}

std::vector<ObservableTerm> observable_preset(std::string_view name,
                                              const LatticeSpec& lattice) {
  const uint32_t n = lattice.n;
  if (name == "Mz") {
    std::vector<ObservableTerm> terms;
    terms.reserve(n);
    const double w = 1.0 / static_cast<double>(n);
    for (uint32_t q = 0; q < n; ++q) {
      terms.push_back({w, PauliString::single(n, q, 'Z')});
    }
    return terms;
  }
  if (name.starts_with("Z_q:")) {
    const std::string_view idx = name.substr(4);
    uint32_t q = 0;
    const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), q);
    if (ec != std::errc{} || ptr != idx.data() + idx.size()) {
      throw std::invalid_argument("invalid qubit index in preset '" + std::string(name) + "'");
    }
    if (q >= n) {
      throw std::invalid_argument("Z_q index " + std::to_string(q) +
                                  " out of range for n=" + std::to_string(n));
    }
    return {{1.0, PauliString::single(n, q, 'Z')}};
  }
  if (name.starts_with("custom:")) {
    return {{1.0, PauliString::parse(name.substr(7), n)}};
  }
  throw std::invalid_argument("unknown observable preset '" + std::string(name) + "'");
}

std::vector<ObservableTerm> load_observable_file(const std::filesystem::path& path,
                                                 uint32_t num_qubits) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open observable file " + path.string());
  std::vector<ObservableTerm> terms;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double coeff;
    if (!(fields >> coeff)) continue;  // blank line
    std::string pauli_text;
    std::getline(fields, pauli_text);
    try {
      terms.push_back({coeff, PauliString::parse(pauli_text, num_qubits)});
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " +
                                  err.what());
    }
  }
  if (terms.empty()) {
    throw std::invalid_argument(path.string() + ": no observable terms found");
  }
  return terms;
}

}  // namespace spd
