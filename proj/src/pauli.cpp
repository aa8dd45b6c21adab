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

#include "spd/pauli.hpp"

#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

namespace spd {

namespace {

size_t words_for(uint32_t n) { return (static_cast<size_t>(n) + 63) / 64; }

constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts: " +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()));
  }
}

}  // namespace

PauliString::PauliString(uint32_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliString PauliString::identity(uint32_t num_qubits) {
  return PauliString(num_qubits);
}

PauliString PauliString::single(uint32_t num_qubits, uint32_t qubit, char pauli) {
  if (qubit >= num_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range for n=" + std::to_string(num_qubits));
  }
  PauliString p(num_qubits);
  const uint64_t bit = uint64_t{1} << (qubit & 63);
  switch (pauli) {
    case 'X':
      p.x_[qubit >> 6] |= bit;
      break;
    case 'Z':
      p.z_[qubit >> 6] |= bit;
      break;
    case 'Y':
      p.x_[qubit >> 6] |= bit;
      p.z_[qubit >> 6] |= bit;
      p.phase_exp_ = 1;  // Y = i*XZ
      break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + pauli + "'");
  }
  return p;
}

PauliString PauliString::from_bits(uint32_t num_qubits, std::vector<uint64_t> x,
                                   std::vector<uint64_t> z, unsigned phase_exp) {
  const size_t w = words_for(num_qubits);
  if (x.size() != w || z.size() != w) {
    throw std::invalid_argument("bit vector word count does not match qubit count");
  }
  // Clear padding bits above qubit n-1 so word-parallel ops stay exact.
  if (num_qubits & 63) {
    const uint64_t mask = (uint64_t{1} << (num_qubits & 63)) - 1;
    if (w > 0) {
      x.back() &= mask;
      z.back() &= mask;
    }
  }
  PauliString p(num_qubits);
  p.x_ = std::move(x);
  p.z_ = std::move(z);
  p.phase_exp_ = phase_exp & 3;
  return p;
}

char PauliString::letter(uint32_t q) const {
  const bool x = x_bit(q), z = z_bit(q);
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

bool PauliString::is_hermitian() const {
  return ((phase_exp_ + canonical_phase_exp()) & 1) == 0;
}

unsigned PauliString::canonical_phase_exp() const {
  unsigned c = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    c += static_cast<unsigned>(std::popcount(x_[w] & z_[w]));
  }
  return c & 3;
}

bool PauliString::has_identity_paulis() const {
  for (size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

uint32_t PauliString::weight() const {
  uint32_t c = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    c += static_cast<uint32_t>(std::popcount(x_[w] | z_[w]));
  }
  return c;
}

std::complex<double> PauliString::phase() const { return kIPow[phase_exp_ & 3]; }

std::complex<double> PauliString::vacuum_expectation() const {
  for (uint64_t v : x_) {
    if (v) return {0.0, 0.0};
  }
  return phase();
}

bool PauliString::anticommutes_with(const PauliString& other) const {
  require_same_size(*this, other);
  unsigned acc = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    acc ^= static_cast<unsigned>(std::popcount(x_[w] & other.z_[w]));
    acc ^= static_cast<unsigned>(std::popcount(z_[w] & other.x_[w]));
  }
  return acc & 1;
}

bool PauliString::same_paulis(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliString PauliString::times_i(int k) const {
  PauliString p = *this;
  p.phase_exp_ = static_cast<unsigned>((static_cast<int>(p.phase_exp_) + (k % 4) + 8) & 3);
  return p;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  const unsigned d = (phase_exp_ + 4 - canonical_phase_exp()) & 3;
  std::string out = kPrefix[d];
  out.reserve(out.size() + n_);
  for (uint32_t q = 0; q < n_; ++q) out.push_back(letter(q));
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const size_t w = a.num_words();
  std::vector<uint64_t> x(w), z(w);
  unsigned swaps = 0;
  for (size_t i = 0; i < w; ++i) {
    x[i] = a.x_bits()[i] ^ b.x_bits()[i];
    z[i] = a.z_bits()[i] ^ b.z_bits()[i];
    swaps += static_cast<unsigned>(std::popcount(a.z_bits()[i] & b.x_bits()[i]));
  }
  const unsigned phase = (a.phase_exp() + b.phase_exp() + 2 * swaps) & 3;
  return PauliString::from_bits(a.num_qubits(), std::move(x), std::move(z), phase);
}

bool anticommutes(const PauliString& a, const PauliString& b) {
  return a.anticommutes_with(b);
}

std::complex<double> vacuum_expectation(const PauliString& a) {
  return a.vacuum_expectation();
}

uint32_t weight(const PauliString& a) { return a.weight(); }

namespace {

struct ParsedPrefix {
  unsigned phase_exp;  // display exponent d in i^d
  size_t consumed;
};

ParsedPrefix parse_prefix(std::string_view s) {
  if (s.starts_with("+i")) return {1, 2};
  if (s.starts_with("-i")) return {3, 2};
  if (s.starts_with("+")) return {0, 1};
  if (s.starts_with("-")) return {2, 1};
  return {0, 0};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PauliString PauliString::parse(std::string_view text, std::optional<uint32_t> num_qubits) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty Pauli string");
  const auto prefix = parse_prefix(s);
  s = trim(s.substr(prefix.consumed));
  if (s.empty()) throw std::invalid_argument("Pauli string has no operator part");

  const bool sparse = s.find_first_of("0123456789") != std::string_view::npos;
  uint32_t n = 0;
  std::vector<uint64_t> x, z;

  if (sparse) {
    if (!num_qubits) {
      throw std::invalid_argument("sparse Pauli form requires an explicit qubit count");
    }
    n = *num_qubits;
    x.assign(words_for(n), 0);
    z.assign(words_for(n), 0);
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z')) {
        throw std::invalid_argument("invalid sparse Pauli token '" + tok + "'");
      }
      size_t pos = 0;
      unsigned long q = 0;
      try {
        q = std::stoul(tok.substr(1), &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid qubit index in token '" + tok + "'");
      }
      if (pos + 1 != tok.size()) {
        throw std::invalid_argument("invalid sparse Pauli token '" + tok + "'");
      }
      if (q >= n) {
        throw std::invalid_argument("qubit index " + std::to_string(q) +
                                    " out of range for n=" + std::to_string(n));
      }
      const uint64_t bit = uint64_t{1} << (q & 63);
      if ((x[q >> 6] | z[q >> 6]) & bit) {
        throw std::invalid_argument("duplicate qubit index " + std::to_string(q));
      }
      if (tok[0] == 'X' || tok[0] == 'Y') x[q >> 6] |= bit;
      if (tok[0] == 'Z' || tok[0] == 'Y') z[q >> 6] |= bit;
    }
  } else {
    if (s.size() > 0xffffffffu) throw std::invalid_argument("Pauli string too long");
    n = static_cast<uint32_t>(s.size());
    if (num_qubits && *num_qubits != n) {
      throw std::invalid_argument("dense Pauli string length " + std::to_string(n) +
                                  " does not match n=" + std::to_string(*num_qubits));
    }
    x.assign(words_for(n), 0);
    z.assign(words_for(n), 0);
    for (uint32_t q = 0; q < n; ++q) {
      const uint64_t bit = uint64_t{1} << (q & 63);
      switch (s[q]) {
        case 'I':
          break;
        case 'X':
          x[q >> 6] |= bit;
          break;
        case 'Y':
          x[q >> 6] |= bit;
          z[q >> 6] |= bit;
          break;
        case 'Z':
          z[q >> 6] |= bit;
          break;
        default:
          throw std::invalid_argument(std::string("invalid character '") + s[q] +
                                      "' in Pauli string");
      }
    }
  }

  PauliString p = from_bits(n, std::move(x), std::move(z), 0);
  p.phase_exp_ = (prefix.phase_exp + p.canonical_phase_exp()) & 3;
  return p;
}

PauliString parse_pauli(std::string_view text, std::optional<uint32_t> num_qubits) {
  return PauliString::parse(text, num_qubits);
}

std::string format_pauli(const PauliString& a) { return a.str(); }

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.str();
}

}  // namespace spd
