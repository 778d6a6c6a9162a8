// Copyright 2026 The klocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "klocal/pauli.hpp"

#include <bit>

namespace klocal {

PauliString::PauliString(std::uint32_t n_qubits)
    : n(n_qubits), x((n_qubits + 63) / 64, 0), z((n_qubits + 63) / 64, 0) {}

PauliString PauliString::from_text(std::uint32_t n, const std::string& paulis,
                                   int sign) {
  if (paulis.size() != n) throw std::invalid_argument("pauli text length");
  PauliString p(n);
  for (std::uint32_t q = 0; q < n; ++q) {
    switch (paulis[q]) {
      case 'I': case '_': break;
      case 'X': p.set_x(q, true); break;
      case 'Z': p.set_z(q, true); break;
      case 'Y': p.set_x(q, true); p.set_z(q, true); break;
      default: throw std::invalid_argument("bad pauli char");
    }
  }
  if (sign < 0) p.phase = (p.phase + 2) % 4;
  return p;
}

void PauliString::set_x(std::uint32_t q, bool v) {
  if (v) x[q >> 6] |= 1ull << (q & 63); else x[q >> 6] &= ~(1ull << (q & 63));
}

void PauliString::set_z(std::uint32_t q, bool v) {
  if (v) z[q >> 6] |= 1ull << (q & 63); else z[q >> 6] &= ~(1ull << (q & 63));
}

bool PauliString::is_identity_support() const {
  for (std::size_t w = 0; w < words(); ++w) {
    if (x[w] | z[w]) return false;
  }
  return true;
}

int PauliString::sign() const {
  if (!is_hermitian()) throw std::logic_error("sign of non-hermitian pauli");
  return phase == 0 ? +1 : -1;
}

bool PauliString::commutes(const PauliString& other) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words(); ++w) {
    acc ^= (x[w] & other.z[w]) ^ (z[w] & other.x[w]);
  }
  return (std::popcount(acc) & 1) == 0;
}

void PauliString::mul(const PauliString& other) {
  // Per qubit, multiplying (Z^z1 X^x1)(Z^z2 X^x2) in normal order costs a
  // factor i^{g} with g in {0, +1, -1}; the cases are tabulated below.
  int plus = 0, minus = 0;
  for (std::size_t w = 0; w < words(); ++w) {
    std::uint64_t x1 = x[w], z1 = z[w], x2 = other.x[w], z2 = other.z[w];
    std::uint64_t p1 = (x1 & ~z1 & x2 & z2)    // X*Y -> iZ
                     | (~x1 & z1 & x2 & ~z2)   // Z*X -> iY
                     | (x1 & z1 & ~x2 & z2);   // Y*Z -> iX
    std::uint64_t m1 = (x1 & ~z1 & ~x2 & z2)   // X*Z -> -iY
                     | (~x1 & z1 & x2 & z2)    // Z*Y -> -iX
                     | (x1 & z1 & x2 & ~z2);   // Y*X -> -iZ
    plus += std::popcount(p1);
    minus += std::popcount(m1);
    x[w] ^= x2;
    z[w] ^= z2;
  }
  int total = (static_cast<int>(phase) + other.phase + plus - minus) % 4;
  phase = static_cast<std::uint8_t>((total + 4) % 4);
}

std::string PauliString::str() const {
  static const char* signs[] = {"+", "+i", "-", "-i"};
  std::string s = signs[phase];
  for (std::uint32_t q = 0; q < n; ++q) {
    bool xx = get_x(q), zz = get_z(q);
    s += xx ? (zz ? 'Y' : 'X') : (zz ? 'Z' : 'I');
  }
  return s;
}

}  // namespace klocal
