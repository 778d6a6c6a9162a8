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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klocal {

/// Bit-packed n-qubit Pauli operator i^phase * prod_q P(x_q, z_q) with the
/// hermitian per-qubit basis P(0,0)=I, P(1,0)=X, P(0,1)=Z, P(1,1)=Y; the
/// phase exponent is tracked mod 4 and stays even for hermitian operators.
struct PauliString {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> x, z;
  std::uint8_t phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  explicit PauliString(std::uint32_t n_qubits);

  static PauliString from_text(std::uint32_t n, const std::string& paulis,
                               int sign = +1);

  std::size_t words() const { return x.size(); }
  bool get_x(std::uint32_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool get_z(std::uint32_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(std::uint32_t q, bool v);
  void set_z(std::uint32_t q, bool v);

  bool is_identity_support() const;
  bool is_hermitian() const { return phase % 2 == 0; }
  int sign() const;  // +1 / -1 for hermitian operators

  bool commutes(const PauliString& other) const;

  /// this := this * other, tracking the i-exponent exactly.
  void mul(const PauliString& other);

  bool operator==(const PauliString&) const = default;
  std::string str() const;
};

}  // namespace klocal
