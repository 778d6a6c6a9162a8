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

#include <functional>

#include "klocal/pauli.hpp"

namespace klocal {

/// Images of the two-qubit generators under a Clifford gate, with signs.
/// 11520 distinct gates modulo global phase. `word` is a build recipe over
/// the generator set {H1, H2, S1, S2, CX12} used by the dense cross-check.
struct CliffordGate2 {
  PauliString img_x1{2}, img_z1{2}, img_x2{2}, img_z2{2};
  std::string word;

  bool operator==(const CliffordGate2& o) const {
    return img_x1 == o.img_x1 && img_z1 == o.img_z1 && img_x2 == o.img_x2 &&
           img_z2 == o.img_z2;
  }
};

/// Stabilizer/destabilizer tableau for n qubits, rows bit-packed.
/// Row i < n are destabilizers, rows n..2n-1 stabilizers; initial state is
/// |+>^n (stabilizers X_i).
class Tableau {
 public:
  explicit Tableau(std::uint32_t n);

  std::uint32_t n_qubits() const { return n_; }
  const PauliString& stabilizer(std::uint32_t i) const { return rows_[n_ + i]; }
  const PauliString& destabilizer(std::uint32_t i) const { return rows_[i]; }

  /// Applies a two-qubit Clifford to qubits (a, b) (gate factor 1 on a).
  void apply_clifford2(const CliffordGate2& g, std::uint32_t a, std::uint32_t b);

  /// Measures hermitian Pauli p. If the outcome is random, `coin` supplies
  /// the bit (true -> -1). Returns +-1.
  int measure_pauli(const PauliString& p, const std::function<bool()>& coin);

  /// +-1 if p (with its sign) is in the stabilizer group up to sign, 0 if it
  /// anticommutes with some stabilizer.
  int expectation_pauli(const PauliString& p) const;

  /// Symplectic sanity check (pairings of stabilizers/destabilizers).
  bool frame_valid() const;

 private:
  std::uint32_t n_;
  std::vector<PauliString> rows_;
};

/// All 11520 two-qubit Cliffords modulo phase, deterministic order.
const std::vector<CliffordGate2>& enumerate_clifford2();

}  // namespace klocal
