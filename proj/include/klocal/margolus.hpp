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
#include <numeric>
#include <string>

#include "klocal/dense.hpp"

namespace klocal {

struct RationalIndex {
  std::int64_t num = 1;
  std::int64_t den = 1;

  RationalIndex() = default;
  RationalIndex(std::int64_t n, std::int64_t d);

  RationalIndex inverse() const { return {den, num}; }
  RationalIndex operator*(const RationalIndex& o) const {
    return {num * o.num, den * o.den};
  }
  bool operator==(const RationalIndex&) const = default;
  std::string str() const;
};

/// Two-layer normal form of a translationally invariant unit-range 1D QCA:
/// site dimension d, internal leg dimensions l and r with l*r = d*d,
/// u: C^d (x) C^d -> C^l (x) C^r and v: C^r (x) C^l -> C^d (x) C^d, both
/// unitary. One period of the cell structure covers two sites.
struct MargolusQCA {
  int d = 2;
  int l = 2;
  int r = 2;
  Matrix u;  // (l*r) x (d*d)
  Matrix v;  // (d*d) x (r*l)

  void validate(double tol = 1e-10) const;
};

/// d = 2 right-shift: l = 1, r = 4, u and v the identity rewirings.
MargolusQCA shift_qca();

/// l = r = d with identity gates; realizes the identity operator.
MargolusQCA identity_qca(int d);

/// Any two gates on pairs of d-dimensional sites, alternately placed
/// (gate_u on the odd-even pairs, gate_v on the even-odd pairs), as a
/// normal-form QCA with l = r = d.
MargolusQCA from_pair_gates(const Matrix& gate_u, const Matrix& gate_v, int d);

/// Seed-deterministic QCA from two random pair gates (l = r = d).
MargolusQCA random_qca(int d, std::uint64_t seed);

/// The CZ-chain entangler over two-site cells (d = 4).
MargolusQCA blocked_cluster_qca();

/// Diagonal shift on a width-W periodic strip of qubits, compactified to a
/// 1D chain of 2^W-dimensional supersites: a horizontal shift combined with
/// a one-step rotation along the compact direction. `diagonal = false`
/// gives the straight horizontal shift.
MargolusQCA compactified_shift_2d(int width, bool diagonal = true);

/// The representation with left and right exchanged (realizes the spatially
/// reversed automaton); swaps the roles of l and r.
MargolusQCA reverse_representation(const MargolusQCA& q);

/// w = v-bar u, a proper unitary on C^d (x) C^d. For the shift this is the
/// factor exchange; for an l = r = d pair-gate QCA it is the composite
/// (exchange . v . exchange) . u.
Matrix build_w(const MargolusQCA& q);
Matrix build_w_bar(const MargolusQCA& q);

/// Spatial reversals of the individual legs.
Matrix u_bar(const MargolusQCA& q);  // d*d -> r*l
Matrix v_bar(const MargolusQCA& q);  // l*r -> d*d

/// r/d in lowest terms.
RationalIndex gnvw_index(const MargolusQCA& q);

/// The two-layer circuit of q on a periodic chain of m sites (m even):
/// first all u on pairs (1,2),(3,4),...,(m-1,0), then all v on pairs
/// (0,1),(2,3),... (0-based positions).
CircuitPlan plan_margolus_ring(const MargolusQCA& q, int m);

}  // namespace klocal
