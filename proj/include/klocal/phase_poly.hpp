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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klocal {

using Qubit = std::uint32_t;

/// A multi-controlled-Z gate written as its support set. Size 0 is the
/// scalar -1, size 1 is Z, size 2 is CZ, size 3 is CCZ, and so on.
/// Indices are kept sorted and distinct.
struct Hyperedge {
  std::vector<Qubit> qubits;

  Hyperedge() = default;
  Hyperedge(std::initializer_list<Qubit> qs);
  explicit Hyperedge(std::vector<Qubit> qs);

  std::size_t arity() const { return qubits.size(); }
  bool contains(Qubit q) const;
  Hyperedge without(Qubit q) const;

  auto operator<=>(const Hyperedge&) const = default;
};

/// An X-type symmetry generator: the product of X over `support`.
struct SymmetrySpec {
  std::vector<Qubit> support;  // sorted, distinct
  std::string label;

  SymmetrySpec() = default;
  SymmetrySpec(std::vector<Qubit> sup, std::string lbl);
};

/// A circuit of mutually commuting phase gates in parity representation:
/// an edge is present iff the gate occurs an odd number of times. The
/// empty edge (a global -1) is folded into `sign`.
///
/// Applied to |+>^n this is exactly a (signed) hypergraph state, so the
/// same type doubles as a state and as a diagonal operator.
class PhaseGateSet {
 public:
  PhaseGateSet() = default;
  explicit PhaseGateSet(Qubit n_qubits) : n_(n_qubits) {}

  Qubit n_qubits() const { return n_; }
  int sign() const { return sign_; }
  const std::set<Hyperedge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool has(const Hyperedge& e) const { return edges_.count(e) != 0; }

  /// Flips membership of `e`; a size-0 edge flips the sign instead.
  void toggle(const Hyperedge& e);

  /// Support of the whole gate set (sorted union of member edges).
  std::vector<Qubit> support() const;

  bool is_trivial() const { return edges_.empty() && sign_ == 1; }

  bool operator==(const PhaseGateSet& other) const = default;

  /// Stable textual form, e.g. "-{01}{2}" on request; mostly for tests.
  std::string str() const;

 private:
  Qubit n_ = 0;
  std::set<Hyperedge> edges_;
  int sign_ = 1;

  void check_edge(const Hyperedge& e) const;
};

PhaseGateSet toggle(PhaseGateSet state, const Hyperedge& e);

/// Circuit concatenation: symmetric difference of edge sets, signs multiply.
PhaseGateSet compose(const PhaseGateSet& a, const PhaseGateSet& b);

/// X_sym . op . X_sym. Conjugating C^{m-1}Z_S by X_a with a in S appends
/// C^{m-2}Z_{S\{a}}; equivalently, substitute x_a -> x_a xor 1 in the phase
/// polynomial. The result does not depend on the processing order of the
/// support.
PhaseGateSet conjugate_by_x(const PhaseGateSet& op, const SymmetrySpec& sym);

/// Exact operator equality of op and its conjugate (same edges, same sign).
bool commutes_with(const PhaseGateSet& op, const SymmetrySpec& sym);

/// op^-1 . X op X = compose(op, conjugate_by_x(op, sym)); trivial iff
/// commuting. Phase gates are self-inverse, hence op^-1 = op.
PhaseGateSet residual(const PhaseGateSet& op, const SymmetrySpec& sym);

bool is_trivial(const PhaseGateSet& state);

/// JSON form {"n":..,"sign":..,"edges":[[..],..]} with edges sorted
/// lexicographically. Kept as a plain string to avoid a header dependency.
std::string to_json(const PhaseGateSet& s);

}  // namespace klocal
