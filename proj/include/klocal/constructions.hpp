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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klocal/phase_poly.hpp"

namespace klocal {

// ---------------------------------------------------------------------------
// 1D ring cluster model. Textbook site labels are often 1-based; everything
// here is 0-based, so site i of such formulas is qubit i-1.
// ---------------------------------------------------------------------------

/// CZ on every ring edge {i, i+1 mod N}. N >= 3.
PhaseGateSet cluster_entangler(Qubit n);

/// The two parity symmetries of the even-N ring, labelled by the 0-based
/// parity of their support.
std::array<SymmetrySpec, 2> parity_symmetries(Qubit n);

/// The 4-site ring gates W_i, i = 1..N/2-1: each is the cluster entangler of
/// the 4-cycle (i-1, i, N-1-i, N-i). N even, N >= 6.
std::vector<PhaseGateSet> w_gates_1d(Qubit n);

// ---------------------------------------------------------------------------
// Folded triangular-lattice torus for the CCZ hypergraph model.
// ---------------------------------------------------------------------------

struct Triangle {
  std::array<Qubit, 3> sites;  // sorted
  Triangle() = default;
  Triangle(Qubit a, Qubit b, Qubit c);
  auto operator<=>(const Triangle&) const = default;
};

enum class Color : std::uint8_t { R = 0, G = 1, B = 2 };

/// Triangulated torus of Lx x Ly sites (both divisible by 3, Ly even),
/// folded in half along y between rows. Sites keep their torus identity;
/// the fold supplies a layer tag and a folded coordinate, and the prism
/// decomposition: one box per folded cell, each owning 12 triangular faces
/// (2 top, 2 bottom, 8 side). Side faces interior to the slab are virtual
/// and cancel between neighbouring boxes; the side faces on the two fold
/// lines are real surface triangles.
class FoldedSurface {
 public:
  FoldedSurface(Qubit lx, Qubit ly);

  Qubit lx() const { return lx_; }
  Qubit ly() const { return ly_; }
  Qubit n_sites() const { return lx_ * ly_; }

  Qubit site(Qubit x, Qubit y) const { return (y % ly_) * lx_ + (x % lx_); }
  Qubit site_x(Qubit s) const { return s % lx_; }
  Qubit site_y(Qubit s) const { return s / lx_; }
  bool on_top_layer(Qubit s) const { return site_y(s) < ly_ / 2; }
  Qubit folded_row(Qubit s) const;

  Color color(Qubit x, Qubit y) const;
  Color color_of(Qubit s) const { return color(site_x(s), site_y(s)); }

  /// All 2*Lx*Ly triangles of the closed surface.
  const std::vector<Triangle>& triangles() const { return triangles_; }

  /// Prisms indexed by (x, u), u in [0, Ly/2-1); each has exactly 12 faces.
  const std::vector<std::vector<Triangle>>& prisms() const { return prisms_; }

  std::array<SymmetrySpec, 3> color_symmetries() const;

 private:
  Qubit lx_, ly_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Triangle>> prisms_;

  int row_shift(Qubit y) const;       // per-row color offset
  std::array<Triangle, 2> cell_triangles(Qubit x, Qubit y) const;
  std::array<Triangle, 2> v_wall(Qubit x, Qubit t) const;
  std::array<Triangle, 2> h_wall(Qubit x, Qubit u) const;
};

/// CCZ on every triangle of the surface.
PhaseGateSet hypergraph_entangler(const FoldedSurface& surface);

/// One gate per prism: the product of CCZ over its 12 faces (k = 8 sites).
std::vector<PhaseGateSet> w_gates_2d(const FoldedSurface& surface);

// ---------------------------------------------------------------------------
// Subsystem-symmetric 2D cluster model on a torus with diagonal line
// symmetries, folded by the half-period translation (x,y) -> (x+L/2, y+L/2),
// the unique free involution of the torus that maps every line symmetry to
// itself.
// ---------------------------------------------------------------------------

class SsptGeometry {
 public:
  explicit SsptGeometry(Qubit l);

  Qubit l() const { return l_; }
  Qubit n_sites() const { return l_ * l_; }
  Qubit site(Qubit x, Qubit y) const { return (y % l_) * l_ + (x % l_); }
  Qubit partner(Qubit s) const;  // image under the fold translation
  bool on_top_layer(Qubit s) const;

  /// All 2L rigid diagonal line symmetries, both orientations.
  const std::vector<SymmetrySpec>& line_symmetries() const { return lines_; }

  /// CZ on every nearest-neighbour edge of the square lattice.
  PhaseGateSet entangler() const;

 private:
  Qubit l_;
  std::vector<SymmetrySpec> lines_;
};

/// Gates W_c: each is the cluster entangler of a small closed cell (at most
/// 8 sites), each commutes exactly with every line symmetry, and the whole
/// family composes to the torus entangler. Found by an exact GF(2) solve
/// over the vocabulary of line-symmetric cells.
std::vector<PhaseGateSet> sspt_gates(const SsptGeometry& geom);

// ---------------------------------------------------------------------------
// One-to-all finite-time protocols: a central ancilla (qubit 0) couples to
// every gate and is left disentangled by the composite.
// ---------------------------------------------------------------------------

/// N ring qubits 1..N plus ancilla 0; gates V_i, i = 1..N/2, each a 4-cycle
/// through the ancilla. N even.
std::vector<PhaseGateSet> one_to_all_1d(Qubit n);

/// Unfolded closed 3-coloured triangular torus of Lx x Ly sites (both
/// divisible by 3) plus ancilla.
struct OneToAll2d {
  Qubit lx, ly;
  Qubit n_qubits;                     // lx*ly + 1, ancilla = 0
  std::vector<PhaseGateSet> gates;    // one per green site
  PhaseGateSet entangler;             // CCZ on every torus face, on n_qubits
  std::array<SymmetrySpec, 3> symmetries;  // ancilla counted green
};
OneToAll2d one_to_all_2d(Qubit lx, Qubit ly);

// ---------------------------------------------------------------------------
// Helpers shared by the gate families.
// ---------------------------------------------------------------------------

/// Greedy partition of gates into layers with pairwise disjoint supports,
/// in deterministic input order. Returns the layer index per gate.
std::vector<int> layer_assignment(const std::vector<PhaseGateSet>& gates);

int layer_count(const std::vector<int>& assignment);

/// Smallest D with k^D >= code_distance, i.e. ceil(log_k(d)).
int depth_lower_bound(std::uint64_t k, std::uint64_t code_distance);

}  // namespace klocal
