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

#include <algorithm>

#include "klocal/constructions.hpp"

namespace klocal {

Triangle::Triangle(Qubit a, Qubit b, Qubit c) : sites{a, b, c} {
  std::sort(sites.begin(), sites.end());
  if (sites[0] == sites[1] || sites[1] == sites[2]) {
    throw std::invalid_argument("degenerate triangle");
  }
}

// Row colour offsets. Top rows step +1 per row; the bottom row folded onto
// top row t carries offset f(t)+1. With colours (x + f(y)) mod 3 every cell
// of the torus and every wall rectangle of the fold admits a rainbow
// triangulation, which a uniform (x - y) mod 3 colouring does not.
int FoldedSurface::row_shift(Qubit y) const {
  if (y < ly_ / 2) return static_cast<int>(y % 3);
  return static_cast<int>((ly_ - y) % 3);  // = f(ly-1-y) + 1 mod 3
}

Color FoldedSurface::color(Qubit x, Qubit y) const {
  return static_cast<Color>((x % lx_ + row_shift(y % ly_)) % 3);
}

Qubit FoldedSurface::folded_row(Qubit s) const {
  Qubit y = site_y(s);
  return y < ly_ / 2 ? y : ly_ - 1 - y;
}

// Cell (x,y) spans rows y, y+1. The diagonal follows the colour step:
// step +1 uses the main diagonal, step +2 the anti-diagonal, keeping all
// triangles rainbow.
std::array<Triangle, 2> FoldedSurface::cell_triangles(Qubit x, Qubit y) const {
  Qubit a = site(x, y), b = site(x + 1, y), c = site(x, y + 1), d = site(x + 1, y + 1);
  int step = (row_shift(y + 1) - row_shift(y) + 3) % 3;
  if (step == 1) return {Triangle(a, b, d), Triangle(a, c, d)};
  if (step == 2) return {Triangle(a, b, c), Triangle(b, c, d)};
  throw std::logic_error("colour step vanished between adjacent rows");
}

// Wall at folded position t joining top row t with bottom row ly-1-t.
// For t = 0 and t = ly/2-1 these are the real fold-line cells; interior
// walls are virtual and shared by the two adjacent prisms.
std::array<Triangle, 2> FoldedSurface::v_wall(Qubit x, Qubit t) const {
  Qubit bl = site(x, ly_ - 1 - t), br = site(x + 1, ly_ - 1 - t);
  Qubit tl = site(x, t), tr = site(x + 1, t);
  return {Triangle(bl, br, tl), Triangle(br, tl, tr)};
}

// Wall between prisms (x-1,u) and (x,u); always interior, always cancels.
std::array<Triangle, 2> FoldedSurface::h_wall(Qubit x, Qubit u) const {
  Qubit t1 = site(x, u), t2 = site(x, u + 1);
  Qubit b1 = site(x, ly_ - 2 - u), b2 = site(x, ly_ - 1 - u);
  return {Triangle(t1, t2, b1), Triangle(t1, b1, b2)};
}

FoldedSurface::FoldedSurface(Qubit lx, Qubit ly) : lx_(lx), ly_(ly) {
  if (lx < 3 || lx % 3 != 0 || ly % 3 != 0 || ly % 2 != 0 || ly < 6) {
    throw std::invalid_argument(
        "FoldedSurface: need lx % 3 == 0, ly % 6 == 0, lx >= 3, ly >= 6");
  }
  for (Qubit y = 0; y < ly_; ++y) {
    for (Qubit x = 0; x < lx_; ++x) {
      auto ts = cell_triangles(x, y);
      triangles_.push_back(ts[0]);
      triangles_.push_back(ts[1]);
    }
  }

  // Fold-line cells must match the wall triangulation exactly so the box
  // decomposition telescopes to the surface.
  for (Qubit x = 0; x < lx_; ++x) {
    for (Qubit t : {Qubit(0), Qubit(ly_ / 2 - 1)}) {
      auto wall = v_wall(x, t);
      Qubit cell_row = (t == 0) ? ly_ - 1 : ly_ / 2 - 1;
      auto cell = cell_triangles(x, cell_row);
      if (!((wall[0] == cell[0] && wall[1] == cell[1]) ||
            (wall[0] == cell[1] && wall[1] == cell[0]))) {
        throw std::logic_error("fold-line wall does not match surface cell");
      }
    }
  }

  for (Qubit u = 0; u + 1 < ly_ / 2; ++u) {
    for (Qubit x = 0; x < lx_; ++x) {
      std::vector<Triangle> faces;
      faces.reserve(12);
      auto push2 = [&faces](const std::array<Triangle, 2>& ts) {
        faces.push_back(ts[0]);
        faces.push_back(ts[1]);
      };
      push2(cell_triangles(x, u));             // top
      push2(cell_triangles(x, ly_ - 2 - u));   // bottom (mirror cell)
      push2(v_wall(x, u));                     // front
      push2(v_wall(x, u + 1));                 // back
      push2(h_wall(x, u));                     // left
      push2(h_wall(x + 1, u));                 // right
      prisms_.push_back(std::move(faces));
    }
  }
}

std::array<SymmetrySpec, 3> FoldedSurface::color_symmetries() const {
  std::array<std::vector<Qubit>, 3> sup;
  for (Qubit s = 0; s < n_sites(); ++s) {
    sup[static_cast<int>(color_of(s))].push_back(s);
  }
  return {SymmetrySpec(sup[0], "X_R"), SymmetrySpec(sup[1], "X_G"),
          SymmetrySpec(sup[2], "X_B")};
}

PhaseGateSet hypergraph_entangler(const FoldedSurface& surface) {
  PhaseGateSet s(surface.n_sites());
  for (const auto& t : surface.triangles()) {
    s.toggle(Hyperedge{t.sites[0], t.sites[1], t.sites[2]});
  }
  return s;
}

std::vector<PhaseGateSet> w_gates_2d(const FoldedSurface& surface) {
  std::vector<PhaseGateSet> gates;
  gates.reserve(surface.prisms().size());
  for (const auto& prism : surface.prisms()) {
    if (prism.size() != 12) throw std::logic_error("prism must own 12 faces");
    PhaseGateSet w(surface.n_sites());
    for (const auto& t : prism) {
      w.toggle(Hyperedge{t.sites[0], t.sites[1], t.sites[2]});
    }
    gates.push_back(std::move(w));
  }
  return gates;
}

OneToAll2d one_to_all_2d(Qubit lx, Qubit ly) {
  if (lx % 3 != 0 || ly % 3 != 0 || lx < 3 || ly < 3) {
    throw std::invalid_argument("one_to_all_2d: need lx, ly divisible by 3");
  }
  OneToAll2d out;
  out.lx = lx;
  out.ly = ly;
  out.n_qubits = lx * ly + 1;

  // Unfolded torus, ancilla is qubit 0, site (x,y) is qubit 1 + y*lx + x.
  auto q = [&](Qubit x, Qubit y) { return 1 + (y % ly) * lx + (x % lx); };
  auto color = [&](Qubit x, Qubit y) { return ((x % lx) + 2 * (y % ly)) % 3; };

  // Anti-diagonal triangulation: each cell splits into {a,b,c} and {b,c,d}.
  out.entangler = PhaseGateSet(out.n_qubits);
  for (Qubit y = 0; y < ly; ++y) {
    for (Qubit x = 0; x < lx; ++x) {
      out.entangler.toggle(Hyperedge{q(x, y), q(x + 1, y), q(x, y + 1)});
      out.entangler.toggle(Hyperedge{q(x + 1, y), q(x, y + 1), q(x + 1, y + 1)});
    }
  }

  // Hexagon around (x,y) in cyclic order; consecutive neighbours span the
  // six faces containing the centre.
  const std::array<std::array<int, 2>, 6> hex = {
      {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

  std::array<std::vector<Qubit>, 3> sup;
  sup[1].push_back(0);  // ancilla transforms with the green class
  for (Qubit y = 0; y < ly; ++y) {
    for (Qubit x = 0; x < lx; ++x) {
      sup[color(x, y)].push_back(q(x, y));
    }
  }
  for (auto& v : sup) std::sort(v.begin(), v.end());
  out.symmetries = {SymmetrySpec(sup[0], "X_R"), SymmetrySpec(sup[1], "X_G"),
                    SymmetrySpec(sup[2], "X_B")};

  for (Qubit y = 0; y < ly; ++y) {
    for (Qubit x = 0; x < lx; ++x) {
      if (color(x, y) != 1) continue;  // one gate per green site
      PhaseGateSet v(out.n_qubits);
      for (int j = 0; j < 6; ++j) {
        Qubit ax = x + lx + hex[j][0], ay = y + ly + hex[j][1];
        Qubit bx = x + lx + hex[(j + 1) % 6][0], by = y + ly + hex[(j + 1) % 6][1];
        v.toggle(Hyperedge{q(x, y), q(ax, ay), q(bx, by)});
        v.toggle(Hyperedge{0, q(ax, ay), q(bx, by)});
      }
      out.gates.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace klocal
