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
#include <map>
#include <optional>

#include "klocal/constructions.hpp"

// A diagonal gate built from CZs commutes with every diagonal line symmetry
// exactly when, for each of its qubits, the gate-neighbourhood pairs up on
// both diagonal coordinates y-x and y+x modulo L. The admissible
// neighbourhood blocks are therefore
//   - a pair exchanged by the half-period translation tau = (L/2, L/2), or
//   - the four corners of a rectangle in diagonal coordinates (a "diamond").
// Every line-symmetric cell on at most 8 sites is a complete bipartite graph
// between two such blocks: K22 (4 sites), K24 (6) or K44 (8). No reflection
// of the torus fixes all 2L lines, but tau does, so tau plays the role of
// the fold. The family below is assembled from these cells by an exact
// GF(2) solve against the target edge set.

namespace klocal {

SsptGeometry::SsptGeometry(Qubit l) : l_(l) {
  if (l < 4 || l % 2 != 0) {
    throw std::invalid_argument("SsptGeometry: need even l >= 4");
  }
  for (Qubit c = 0; c < l_; ++c) {
    std::vector<Qubit> plus, minus;
    for (Qubit x = 0; x < l_; ++x) {
      plus.push_back(site(x, c + x));
      minus.push_back(site(x, c + l_ - x));
    }
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    lines_.emplace_back(plus, "line+" + std::to_string(c));
    lines_.emplace_back(minus, "line-" + std::to_string(c));
  }
}

Qubit SsptGeometry::partner(Qubit s) const {
  Qubit x = s % l_, y = s / l_;
  return site(x + l_ / 2, y + l_ / 2);
}

bool SsptGeometry::on_top_layer(Qubit s) const { return s < partner(s); }

PhaseGateSet SsptGeometry::entangler() const {
  PhaseGateSet e(n_sites());
  for (Qubit y = 0; y < l_; ++y) {
    for (Qubit x = 0; x < l_; ++x) {
      e.toggle(Hyperedge{site(x, y), site(x + 1, y)});
      e.toggle(Hyperedge{site(x, y), site(x, y + 1)});
    }
  }
  return e;
}

namespace {

using EdgeKey = std::uint64_t;

struct SsptSolver {
  const SsptGeometry& g;
  Qubit l, n;

  explicit SsptSolver(const SsptGeometry& geom)
      : g(geom), l(geom.l()), n(geom.n_sites()) {}

  Qubit wrap_site(int x, int y) const {
    int m = static_cast<int>(l);
    return g.site(static_cast<Qubit>(((x % m) + m) % m),
                  static_cast<Qubit>(((y % m) + m) % m));
  }
  int sx(Qubit s) const { return static_cast<int>(s % l); }
  int sy(Qubit s) const { return static_cast<int>(s / l); }
  Qubit shift(Qubit s, int dx, int dy) const { return wrap_site(sx(s) + dx, sy(s) + dy); }
  Qubit tau(Qubit s) const { return g.partner(s); }

  EdgeKey key(Qubit a, Qubit b) const {
    if (a > b) std::swap(a, b);
    return static_cast<EdgeKey>(a) * n + b;
  }

  // Diamond with half-diagonals r (in y-x) and s (in y+x) about centre c;
  // r + s must be even. Returns nothing if the corners collide on the torus.
  std::optional<std::array<Qubit, 4>> diamond(Qubit c, int r, int s) const {
    std::array<Qubit, 4> out{};
    int idx = 0;
    for (int ep : {+1, -1}) {
      for (int em : {+1, -1}) {
        int dx = (em * s - ep * r) / 2;
        int dy = (em * s + ep * r) / 2;
        out[idx++] = shift(c, dx, dy);
      }
    }
    std::array<Qubit, 4> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return std::nullopt;
    }
    return out;
  }

  std::vector<std::vector<EdgeKey>> atoms;
  std::map<std::vector<EdgeKey>, int> seen;

  void add_atom(const std::vector<std::pair<Qubit, Qubit>>& pairs) {
    std::set<EdgeKey> parity;
    for (auto [a, b] : pairs) {
      if (a == b) return;
      EdgeKey k = key(a, b);
      auto it = parity.find(k);
      if (it == parity.end()) parity.insert(k); else parity.erase(it);
    }
    if (parity.empty()) return;
    std::vector<EdgeKey> v(parity.begin(), parity.end());
    if (seen.emplace(v, static_cast<int>(atoms.size())).second) {
      atoms.push_back(std::move(v));
    }
  }

  void add_k22(Qubit u, Qubit v) {
    if (v == u || v == tau(u)) return;
    std::vector<std::pair<Qubit, Qubit>> e;
    for (Qubit a : {u, tau(u)}) {
      for (Qubit b : {v, tau(v)}) e.emplace_back(a, b);
    }
    add_atom(e);
  }

  void add_k24(Qubit u, Qubit c, int r, int s) {
    auto d = diamond(c, r, s);
    if (!d) return;
    for (Qubit b : *d) {
      if (b == u || b == tau(u)) return;
    }
    std::vector<std::pair<Qubit, Qubit>> e;
    for (Qubit a : {u, tau(u)}) {
      for (Qubit b : *d) e.emplace_back(a, b);
    }
    add_atom(e);
  }

  void add_k44(Qubit a, Qubit b, int r1, int s1, int r2, int s2) {
    auto d1 = diamond(a, r1, s1);
    auto d2 = diamond(b, r2, s2);
    if (!d1 || !d2) return;
    for (Qubit x : *d1) {
      for (Qubit y : *d2) {
        if (x == y) return;
      }
    }
    std::vector<std::pair<Qubit, Qubit>> e;
    for (Qubit x : *d1) {
      for (Qubit y : *d2) e.emplace_back(x, y);
    }
    add_atom(e);
  }

  void build_vocabulary() {
    const int h = static_cast<int>(l) / 2;
    const std::vector<std::pair<int, int>> small = {
        {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}, {0, 2},
        {2, 1}, {1, 2}, {2, -1}, {1, -2}, {2, 2}, {2, -2}};
    for (Qubit u = 0; u < n; ++u) {
      for (auto [dx, dy] : small) add_k22(u, shift(u, dx, dy));
    }
    const std::vector<std::pair<int, int>> near = {
        {0, 0}, {1, 0}, {-1, 0}, {0, 1},  {0, -1}, {1, 1},
        {-1, -1}, {1, -1}, {-1, 1}, {2, 0}, {0, 2}, {-2, 0}, {0, -2}};
    for (Qubit u = 0; u < n; ++u) {
      for (auto [dx, dy] : near) {
        add_k24(u, shift(u, dx, dy), 1, 1);
        add_k24(u, shift(u, dx + h, dy + h), 1, 1);
        add_k24(u, shift(u, dx, dy), 1, 3);
        add_k24(u, shift(u, dx, dy), 3, 1);
      }
    }
    const std::vector<std::pair<int, int>> pairoff = {
        {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}, {0, 2}, {2, 2}, {2, -2}};
    for (Qubit u = 0; u < n; ++u) {
      for (auto [dx, dy] : pairoff) {
        add_k44(u, shift(u, dx, dy), 1, 1, 1, 1);
        add_k44(u, shift(u, dx + h, dy + h), 1, 1, 1, 1);
      }
    }
  }

  std::vector<PhaseGateSet> solve() {
    build_vocabulary();
    const int cols = static_cast<int>(atoms.size());

    std::map<EdgeKey, int> row_of;
    auto row_index = [&](EdgeKey k) {
      auto it = row_of.find(k);
      if (it != row_of.end()) return it->second;
      int idx = static_cast<int>(row_of.size());
      row_of.emplace(k, idx);
      return idx;
    };

    PhaseGateSet target = g.entangler();
    std::vector<EdgeKey> target_keys;
    for (const auto& e : target.edges()) {
      target_keys.push_back(key(e.qubits[0], e.qubits[1]));
    }
    for (EdgeKey k : target_keys) row_index(k);
    for (const auto& a : atoms) {
      for (EdgeKey k : a) row_index(k);
    }

    const int rows = static_cast<int>(row_of.size());
    const int words = (cols + 1 + 63) / 64;  // last bit is the RHS
    std::vector<std::vector<std::uint64_t>> mat(
        rows, std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](int r, int c) { mat[r][c >> 6] ^= 1ull << (c & 63); };
    auto get_bit = [&](int r, int c) {
      return (mat[r][c >> 6] >> (c & 63)) & 1ull;
    };

    for (int j = 0; j < cols; ++j) {
      for (EdgeKey k : atoms[j]) set_bit(row_of[k], j);
    }
    for (EdgeKey k : target_keys) set_bit(row_of[k], cols);

    std::vector<int> pivot_col;
    int top = 0;
    for (int c = 0; c < cols && top < rows; ++c) {
      int pr = -1;
      for (int r = top; r < rows; ++r) {
        if (get_bit(r, c)) { pr = r; break; }
      }
      if (pr < 0) continue;
      std::swap(mat[top], mat[pr]);
      for (int r = 0; r < rows; ++r) {
        if (r != top && get_bit(r, c)) {
          for (int w = 0; w < words; ++w) mat[r][w] ^= mat[top][w];
        }
      }
      pivot_col.push_back(c);
      ++top;
    }
    for (int r = top; r < rows; ++r) {
      if (get_bit(r, cols)) {
        throw std::runtime_error(
            "sspt_gates: no line-symmetric cell decomposition found for L=" +
            std::to_string(l));
      }
    }

    std::vector<PhaseGateSet> gates;
    for (int p = 0; p < top; ++p) {
      if (!get_bit(p, cols)) continue;
      PhaseGateSet w(n);
      for (EdgeKey k : atoms[pivot_col[p]]) {
        w.toggle(Hyperedge{static_cast<Qubit>(k / n), static_cast<Qubit>(k % n)});
      }
      gates.push_back(std::move(w));
    }
    return gates;
  }
};

}  // namespace

std::vector<PhaseGateSet> sspt_gates(const SsptGeometry& geom) {
  SsptSolver solver(geom);
  return solver.solve();
}

}  // namespace klocal
