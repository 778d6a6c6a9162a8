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

#include "klocal/tableau.hpp"

#include <algorithm>
#include <map>

namespace klocal {

Tableau::Tableau(std::uint32_t n) : n_(n) {
  rows_.reserve(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {  // destabilizers Z_i for |+>^n
    PauliString p(n);
    p.set_z(i, true);
    rows_.push_back(std::move(p));
  }
  for (std::uint32_t i = 0; i < n; ++i) {  // stabilizers X_i
    PauliString p(n);
    p.set_x(i, true);
    rows_.push_back(std::move(p));
  }
}

void Tableau::apply_clifford2(const CliffordGate2& g, std::uint32_t a,
                              std::uint32_t b) {
  if (a == b || a >= n_ || b >= n_) throw std::invalid_argument("bad qubit pair");
  for (auto& row : rows_) {
    bool xa = row.get_x(a), za = row.get_z(a);
    bool xb = row.get_x(b), zb = row.get_z(b);
    if (!(xa || za || xb || zb)) continue;

    // The local pair is P(xa,za) (x) P(xb,zb) = i^{local} X1^xa X2^xb Z1^za
    // Z2^zb; conjugating term by term gives i^{local} times the image
    // product, whose own Y-factors are already in the packed basis.
    int local_i = (xa && za ? 1 : 0) + (xb && zb ? 1 : 0);
    PauliString acc(2);
    if (xa) acc.mul(g.img_x1);
    if (xb) acc.mul(g.img_x2);
    if (za) acc.mul(g.img_z1);
    if (zb) acc.mul(g.img_z2);

    row.set_x(a, acc.get_x(0));
    row.set_z(a, acc.get_z(0));
    row.set_x(b, acc.get_x(1));
    row.set_z(b, acc.get_z(1));
    int ph = (static_cast<int>(row.phase) + acc.phase + local_i) % 4;
    row.phase = static_cast<std::uint8_t>(ph);
  }
}

int Tableau::measure_pauli(const PauliString& p,
                           const std::function<bool()>& coin) {
  if (!p.is_hermitian()) throw std::invalid_argument("measure: non-hermitian");
  std::int64_t pivot = -1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!rows_[n_ + i].commutes(p)) { pivot = i; break; }
  }
  if (pivot < 0) return expectation_pauli(p);

  for (std::uint32_t r = 0; r < 2 * n_; ++r) {
    if (static_cast<std::int64_t>(r) == n_ + pivot) continue;
    if (!rows_[r].commutes(p)) rows_[r].mul(rows_[n_ + pivot]);
  }
  rows_[pivot] = rows_[n_ + pivot];
  int outcome = coin() ? -1 : +1;
  PauliString np = p;
  if (outcome < 0) np.phase = static_cast<std::uint8_t>((np.phase + 2) % 4);
  rows_[n_ + pivot] = np;
  return outcome;
}

int Tableau::expectation_pauli(const PauliString& p) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!rows_[n_ + i].commutes(p)) return 0;
  }
  // p is in the stabilizer group up to sign; reconstruct it from the rows
  // flagged by anticommuting destabilizers and compare phases.
  PauliString acc(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!rows_[i].commutes(p)) acc.mul(rows_[n_ + i]);
  }
  if (acc.x != p.x || acc.z != p.z) return 0;  // outside the group
  int dp = (static_cast<int>(p.phase) - acc.phase + 8) % 4;
  if (dp == 0) return +1;
  if (dp == 2) return -1;
  throw std::logic_error("non-real relative phase in expectation");
}

bool Tableau::frame_valid() const {
  for (std::uint32_t i = 0; i < 2 * n_; ++i) {
    if (rows_[i].phase % 2 != 0) return false;
    for (std::uint32_t j = i; j < 2 * n_; ++j) {
      bool anti = !rows_[i].commutes(rows_[j]);
      bool want = (j == i + n_) || (i == j + n_);
      if (anti != want) return false;
    }
  }
  return true;
}

namespace {

PauliString conj_by_gen(const PauliString& p, char gen) {
  // Single-step conjugation of a 2-qubit Pauli by a generator.
  bool x1 = p.get_x(0), z1 = p.get_z(0), x2 = p.get_x(1), z2 = p.get_z(1);
  int ph = p.phase;
  auto mk = [&](bool nx1, bool nz1, bool nx2, bool nz2, int dph) {
    PauliString q(2);
    q.set_x(0, nx1); q.set_z(0, nz1); q.set_x(1, nx2); q.set_z(1, nz2);
    q.phase = static_cast<std::uint8_t>((ph + dph + 8) % 4);
    return q;
  };
  switch (gen) {
    case 'h':  // H on qubit 1: X<->Z, Y -> -Y
      return mk(z1, x1, x2, z2, (x1 && z1) ? 2 : 0);
    case 'H':  // H on qubit 2
      return mk(x1, z1, z2, x2, (x2 && z2) ? 2 : 0);
    case 's':  // S on qubit 1: X -> Y, Y -> -X, Z -> Z
      return mk(x1, z1 ^ x1, x2, z2, (x1 && z1) ? 2 : 0);
    case 'S':  // S on qubit 2
      return mk(x1, z1, x2, z2 ^ x2, (x2 && z2) ? 2 : 0);
    case 'C': {  // CNOT control 1 target 2
      int dph = (x1 && z2 && (x2 == z1)) ? 2 : 0;
      return mk(x1, z1 ^ z2, x2 ^ x1, z2, dph);
    }
    default:
      throw std::logic_error("bad generator");
  }
}

}  // namespace

const std::vector<CliffordGate2>& enumerate_clifford2() {
  static const std::vector<CliffordGate2> table = [] {
    auto keyof = [](const CliffordGate2& g) {
      auto enc = [](const PauliString& p) {
        return (static_cast<std::uint32_t>(p.x[0] & 3) << 6) |
               (static_cast<std::uint32_t>(p.z[0] & 3) << 4) | p.phase;
      };
      return (static_cast<std::uint64_t>(enc(g.img_x1)) << 24) |
             (static_cast<std::uint64_t>(enc(g.img_z1)) << 16) |
             (static_cast<std::uint64_t>(enc(g.img_x2)) << 8) |
             static_cast<std::uint64_t>(enc(g.img_z2));
    };
    CliffordGate2 id;
    id.img_x1 = PauliString::from_text(2, "XI");
    id.img_z1 = PauliString::from_text(2, "ZI");
    id.img_x2 = PauliString::from_text(2, "IX");
    id.img_z2 = PauliString::from_text(2, "IZ");

    std::map<std::uint64_t, CliffordGate2> seen;
    seen.emplace(keyof(id), id);
    std::vector<CliffordGate2> frontier = {id};
    const std::string gens = "hHsSC";
    while (!frontier.empty()) {
      std::vector<CliffordGate2> next;
      for (const auto& g : frontier) {
        for (char c : gens) {
          CliffordGate2 h;
          h.img_x1 = conj_by_gen(g.img_x1, c);
          h.img_z1 = conj_by_gen(g.img_z1, c);
          h.img_x2 = conj_by_gen(g.img_x2, c);
          h.img_z2 = conj_by_gen(g.img_z2, c);
          h.word = g.word + c;
          if (seen.emplace(keyof(h), h).second) next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    std::vector<CliffordGate2> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
  }();
  return table;
}

}  // namespace klocal
