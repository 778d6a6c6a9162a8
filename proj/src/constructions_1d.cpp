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

PhaseGateSet cluster_entangler(Qubit n) {
  if (n < 3) throw std::invalid_argument("cluster_entangler: need n >= 3");
  PhaseGateSet s(n);
  for (Qubit i = 0; i < n; ++i) s.toggle(Hyperedge{i, (i + 1) % n});
  return s;
}

std::array<SymmetrySpec, 2> parity_symmetries(Qubit n) {
  if (n % 2 != 0) throw std::invalid_argument("parity_symmetries: need even n");
  std::vector<Qubit> even, odd;
  for (Qubit i = 0; i < n; ++i) (i % 2 == 0 ? even : odd).push_back(i);
  return {SymmetrySpec(even, "X_even"), SymmetrySpec(odd, "X_odd")};
}

std::vector<PhaseGateSet> w_gates_1d(Qubit n) {
  if (n % 2 != 0 || n < 6) {
    throw std::invalid_argument("w_gates_1d: need even n >= 6");
  }
  std::vector<PhaseGateSet> gates;
  gates.reserve(n / 2 - 1);
  for (Qubit i = 1; i <= n / 2 - 1; ++i) {
    PhaseGateSet w(n);
    w.toggle(Hyperedge{i - 1, i});
    w.toggle(Hyperedge{i, n - 1 - i});
    w.toggle(Hyperedge{n - 1 - i, n - i});
    w.toggle(Hyperedge{n - i, i - 1});
    gates.push_back(std::move(w));
  }
  return gates;
}

std::vector<PhaseGateSet> one_to_all_1d(Qubit n) {
  if (n % 2 != 0 || n < 4) {
    throw std::invalid_argument("one_to_all_1d: need even n >= 4");
  }
  auto ring = [n](Qubit j) { return (j - 1) % n + 1; };  // ring sites 1..n
  std::vector<PhaseGateSet> gates;
  gates.reserve(n / 2);
  for (Qubit i = 1; i <= n / 2; ++i) {
    PhaseGateSet v(n + 1);
    Qubit a = ring(2 * i - 1), b = ring(2 * i), c = ring(2 * i + 1);
    v.toggle(Hyperedge{0, a});
    v.toggle(Hyperedge{a, b});
    v.toggle(Hyperedge{b, c});
    v.toggle(Hyperedge{c, 0});
    gates.push_back(std::move(v));
  }
  return gates;
}

std::vector<int> layer_assignment(const std::vector<PhaseGateSet>& gates) {
  std::vector<int> layer(gates.size(), 0);
  std::vector<std::vector<Qubit>> supports;
  supports.reserve(gates.size());
  for (const auto& g : gates) supports.push_back(g.support());

  auto overlap = [](const std::vector<Qubit>& a, const std::vector<Qubit>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
  };

  for (std::size_t g = 0; g < gates.size(); ++g) {
    int l = 0;
    for (;;) {
      bool clash = false;
      for (std::size_t h = 0; h < g && !clash; ++h) {
        if (layer[h] == l && overlap(supports[g], supports[h])) clash = true;
      }
      if (!clash) break;
      ++l;
    }
    layer[g] = l;
  }
  return layer;
}

int layer_count(const std::vector<int>& assignment) {
  int m = 0;
  for (int l : assignment) m = std::max(m, l + 1);
  return m;
}

int depth_lower_bound(std::uint64_t k, std::uint64_t code_distance) {
  if (k < 2) throw std::invalid_argument("depth_lower_bound: need k >= 2");
  int depth = 0;
  std::uint64_t reach = 1;
  while (reach < code_distance) {
    if (reach > UINT64_MAX / k) {  // k^depth already beyond any distance
      ++depth;
      break;
    }
    reach *= k;
    ++depth;
  }
  return depth;
}

}  // namespace klocal
