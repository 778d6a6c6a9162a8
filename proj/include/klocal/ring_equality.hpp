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

#include "klocal/margolus.hpp"

namespace klocal {

/// The stitched ring R for a truncation region [c, d]: counter-clockwise
/// [c]_A, ..., [d+1]_A, [d]_B, ..., [c]_B, [c-1]_A, of length 2|R| + 2.
struct RingLayout {
  int c = 1;
  int d = 2;
  std::vector<std::pair<int, bool>> sites;  // (physical index, is_A)

  int region_size() const { return d - c + 1; }
  int length() const { return static_cast<int>(sites.size()); }
  int pos_a(int phys) const;
  int pos_b(int phys) const;
};

RingLayout make_ring_layout(int region_size);

/// The truncated doubling circuit V_R as a two-layer plan over the ring
/// sites, each gate on at most two sites. For even region sizes this is the
/// general normal-form construction; odd region sizes are supported for
/// automata with a trivial left leg (l = 1, shift-like), where the
/// swap-conjugate gates stay two-site.
struct VrBundle {
  RingLayout layout;
  CircuitPlan vr;
  CircuitPlan w1;  // applied after vr
  CircuitPlan w2;  // applied before vr
  int vr_layers = 0;
};

VrBundle build_vr(const MargolusQCA& q, int region_size);

/// Max deviation (up to a global phase) between W1 V_R W2 and the automaton
/// applied directly to the ring. Exact dense comparison when the Hilbert
/// space is small; a deterministic probe-vector sweep otherwise.
double verify_ring_equality(const MargolusQCA& q, int region_size);

/// Exposed for diagnostics/tests: the combined plan and the reference plan.
CircuitPlan plan_w1_vr_w2(const VrBundle& b);
CircuitPlan plan_ring_reference(const MargolusQCA& q, int region_size);

/// Checks an operator on a product register acts trivially outside `slots`
/// and extracts its action there (up to global phase).
Matrix extract_local_gate(const Matrix& op, const std::vector<int>& dims,
                          const std::vector<int>& slots, double tol = 1e-9);

}  // namespace klocal
