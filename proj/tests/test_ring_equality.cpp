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

#include <doctest.h>

#include "klocal/ring_equality.hpp"

using namespace klocal;

namespace {

Matrix dense_swap2(int d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
  }
  return s;
}

// Independent oracle for V_R: the literal swap-conjugate product
// (prod S_i)(prod Q^-1 S_i Q) built on an A ring plus the region's B sites,
// then restricted to the stitched ring order. The A ring must exceed the
// region by at least four sites so that no conjugation window wraps onto
// itself. Assembled as a single plan to keep the register affordable.
Matrix oracle_vr(const MargolusQCA& q, int region) {
  const int c = 1, d = region;
  int m_a = region + 4 + (region % 2);  // even ring containing [c-1, d+1]
  std::vector<int> dims(m_a + region, q.d);
  auto slot_a = [&](int phys) { return phys; };
  auto slot_b = [&](int phys) { return m_a + (phys - c); };

  CircuitPlan plan;
  plan.init_dims = dims;
  plan.layer_starts = {0};
  // Chain convention: u on pairs (2i, 2i+1), v on (2i-1, 2i), matching the
  // placement assumed by the structural builder.
  auto add_q = [&] {
    for (int i = 0; i < m_a / 2; ++i) {
      plan.ops.push_back({q.u, {2 * i, 2 * i + 1}, {q.l, q.r}});
    }
    for (int i = 0; i < m_a / 2; ++i) {
      plan.ops.push_back({q.v, {(2 * i + 1) % m_a, (2 * i + 2) % m_a}, {q.d, q.d}});
    }
  };
  auto add_q_inv = [&] {
    for (int i = 0; i < m_a / 2; ++i) {
      plan.ops.push_back(
          {q.v.adjoint(), {(2 * i + 1) % m_a, (2 * i + 2) % m_a}, {q.r, q.l}});
    }
    for (int i = 0; i < m_a / 2; ++i) {
      plan.ops.push_back({q.u.adjoint(), {2 * i, 2 * i + 1}, {q.d, q.d}});
    }
  };
  auto add_swaps = [&] {
    for (int i = c; i <= d; ++i) {
      plan.ops.push_back(
          {dense_swap2(q.d), {slot_a(i), slot_b(i)}, {q.d, q.d}});
    }
  };
  add_q();
  add_swaps();
  add_q_inv();
  add_swaps();
  Matrix vr_full = plan_to_matrix(plan);

  // Restrict to the ring order; sites outside the ring must be untouched.
  RingLayout lay = make_ring_layout(region);
  std::vector<int> ring_slots;
  for (auto [phys, is_a] : lay.sites) {
    ring_slots.push_back(is_a ? slot_a(phys) : slot_b(phys));
  }
  return extract_local_gate(vr_full, dims, ring_slots, 1e-9);
}

}  // namespace

TEST_CASE("ring layout shape") {
  RingLayout lay = make_ring_layout(2);
  CHECK(lay.length() == 6);
  CHECK(lay.sites[0] == std::pair<int, bool>{1, true});
  CHECK(lay.sites[2] == std::pair<int, bool>{3, true});
  CHECK(lay.sites[3] == std::pair<int, bool>{2, false});
  CHECK(lay.sites[5] == std::pair<int, bool>{0, true});
}

TEST_CASE("structural V_R equals the swap-conjugate oracle") {
  for (const MargolusQCA& q :
       {shift_qca(), identity_qca(2), random_qca(2, 1), random_qca(2, 2)}) {
    VrBundle b = build_vr(q, 2);
    CHECK(b.vr_layers == 2);
    CHECK(phase_aligned_max_diff(plan_to_matrix(b.vr), oracle_vr(q, 2)) < 1e-10);
  }
  // a larger region once, on a generic automaton
  VrBundle b = build_vr(random_qca(2, 1), 4);
  CHECK(b.vr_layers == 2);
  CHECK(phase_aligned_max_diff(plan_to_matrix(b.vr), oracle_vr(random_qca(2, 1), 4)) <
        1e-10);
}

TEST_CASE("odd-region V_R (shift form) equals the oracle") {
  for (const MargolusQCA& q : {shift_qca(), compactified_shift_2d(2, false)}) {
    if (q.d > 2) continue;  // keep the oracle register small here
    VrBundle b = build_vr(q, 3);
    CHECK(b.vr_layers == 2);
    Matrix structural = plan_to_matrix(b.vr);
    Matrix oracle = oracle_vr(q, 3);
    CHECK(phase_aligned_max_diff(structural, oracle) < 1e-10);
  }
  CHECK_THROWS(build_vr(random_qca(2, 5), 3));  // l != 1
}

TEST_CASE("V_R acts like the doubled automaton deep inside the region") {
  // On the ring, for a site well inside R, conjugation of a single-site
  // operator agrees with conjugation by the ring reference.
  MargolusQCA q = random_qca(2, 3);
  int region = 4;
  VrBundle b = build_vr(q, region);
  Matrix vr = plan_to_matrix(b.vr);
  Matrix ring = plan_to_matrix(plan_ring_reference(q, region));
  int pos = 2;  // [3]_A, centre of the front
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  std::vector<int> dims(b.layout.length(), 2);
  CircuitPlan emb;
  emb.init_dims = dims;
  emb.layer_starts = {0};
  emb.ops.push_back({x, {pos}, {2}});
  Matrix xi = plan_to_matrix(emb);
  Matrix lhs = vr * xi * vr.adjoint();
  Matrix rhs = ring * xi * ring.adjoint();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ring equality holds for the full acceptance family") {
  CHECK(verify_ring_equality(shift_qca(), 2) < 1e-10);           // 6 qubits
  CHECK(verify_ring_equality(shift_qca(), 3) < 1e-10);           // 8 qubits
  CHECK(verify_ring_equality(identity_qca(2), 2) == doctest::Approx(0.0));
  CHECK(verify_ring_equality(random_qca(2, 1), 2) < 1e-9);
  CHECK(verify_ring_equality(random_qca(2, 2), 2) < 1e-9);
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1;
  CHECK(verify_ring_equality(from_pair_gates(cz, cz, 2), 2) < 1e-9);
}

TEST_CASE("every built bundle operator is unitary with disjoint layers") {
  for (const MargolusQCA& q : {shift_qca(), random_qca(2, 4)}) {
    for (int region : {2, 4}) {
      VrBundle b = build_vr(q, region);
      CHECK(is_unitary(plan_to_matrix(b.vr)));
      CHECK(is_unitary(plan_to_matrix(plan_w1_vr_w2(b))));
      if (!b.w1.ops.empty()) {
        CHECK(is_unitary(plan_to_matrix(b.w1)));
        CHECK(certify_layers(b.w1) == 1);  // stitching gates are one layer
      }
      if (!b.w2.ops.empty()) {
        CHECK(is_unitary(plan_to_matrix(b.w2)));
        CHECK(certify_layers(b.w2) == 1);
      }
      CHECK(is_unitary(plan_to_matrix(plan_ring_reference(q, region))));
    }
  }
}

TEST_CASE("ring equality for the compactified diagonal shift, width 2") {
  CHECK(verify_ring_equality(compactified_shift_2d(2), 2) < 1e-9);
}

TEST_CASE("every swap-form gate of V_R is symmetric when the automaton is") {
  // Gate-wise symmetry on the doubled system: each S_i and each Q^-1 S_i Q
  // commutes with the global on-site symmetry. Checked densely for the CZ
  // chain (d = 2), which commutes with X on every site.
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1;
  MargolusQCA q = from_pair_gates(cz, cz, 2);
  const int region = 2, c = 1, m_a = 4;
  std::vector<int> dims(m_a + region, 2);
  std::int64_t dim = 64;

  CircuitPlan qa;
  qa.init_dims = dims;
  qa.layer_starts = {0};
  for (int i = 0; i < m_a / 2; ++i) {
    qa.ops.push_back({q.u, {(2 * i + 1) % m_a, (2 * i + 2) % m_a}, {2, 2}});
  }
  qa.layer_starts.push_back(qa.ops.size());
  for (int i = 0; i < m_a / 2; ++i) {
    qa.ops.push_back({q.v, {2 * i, 2 * i + 1}, {2, 2}});
  }
  Matrix mq = plan_to_matrix(qa);

  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  Matrix global = Matrix::Identity(1, 1);
  for (std::int64_t s = 0; s < 6; ++s) global = kron(global, x);
  CHECK((mq * global - global * mq).cwiseAbs().maxCoeff() < 1e-12);

  for (int i = c; i <= region; ++i) {
    CircuitPlan sw;
    sw.init_dims = dims;
    sw.layer_starts = {0};
    sw.ops.push_back({dense_swap2(2), {i, m_a + (i - c)}, {2, 2}});
    Matrix si = plan_to_matrix(sw);
    Matrix vi = mq.adjoint() * si * mq;
    CHECK((si * global - global * si).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((vi * global - global * vi).cwiseAbs().maxCoeff() < 1e-10);
  }
  (void)dim;
}
