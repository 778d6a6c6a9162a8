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

#include "dense_sim.hpp"
#include "klocal/constructions.hpp"
#include "klocal/monitored.hpp"
#include "klocal/rng.hpp"

using namespace klocal;

TEST_CASE("pauli string multiplication phases") {
  auto X = PauliString::from_text(1, "X");
  auto Y = PauliString::from_text(1, "Y");
  auto Z = PauliString::from_text(1, "Z");
  PauliString p = X;
  p.mul(Z);  // X Z = -i Y
  CHECK(p.x == Y.x);
  CHECK(p.z == Y.z);
  CHECK(p.phase == 3);
  PauliString q = Z;
  q.mul(X);  // Z X = i Y
  CHECK(q.phase == 1);
  PauliString r = Y;
  r.mul(Y);
  CHECK(r.is_identity_support());
  CHECK(r.phase == 0);
  CHECK(!X.commutes(Z));
  CHECK(X.commutes(X));
  auto XX = PauliString::from_text(2, "XX");
  auto ZZ = PauliString::from_text(2, "ZZ");
  CHECK(XX.commutes(ZZ));
}

TEST_CASE("clifford group enumeration") {
  const auto& gates = enumerate_clifford2();
  CHECK(gates.size() == 11520);
  // the identity is present with an empty word
  bool has_id = false;
  for (const auto& g : gates) {
    if (g.img_x1 == PauliString::from_text(2, "XI") &&
        g.img_z1 == PauliString::from_text(2, "ZI") &&
        g.img_x2 == PauliString::from_text(2, "IX") &&
        g.img_z2 == PauliString::from_text(2, "IZ")) {
      has_id = true;
      CHECK(g.word.empty());
    }
  }
  CHECK(has_id);
}

TEST_CASE("measuring Z on |+> is a fair coin, repeats are deterministic") {
  SplitRng rng(42, 0);
  int minus = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    Tableau tab(2);
    PauliString z0(2);
    z0.set_z(0, true);
    int o1 = tab.measure_pauli(z0, [&] { return rng.bernoulli(0.5); });
    int o2 = tab.measure_pauli(z0, [&] { return rng.bernoulli(0.5); });
    CHECK(o1 == o2);  // projector idempotence
    if (o1 < 0) ++minus;
  }
  // 3 sigma around the fair rate
  double rate = static_cast<double>(minus) / trials;
  CHECK(rate > 0.5 - 3 * 0.005);
  CHECK(rate < 0.5 + 3 * 0.005);
}

TEST_CASE("measuring every cluster check prepares the cluster state") {
  const std::uint32_t n = 8;
  Tableau tab(n);
  SplitRng rng(7, 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    tab.measure_pauli(cluster_check(n, i), [&] { return rng.bernoulli(0.5); });
  }
  CHECK(tab.frame_valid());
  CHECK(string_order(tab) == doctest::Approx(1.0));
  // every check now has definite expectation
  for (std::uint32_t i = 0; i < n; ++i) {
    CHECK(std::abs(tab.expectation_pauli(cluster_check(n, i))) == 1);
  }
}

TEST_CASE("CZ-built cluster state has every string at exactly +1") {
  // Pins the sign conventions end to end: CZ on every ring edge of |+>^N
  // stabilises each check g_i with a plus sign, so every consecutive string
  // has expectation +1, not just +-1.
  const std::uint32_t n = 8;
  CliffordGate2 cz;
  cz.img_x1 = PauliString::from_text(2, "XZ");
  cz.img_z1 = PauliString::from_text(2, "ZI");
  cz.img_x2 = PauliString::from_text(2, "ZX");
  cz.img_z2 = PauliString::from_text(2, "IZ");
  Tableau tab(n);
  for (std::uint32_t i = 0; i < n; ++i) tab.apply_clifford2(cz, i, (i + 1) % n);
  CHECK(tab.frame_valid());
  for (std::uint32_t i = 0; i < n; ++i) {
    CHECK(tab.expectation_pauli(cluster_check(n, i)) == +1);
  }
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    PauliString prod = cluster_check(n, i);
    for (std::uint32_t j = i + 1; j < n; ++j) {
      prod.mul(cluster_check(n, j));
      CHECK(tab.expectation_pauli(prod) == +1);
    }
  }
  CHECK(string_order(tab) == doctest::Approx(1.0));
}

TEST_CASE("the 4-site ring gates disentangle the cluster state in the tableau") {
  // Cross-module run: build the cluster state from CZ gates, then apply the
  // symmetric gate family as CZ circuits; the result must be exactly |+>^N.
  const std::uint32_t n = 12;
  CliffordGate2 cz;
  cz.img_x1 = PauliString::from_text(2, "XZ");
  cz.img_z1 = PauliString::from_text(2, "ZI");
  cz.img_x2 = PauliString::from_text(2, "ZX");
  cz.img_z2 = PauliString::from_text(2, "IZ");
  Tableau tab(n);
  for (std::uint32_t i = 0; i < n; ++i) tab.apply_clifford2(cz, i, (i + 1) % n);
  for (const auto& w : w_gates_1d(n)) {
    for (const auto& e : w.edges()) {
      REQUIRE(e.arity() == 2);
      tab.apply_clifford2(cz, e.qubits[0], e.qubits[1]);
    }
  }
  for (std::uint32_t q = 0; q < n; ++q) {
    PauliString xq(n);
    xq.set_x(q, true);
    CHECK(tab.expectation_pauli(xq) == +1);
  }
}

TEST_CASE("string order of the plus state is the full-ring floor") {
  // Every proper substring has a dangling Z and vanishes; the full-ring
  // string telescopes to the global X parity, which |+>^N does stabilise.
  Tableau tab(8);
  CHECK(string_order(tab) == doctest::Approx(2.0 / (8 * 7)));
  PauliString g = cluster_check(8, 3);
  CHECK(tab.expectation_pauli(g) == 0);
  PauliString full = cluster_check(8, 0);
  for (std::uint32_t k = 1; k < 8; ++k) full.mul(cluster_check(8, k));
  CHECK(full == PauliString::from_text(8, "XXXXXXXX"));
  CHECK(tab.expectation_pauli(full) == 1);
}

TEST_CASE("expectations match the dense oracle over random histories") {
  const std::uint32_t n = 6;
  const auto& gates = enumerate_clifford2();
  std::uint32_t histories = 1000;
  for (std::uint32_t h = 0; h < histories; ++h) {
    SplitRng rng(1234, h);
    Tableau tab(n);
    testing::DenseSim dense(n);
    for (int step = 0; step < 24; ++step) {
      if (rng.bernoulli(0.5)) {
        std::uint32_t a = static_cast<std::uint32_t>(rng.below(n));
        std::uint32_t b = static_cast<std::uint32_t>(rng.below(n - 1));
        if (b >= a) ++b;
        const auto& g = gates[rng.below(gates.size())];
        tab.apply_clifford2(g, a, b);
        dense.apply_clifford2(g, a, b);
      } else {
        std::uint32_t i = static_cast<std::uint32_t>(rng.below(n));
        PauliString gi = cluster_check(n, i);
        int outcome = tab.measure_pauli(gi, [&] { return rng.bernoulli(0.5); });
        double prob = dense.project(gi, outcome);
        CHECK(prob > 1e-9);  // the tableau outcome must be realisable
      }
    }
    // compare expectations of all cluster strings, exactly in {-1,0,1}
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      PauliString prod = cluster_check(n, i);
      for (std::uint32_t j = i + 1; j < n; ++j) {
        prod.mul(cluster_check(n, j));
        int e = tab.expectation_pauli(prod);
        double de = dense.expectation(prod);
        CHECK(std::abs(de - e) < 1e-9);
      }
    }
  }
}

TEST_CASE("tableau frame stays symplectic over long random runs") {
  const std::uint32_t n = 10;
  const auto& gates = enumerate_clifford2();
  SplitRng rng(5, 0);
  Tableau tab(n);
  for (int step = 0; step < 100000; ++step) {
    if (rng.bernoulli(0.6)) {
      std::uint32_t a = static_cast<std::uint32_t>(rng.below(n));
      std::uint32_t b = static_cast<std::uint32_t>(rng.below(n - 1));
      if (b >= a) ++b;
      tab.apply_clifford2(gates[rng.below(gates.size())], a, b);
    } else {
      tab.measure_pauli(cluster_check(n, static_cast<std::uint32_t>(rng.below(n))),
                        [&] { return rng.bernoulli(0.5); });
    }
    if (step % 2000 == 0) CHECK(tab.frame_valid());
  }
  CHECK(tab.frame_valid());
}
