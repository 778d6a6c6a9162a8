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

#include <string>
#include <vector>

#include "klocal/rng.hpp"
#include "klocal/tableau.hpp"

namespace klocal {

enum class Ensemble : char { A = 'a', B = 'b', C = 'c', D = 'd' };

Ensemble ensemble_from_char(char c);

/// Monitored dynamics on a ring of n qubits starting from |+>^n: each step
/// applies a random two-qubit unitary with probability p, otherwise measures
/// a random cluster check g_i = Z_{i-1} X_i Z_{i+1}. Gate ensembles:
///   a) neighbour pairs, all two-qubit Cliffords
///   b) neighbour pairs, Cliffords preserving both sublattice X-parities
///   c) arbitrary pairs, same symmetry restriction
///   d) arbitrary pairs, Cliffords fixing X (x) I and I (x) X
struct ExperimentConfig {
  std::uint32_t n = 24;
  double p = 0.0;
  Ensemble ensemble = Ensemble::A;
  std::uint32_t realizations = 100;
  std::uint64_t master_seed = 1;
  bool exact_sign_filter = true;  // commute with signs, not just up to sign

  std::uint64_t burn_in_steps() const {
    return 2ull * n * n;
  }
  std::uint64_t window_steps() const { return 2ull * n * n; }
  std::uint64_t cadence() const { return n; }
};

/// The cluster check g_i on a ring of n qubits.
PauliString cluster_check(std::uint32_t n, std::uint32_t i);

/// s = 2/(N(N-1)) sum_{i<j} s_ij^2 with s_ij the expectation of the string
/// prod_{k=i}^{j} g_k.
double string_order(const Tableau& t);

/// The per-gate set for a pair with the given sublattice parities under the
/// ensemble's symmetry restriction (indices into enumerate_clifford2()).
std::vector<std::uint32_t> filter_ensemble(Ensemble e, bool site1_even,
                                           bool site2_even, bool exact_sign);

/// Time-averaged string order of one trajectory (post burn-in window).
double run_realization(const ExperimentConfig& cfg, std::uint64_t realization);

struct SweepRow {
  Ensemble ensemble;
  std::uint32_t n;
  double p;
  std::uint32_t realizations;
  std::uint64_t steps;
  double s_bar;
  double stderr_;
  std::uint64_t seed;
};

/// Runs the grid (sorted by ensemble, n, p) with up to `threads` workers;
/// results are deterministic and independent of the thread count.
std::vector<SweepRow> sweep(const std::vector<Ensemble>& ensembles,
                            const std::vector<std::uint32_t>& sizes,
                            const std::vector<double>& p_grid,
                            std::uint32_t realizations,
                            std::uint64_t master_seed, bool exact_sign,
                            int threads);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace klocal
