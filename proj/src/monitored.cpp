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

#include "klocal/monitored.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace klocal {

Ensemble ensemble_from_char(char c) {
  switch (c) {
    case 'a': return Ensemble::A;
    case 'b': return Ensemble::B;
    case 'c': return Ensemble::C;
    case 'd': return Ensemble::D;
    default: throw std::invalid_argument("ensemble must be one of a,b,c,d");
  }
}

PauliString cluster_check(std::uint32_t n, std::uint32_t i) {
  PauliString g(n);
  g.set_z((i + n - 1) % n, true);
  g.set_x(i, true);
  g.set_z((i + 1) % n, true);
  return g;
}

double string_order(const Tableau& t) {
  const std::uint32_t n = t.n_qubits();
  double acc = 0.0;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    PauliString prod = cluster_check(n, i);
    for (std::uint32_t j = i + 1; j < n; ++j) {
      prod.mul(cluster_check(n, j));
      int e = t.expectation_pauli(prod);
      acc += static_cast<double>(e) * e;
    }
  }
  return 2.0 * acc / (static_cast<double>(n) * (n - 1));
}

namespace {

// A gate respects a restriction set when it maps each listed Pauli to
// itself, including the sign (or up to sign when exact = false).
bool fixes_all(const CliffordGate2& g, const std::vector<PauliString>& reqs,
               bool exact) {
  for (const auto& r : reqs) {
    PauliString img(2);
    bool x1 = r.get_x(0), z1 = r.get_z(0), x2 = r.get_x(1), z2 = r.get_z(1);
    int local_i = (x1 && z1 ? 1 : 0) + (x2 && z2 ? 1 : 0);
    if (x1) img.mul(g.img_x1);
    if (x2) img.mul(g.img_x2);
    if (z1) img.mul(g.img_z1);
    if (z2) img.mul(g.img_z2);
    img.phase = static_cast<std::uint8_t>((img.phase + local_i) % 4);
    if (img.x != r.x || img.z != r.z) return false;
    if (exact && img.phase != r.phase) return false;
  }
  return true;
}

std::vector<std::uint32_t> build_filtered(Ensemble e, bool p1, bool p2,
                                          bool exact) {
  const auto& all = enumerate_clifford2();
  std::vector<PauliString> reqs;
  switch (e) {
    case Ensemble::A:
      break;
    case Ensemble::B:
    case Ensemble::C:
      if (p1 == p2) {
        reqs.push_back(PauliString::from_text(2, "XX"));
      } else {
        reqs.push_back(PauliString::from_text(2, "XI"));
        reqs.push_back(PauliString::from_text(2, "IX"));
      }
      break;
    case Ensemble::D:
      reqs.push_back(PauliString::from_text(2, "XI"));
      reqs.push_back(PauliString::from_text(2, "IX"));
      break;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    if (fixes_all(all[i], reqs, exact)) out.push_back(i);
  }
  if (out.empty()) throw std::runtime_error("empty gate ensemble");
  return out;
}

}  // namespace

std::vector<std::uint32_t> filter_ensemble(Ensemble e, bool site1_even,
                                           bool site2_even, bool exact_sign) {
  // Memoised: realizations share the tables across threads.
  static std::mutex mu;
  static std::map<int, std::vector<std::uint32_t>> cache;
  int key = (static_cast<int>(static_cast<char>(e)) << 3) |
            (site1_even ? 4 : 0) | (site2_even ? 2 : 0) | (exact_sign ? 1 : 0);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = build_filtered(e, site1_even, site2_even, exact_sign);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(table)).first->second;
}

double run_realization(const ExperimentConfig& cfg, std::uint64_t realization) {
  if (cfg.n % 2 != 0 || cfg.n < 4) {
    throw std::invalid_argument("monitored dynamics needs even n >= 4");
  }
  // Per-parity-pattern gate tables, resolved once.
  std::vector<std::uint32_t> same = filter_ensemble(cfg.ensemble, true, true,
                                                    cfg.exact_sign_filter);
  std::vector<std::uint32_t> mixed = filter_ensemble(cfg.ensemble, true, false,
                                                     cfg.exact_sign_filter);
  const auto& all = enumerate_clifford2();

  SplitRng rng(cfg.master_seed, realization);
  Tableau t(cfg.n);

  const std::uint64_t total = cfg.burn_in_steps() + cfg.window_steps();
  double acc = 0.0;
  std::uint64_t samples = 0;

  for (std::uint64_t step = 0; step < total; ++step) {
    if (rng.bernoulli(cfg.p)) {
      std::uint32_t a, b;
      if (cfg.ensemble == Ensemble::A || cfg.ensemble == Ensemble::B) {
        a = static_cast<std::uint32_t>(rng.below(cfg.n));
        b = (a + 1) % cfg.n;
      } else {
        a = static_cast<std::uint32_t>(rng.below(cfg.n));
        b = static_cast<std::uint32_t>(rng.below(cfg.n - 1));
        if (b >= a) ++b;
      }
      const auto& table = (a % 2 == b % 2) ? same : mixed;
      const auto& gate = all[table[rng.below(table.size())]];
      t.apply_clifford2(gate, a, b);
    } else {
      std::uint32_t i = static_cast<std::uint32_t>(rng.below(cfg.n));
      t.measure_pauli(cluster_check(cfg.n, i), [&] { return rng.bernoulli(0.5); });
    }
    if (step >= cfg.burn_in_steps() && (step + 1) % cfg.cadence() == 0) {
      acc += string_order(t);
      ++samples;
    }
  }
  return samples ? acc / static_cast<double>(samples) : 0.0;
}

std::vector<SweepRow> sweep(const std::vector<Ensemble>& ensembles,
                            const std::vector<std::uint32_t>& sizes,
                            const std::vector<double>& p_grid,
                            std::uint32_t realizations,
                            std::uint64_t master_seed, bool exact_sign,
                            int threads) {
  if (ensembles.empty() || sizes.empty() || p_grid.empty() || !realizations) {
    throw std::invalid_argument("sweep: empty grid");
  }
  enumerate_clifford2();  // build the shared table before threading

  struct Point {
    ExperimentConfig cfg;
    std::vector<double> values;
  };
  std::vector<Point> points;
  std::vector<Ensemble> es = ensembles;
  std::sort(es.begin(), es.end(),
            [](Ensemble a, Ensemble b) { return static_cast<char>(a) < static_cast<char>(b); });
  std::vector<std::uint32_t> ns = sizes;
  std::sort(ns.begin(), ns.end());
  std::vector<double> ps = p_grid;
  std::sort(ps.begin(), ps.end());
  for (Ensemble e : es) {
    for (std::uint32_t n : ns) {
      for (double p : ps) {
        Point pt;
        pt.cfg.n = n;
        pt.cfg.p = p;
        pt.cfg.ensemble = e;
        pt.cfg.realizations = realizations;
        pt.cfg.master_seed = master_seed;
        pt.cfg.exact_sign_filter = exact_sign;
        pt.values.assign(realizations, 0.0);
        points.push_back(std::move(pt));
      }
    }
  }

  struct Task {
    std::size_t point;
    std::uint64_t realization;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::uint32_t r = 0; r < realizations; ++r) tasks.push_back({i, r});
  }

  int nthreads = std::max(1, threads);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= tasks.size()) break;
      auto [pi, r] = tasks[k];
      // Stream index mixes the grid point so every realization is distinct.
      std::uint64_t stream =
          r + 1000003ull * (static_cast<std::uint64_t>(
                                static_cast<unsigned char>(points[pi].cfg.ensemble)) +
                            257ull * points[pi].cfg.n +
                            1000ull * static_cast<std::uint64_t>(
                                          std::llround(points[pi].cfg.p * 1e6)));
      points[pi].values[r] = run_realization(points[pi].cfg, stream);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::vector<SweepRow> rows;
  for (const auto& pt : points) {
    double mean = 0.0;
    for (double v : pt.values) mean += v;
    mean /= pt.values.size();
    double var = 0.0;
    for (double v : pt.values) var += (v - mean) * (v - mean);
    double se = pt.values.size() > 1
                    ? std::sqrt(var / (pt.values.size() - 1.0) /
                                pt.values.size())
                    : 0.0;
    rows.push_back({pt.cfg.ensemble, pt.cfg.n, pt.cfg.p, realizations,
                    pt.cfg.burn_in_steps() + pt.cfg.window_steps(), mean, se,
                    master_seed});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "ensemble,N,p,realizations,steps,s_bar,stderr,seed\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%c,%u,%.6g,%u,%llu,%.6g,%.6g,%llu\n",
                  static_cast<char>(r.ensemble), r.n, r.p, r.realizations,
                  static_cast<unsigned long long>(r.steps), r.s_bar, r.stderr_,
                  static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

}  // namespace klocal
