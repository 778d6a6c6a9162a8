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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "klocal/constructions.hpp"
#include "klocal/monitored.hpp"
#include "klocal/ring_equality.hpp"
#include "klocal/schmidt.hpp"

using json = nlohmann::ordered_json;
using namespace klocal;

namespace {

constexpr const char* kVersion = "klocal 0.1.0";

// Flat key=value file with '#' comments; applied only where the command
// line did not set the flag.
std::map<std::string, std::string> read_flat_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

std::vector<unsigned> parse_uint_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  return out;
}

int g_threads() {
  if (const char* env = std::getenv("KLOCAL_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

json gate_family_json(const std::string& family,
                      const std::vector<PhaseGateSet>& gates) {
  auto layers = layer_assignment(gates);
  json arr = json::array();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    arr.push_back({{"layer", layers[i]},
                   {"gate", json::parse(to_json(gates[i]))}});
  }
  return {{"family", family},
          {"count", gates.size()},
          {"layers", layer_count(layers)},
          {"gates", arr}};
}

struct CheckList {
  json checks = json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, json detail = json::object()) {
    detail["check"] = name;
    detail["pass"] = pass;
    checks.push_back(detail);
    ok &= pass;
  }
};

void emit(json report, const std::string& out_path) {
  report["version"] = kVersion;
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
  }
}

int run_verify_1d(unsigned n, const std::string& out) {
  if (n < 6 || n % 2) {
    std::cerr << "verify-1d: need even n >= 6\n";
    return 2;
  }
  CheckList cl;
  auto ent = cluster_entangler(n);
  auto ws = w_gates_1d(n);
  auto syms = parity_symmetries(n);

  PhaseGateSet total(n);
  for (const auto& w : ws) total = compose(total, w);
  auto resid = compose(total, ent);
  cl.add("w_family_composes_to_entangler", resid.is_trivial(),
         {{"residual_edges", resid.size()}});
  bool sym_ok = true;
  for (const auto& w : ws) {
    for (const auto& s : syms) sym_ok &= commutes_with(w, s);
  }
  cl.add("every_gate_symmetric", sym_ok);
  for (const auto& s : syms) {
    cl.add("entangler_symmetric_" + s.label, commutes_with(ent, s));
  }
  PhaseGateSet one_cz(n);
  one_cz.toggle(Hyperedge{0, 1});
  cl.add("single_cz_not_symmetric", !commutes_with(one_cz, syms[1]));
  int layers = layer_count(layer_assignment(ws));
  cl.add("layers_at_most_3", layers <= 3, {{"layers", layers}});

  emit({{"command", "verify-1d"},
        {"n", n},
        {"pass", cl.ok},
        {"checks", cl.checks},
        {"family", gate_family_json("ring_w", ws)}},
       out);
  return cl.ok ? 0 : 1;
}

int run_verify_2d(unsigned lx, unsigned ly, const std::string& out) {
  CheckList cl;
  FoldedSurface surf(lx, ly);
  auto ent = hypergraph_entangler(surf);
  auto ws = w_gates_2d(surf);
  auto syms = surf.color_symmetries();

  PhaseGateSet total(surf.n_sites());
  for (const auto& w : ws) total = compose(total, w);
  auto resid = compose(total, ent);
  cl.add("prism_family_composes_to_entangler", resid.is_trivial(),
         {{"residual_edges", resid.size()}});
  bool sym_ok = true;
  std::size_t max_support = 0;
  for (const auto& w : ws) {
    max_support = std::max(max_support, w.support().size());
    for (const auto& s : syms) sym_ok &= commutes_with(w, s);
  }
  cl.add("every_prism_gate_symmetric", sym_ok);
  cl.add("support_at_most_8", max_support <= 8, {{"max_support", max_support}});
  PhaseGateSet one_ccz(surf.n_sites());
  const auto& t0 = surf.triangles().front();
  one_ccz.toggle(Hyperedge{t0.sites[0], t0.sites[1], t0.sites[2]});
  cl.add("single_ccz_not_symmetric", !commutes_with(one_ccz, syms[0]) ||
                                         !commutes_with(one_ccz, syms[1]) ||
                                         !commutes_with(one_ccz, syms[2]));

  emit({{"command", "verify-2d"},
        {"lx", lx},
        {"ly", ly},
        {"pass", cl.ok},
        {"checks", cl.checks},
        {"family", gate_family_json("prism_w", ws)}},
       out);
  return cl.ok ? 0 : 1;
}

int run_verify_sspt(unsigned l, const std::string& out) {
  CheckList cl;
  SsptGeometry geom(l);
  auto gates = sspt_gates(geom);
  auto ent = geom.entangler();

  PhaseGateSet total(geom.n_sites());
  for (const auto& g : gates) total = compose(total, g);
  auto resid = compose(total, ent);
  cl.add("cell_family_composes_to_entangler", resid.is_trivial(),
         {{"residual_edges", resid.size()}});
  bool sym_ok = true;
  std::size_t max_support = 0;
  for (const auto& g : gates) {
    max_support = std::max(max_support, g.support().size());
    for (const auto& s : geom.line_symmetries()) sym_ok &= commutes_with(g, s);
  }
  cl.add("every_cell_gate_line_symmetric", sym_ok);
  cl.add("support_at_most_8", max_support <= 8, {{"max_support", max_support}});
  PhaseGateSet one_cz(geom.n_sites());
  one_cz.toggle(Hyperedge{geom.site(0, 0), geom.site(1, 0)});
  bool some_fail = false;
  for (const auto& s : geom.line_symmetries()) {
    some_fail |= !commutes_with(one_cz, s);
  }
  cl.add("single_cz_not_symmetric", some_fail);

  emit({{"command", "verify-sspt"},
        {"l", l},
        {"gates", gates.size()},
        {"pass", cl.ok},
        {"checks", cl.checks},
        {"family", gate_family_json("line_symmetric_cells", gates)}},
       out);
  return cl.ok ? 0 : 1;
}

int run_verify_one_to_all(unsigned n, const std::string& out) {
  if (n < 4 || n % 2) {
    std::cerr << "verify-one-to-all: need even n >= 4\n";
    return 2;
  }
  CheckList cl;
  auto gates = one_to_all_1d(n);
  PhaseGateSet total(n + 1);
  for (const auto& g : gates) total = compose(total, g);
  PhaseGateSet target(n + 1);
  for (Qubit i = 1; i <= n; ++i) target.toggle(Hyperedge{i, i % n + 1});
  auto resid = compose(total, target);
  cl.add("composes_to_ring_entangler", resid.is_trivial(),
         {{"residual_edges", resid.size()}});
  bool ancilla_free = true;
  for (const auto& e : total.edges()) ancilla_free &= !e.contains(0);
  cl.add("ancilla_disentangled", ancilla_free);

  std::vector<Qubit> even{0}, odd;
  for (Qubit i = 1; i <= n; ++i) (i % 2 == 0 ? even : odd).push_back(i);
  SymmetrySpec se(even, "X_even+ancilla"), so(odd, "X_odd");
  bool sym_ok = true;
  for (const auto& g : gates) sym_ok &= commutes_with(g, se) && commutes_with(g, so);
  cl.add("every_gate_symmetric", sym_ok);

  // 2D variant at the smallest valid torus.
  auto o2 = one_to_all_2d(3, 3);
  PhaseGateSet total2(o2.n_qubits);
  for (const auto& g : o2.gates) total2 = compose(total2, g);
  auto resid2 = compose(total2, o2.entangler);
  cl.add("2d_composes_to_entangler", resid2.is_trivial());
  bool anc2 = true;
  for (const auto& e : total2.edges()) anc2 &= !e.contains(0);
  cl.add("2d_ancilla_disentangled", anc2);
  bool sym2 = true;
  for (const auto& g : o2.gates) {
    for (const auto& s : o2.symmetries) sym2 &= commutes_with(g, s);
  }
  cl.add("2d_every_gate_symmetric", sym2);

  emit({{"command", "verify-one-to-all"},
        {"n", n},
        {"pass", cl.ok},
        {"checks", cl.checks}},
       out);
  return cl.ok ? 0 : 1;
}

MargolusQCA qca_by_name(const std::string& name) {
  if (name == "shift") return shift_qca();
  if (name == "identity") return identity_qca(2);
  if (name == "cluster") return blocked_cluster_qca();
  if (name == "random1") return random_qca(2, 11);
  if (name == "random2") return random_qca(2, 12);
  if (name == "compact2") return compactified_shift_2d(2);
  if (name == "compact3") return compactified_shift_2d(3);
  throw std::invalid_argument(
      "case must be one of shift, identity, cluster, random1, random2, "
      "compact2, compact3");
}

// Fixed 6-significant-digit numbers keep reports diffable.
double sig6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return std::atof(buf);
}

int run_qca_verify(const std::string& name, int region, const std::string& out) {
  MargolusQCA q = qca_by_name(name);
  VrBundle b = build_vr(q, region);
  double dev = verify_ring_equality(q, region);
  RationalIndex idx = gnvw_index(q);
  bool pass = dev <= 1e-9 && b.vr_layers == 2;
  emit({{"command", "qca-verify"},
        {"case", name},
        {"region", region},
        {"ring_size", b.layout.length()},
        {"deviation", sig6(dev)},
        {"index", {{"num", idx.num}, {"den", idx.den}}},
        {"depth_certificate", b.vr_layers},
        {"pass", pass}},
       out);
  return pass ? 0 : 1;
}

int run_qca_index(const std::string& name, const std::string& out) {
  MargolusQCA q = qca_by_name(name);
  RationalIndex idx = gnvw_index(q);
  RationalIndex rev = gnvw_index(reverse_representation(q));
  bool pass = rev == idx.inverse();
  emit({{"command", "qca-index"},
        {"case", name},
        {"index", {{"num", idx.num}, {"den", idx.den}}},
        {"reversed_index", {{"num", rev.num}, {"den", rev.den}}},
        {"reciprocal_ok", pass}},
       out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-local circuit constructions and verifications"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the report here instead of stdout");

  unsigned n1d = 8;
  auto* v1 = app.add_subcommand("verify-1d", "ring cluster disentangler identities");
  v1->add_option("--n", n1d, "ring size (even, >= 6)");

  unsigned lx = 3, ly = 6;
  auto* v2 = app.add_subcommand("verify-2d", "folded hypergraph identities");
  v2->add_option("--lx", lx, "torus width (multiple of 3)");
  v2->add_option("--ly", ly, "torus height (multiple of 6)");

  unsigned lsspt = 6;
  auto* v3 = app.add_subcommand("verify-sspt", "line-symmetric cell identities");
  v3->add_option("--l", lsspt, "torus side (even, >= 4)");

  unsigned nota = 8;
  auto* v4 = app.add_subcommand("verify-one-to-all", "central-ancilla protocols");
  v4->add_option("--n", nota, "ring size (even)");

  std::string qcase = "shift";
  int region = 2;
  auto* v5 = app.add_subcommand("qca-verify", "two-layer ring realization check");
  v5->add_option("--case", qcase, "automaton to check");
  v5->add_option("--region", region, "truncation region size");

  auto* v6 = app.add_subcommand("qca-index", "rational index and its reversal");
  v6->add_option("--case", qcase, "automaton");

  std::string ens = "a";
  std::vector<unsigned> sizes{24};
  std::vector<double> pgrid{0.0};
  unsigned reals = 100;
  std::uint64_t seed = 1;
  std::string signmode = "exact";
  unsigned bound_k = 0, bound_d = 0;
  std::string config_path;
  auto* v7 = app.add_subcommand("monitored-sweep", "string-order sweep, CSV output");
  v7->add_option("--config", config_path, "flat key=value file; command line overrides");
  auto* opt_ens = v7->add_option("--ensemble", ens, "list of ensembles from {a,b,c,d}");
  auto* opt_sizes = v7->add_option("--sizes", sizes, "ring sizes")->delimiter(',');
  auto* opt_pgrid = v7->add_option("--p-grid", pgrid, "unitary probabilities")->delimiter(',');
  auto* opt_reals = v7->add_option("--realizations", reals, "trajectories per point");
  auto* opt_seed = v7->add_option("--seed", seed, "master seed");
  auto* opt_sign = v7->add_option("--filter-sign", signmode, "exact or modsign symmetry filters");
  v7->add_option("--bound", bound_k, "helper: k for the k-local depth bound");
  v7->add_option("--bound-distance", bound_d, "helper: code distance for the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (v1->parsed()) return run_verify_1d(n1d, out_path);
    if (v2->parsed()) return run_verify_2d(lx, ly, out_path);
    if (v3->parsed()) return run_verify_sspt(lsspt, out_path);
    if (v4->parsed()) return run_verify_one_to_all(nota, out_path);
    if (v5->parsed()) return run_qca_verify(qcase, region, out_path);
    if (v6->parsed()) return run_qca_index(qcase, out_path);
    if (v7->parsed()) {
      if (!config_path.empty()) {
        auto kv = read_flat_config(config_path);
        auto take = [&kv](const char* key, const CLI::Option* opt) -> const std::string* {
          auto it = kv.find(key);
          return (it != kv.end() && opt->count() == 0) ? &it->second : nullptr;
        };
        if (const auto* v = take("ensemble", opt_ens)) ens = *v;
        if (const auto* v = take("sizes", opt_sizes)) sizes = parse_uint_list(*v);
        if (const auto* v = take("p-grid", opt_pgrid)) pgrid = parse_double_list(*v);
        if (const auto* v = take("realizations", opt_reals)) reals = static_cast<unsigned>(std::stoul(*v));
        if (const auto* v = take("seed", opt_seed)) seed = std::stoull(*v);
        if (const auto* v = take("filter-sign", opt_sign)) signmode = *v;
      }
      if (signmode != "exact" && signmode != "modsign") {
        std::cerr << "--filter-sign must be exact or modsign\n";
        return 2;
      }
      std::vector<Ensemble> es;
      for (char c : ens) {
        if (c == ',') continue;
        es.push_back(ensemble_from_char(c));
      }
      std::vector<std::uint32_t> ns(sizes.begin(), sizes.end());
      auto rows = sweep(es, ns, pgrid, reals, seed, signmode == "exact",
                        g_threads());
      std::string csv = sweep_csv(rows);
      if (bound_k >= 2 && bound_d >= 1) {
        csv += "# depth_lower_bound(k=" + std::to_string(bound_k) +
               ",d=" + std::to_string(bound_d) +
               ")=" + std::to_string(depth_lower_bound(bound_k, bound_d)) + "\n";
      }
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        f << csv;
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
