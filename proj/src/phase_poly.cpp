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

#include "klocal/phase_poly.hpp"

#include <algorithm>
#include <sstream>

namespace klocal {

namespace {
std::vector<Qubit> sorted_unique(std::vector<Qubit> qs) {
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw std::invalid_argument("hyperedge indices must be distinct");
  }
  return qs;
}
}  // namespace

Hyperedge::Hyperedge(std::initializer_list<Qubit> qs)
    : qubits(sorted_unique(std::vector<Qubit>(qs))) {}

Hyperedge::Hyperedge(std::vector<Qubit> qs) : qubits(sorted_unique(std::move(qs))) {}

bool Hyperedge::contains(Qubit q) const {
  return std::binary_search(qubits.begin(), qubits.end(), q);
}

Hyperedge Hyperedge::without(Qubit q) const {
  Hyperedge e;
  e.qubits.reserve(qubits.size() - 1);
  for (Qubit x : qubits) {
    if (x != q) e.qubits.push_back(x);
  }
  return e;
}

SymmetrySpec::SymmetrySpec(std::vector<Qubit> sup, std::string lbl)
    : support(sorted_unique(std::move(sup))), label(std::move(lbl)) {}

void PhaseGateSet::check_edge(const Hyperedge& e) const {
  for (Qubit q : e.qubits) {
    if (q >= n_) throw std::out_of_range("hyperedge index out of range");
  }
}

void PhaseGateSet::toggle(const Hyperedge& e) {
  check_edge(e);
  if (e.qubits.empty()) {
    sign_ = -sign_;
    return;
  }
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    edges_.insert(e);
  } else {
    edges_.erase(it);
  }
}

std::vector<Qubit> PhaseGateSet::support() const {
  std::set<Qubit> s;
  for (const auto& e : edges_) s.insert(e.qubits.begin(), e.qubits.end());
  return {s.begin(), s.end()};
}

std::string PhaseGateSet::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  for (const auto& e : edges_) {
    os << '{';
    for (std::size_t i = 0; i < e.qubits.size(); ++i) {
      if (i) os << ',';
      os << e.qubits[i];
    }
    os << '}';
  }
  if (edges_.empty()) os << "1";
  return os.str();
}

PhaseGateSet toggle(PhaseGateSet state, const Hyperedge& e) {
  state.toggle(e);
  return state;
}

PhaseGateSet compose(const PhaseGateSet& a, const PhaseGateSet& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("compose: qubit counts differ");
  }
  PhaseGateSet out = a;
  if (b.sign() < 0) out.toggle(Hyperedge{});
  for (const auto& e : b.edges()) out.toggle(e);
  return out;
}

PhaseGateSet conjugate_by_x(const PhaseGateSet& op, const SymmetrySpec& sym) {
  PhaseGateSet out = op;
  for (Qubit a : sym.support) {
    if (a >= op.n_qubits()) throw std::out_of_range("symmetry support out of range");
    // Substitute x_a -> x_a xor 1: every edge through a spawns the edge
    // with a removed. Collect first, then toggle.
    std::vector<Hyperedge> derived;
    for (const auto& e : out.edges()) {
      if (e.contains(a)) derived.push_back(e.without(a));
    }
    for (const auto& d : derived) out.toggle(d);
  }
  return out;
}

bool commutes_with(const PhaseGateSet& op, const SymmetrySpec& sym) {
  return conjugate_by_x(op, sym) == op;
}

PhaseGateSet residual(const PhaseGateSet& op, const SymmetrySpec& sym) {
  return compose(op, conjugate_by_x(op, sym));
}

bool is_trivial(const PhaseGateSet& state) { return state.is_trivial(); }

std::string to_json(const PhaseGateSet& s) {
  std::ostringstream os;
  os << "{\"n\":" << s.n_qubits() << ",\"sign\":" << s.sign() << ",\"edges\":[";
  bool first = true;
  for (const auto& e : s.edges()) {
    if (!first) os << ',';
    first = false;
    os << '[';
    for (std::size_t i = 0; i < e.qubits.size(); ++i) {
      if (i) os << ',';
      os << e.qubits[i];
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace klocal
