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

#include "klocal/margolus.hpp"

namespace klocal {

RationalIndex::RationalIndex(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0 || n <= 0) throw std::invalid_argument("bad rational index");
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
}

std::string RationalIndex::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

void MargolusQCA::validate(double tol) const {
  if (l * r != d * d) throw std::invalid_argument("need l*r = d^2");
  if (u.rows() != l * r || u.cols() != d * d || v.rows() != d * d ||
      v.cols() != r * l) {
    throw std::invalid_argument("u/v shapes inconsistent with (d,l,r)");
  }
  if (!is_unitary(u, tol) || !is_unitary(v, tol)) {
    throw std::invalid_argument("u and v must be unitary");
  }
}

MargolusQCA shift_qca() {
  MargolusQCA q;
  q.d = 2;
  q.l = 1;
  q.r = 4;
  q.u = Matrix::Identity(4, 4);  // bundle both site values into the r leg
  q.v = Matrix::Identity(4, 4);  // release them one site to the right
  return q;
}

MargolusQCA identity_qca(int d) {
  MargolusQCA q;
  q.d = q.l = q.r = d;
  q.u = Matrix::Identity(d * d, d * d);
  q.v = Matrix::Identity(d * d, d * d);
  return q;
}

MargolusQCA from_pair_gates(const Matrix& gate_u, const Matrix& gate_v, int d) {
  MargolusQCA q;
  q.d = q.l = q.r = d;
  q.u = gate_u;
  q.v = gate_v;
  q.validate();
  return q;
}

MargolusQCA random_qca(int d, std::uint64_t seed) {
  return from_pair_gates(random_unitary(d * d, seed * 2 + 1),
                         random_unitary(d * d, seed * 2 + 2), d);
}

namespace {
Matrix cz_between(int n_qubits, int a, int b) {
  int dim = 1 << n_qubits;
  Matrix m = Matrix::Identity(dim, dim);
  for (int x = 0; x < dim; ++x) {
    int ba = (x >> (n_qubits - 1 - a)) & 1;
    int bb = (x >> (n_qubits - 1 - b)) & 1;
    if (ba && bb) m(x, x) = -1.0;
  }
  return m;
}
}  // namespace

MargolusQCA blocked_cluster_qca() {
  // Cells of two qubits (q0 q1 | q2 q3 across a cell pair): each layer gate
  // carries the left cell's internal CZ and the CZ across the cell seam.
  Matrix g = cz_between(4, 0, 1) * cz_between(4, 1, 2);
  return from_pair_gates(g, g, 4);
}

MargolusQCA compactified_shift_2d(int width, bool diagonal) {
  if (width < 1 || width > 3) {
    throw std::invalid_argument("compactified_shift_2d: width in {1,2,3}");
  }
  int d = 1 << width;
  auto rot = [&](int a) {
    if (!diagonal) return a;
    // one-step cyclic rotation of the qubit column: bit i <- bit i-1
    int out = 0;
    for (int i = 0; i < width; ++i) {
      int src = (i + width - 1) % width;
      out |= ((a >> src) & 1) << i;
    }
    return out;
  };
  MargolusQCA q;
  q.d = d;
  q.l = 1;
  q.r = d * d;
  q.u = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      q.u(rot(a) * d + rot(b), a * d + b) = 1.0;
    }
  }
  q.v = Matrix::Identity(d * d, d * d);
  return q;
}

Matrix u_bar(const MargolusQCA& q) {
  return factor_exchange(q.l, q.r) * q.u * factor_exchange(q.d, q.d);
}

Matrix v_bar(const MargolusQCA& q) {
  return factor_exchange(q.d, q.d) * q.v * factor_exchange(q.l, q.r);
}

MargolusQCA reverse_representation(const MargolusQCA& q) {
  MargolusQCA out;
  out.d = q.d;
  out.l = q.r;
  out.r = q.l;
  out.u = u_bar(q);
  out.v = v_bar(q);
  return out;
}

Matrix build_w(const MargolusQCA& q) { return v_bar(q) * q.u; }

Matrix build_w_bar(const MargolusQCA& q) {
  Matrix e = factor_exchange(q.d, q.d);
  return e * build_w(q) * e;
}

RationalIndex gnvw_index(const MargolusQCA& q) { return {q.r, q.d}; }

CircuitPlan plan_margolus_ring(const MargolusQCA& q, int m) {
  if (m < 4 || m % 2 != 0) {
    throw std::invalid_argument("plan_margolus_ring: need even m >= 4");
  }
  q.validate();
  CircuitPlan plan;
  plan.init_dims.assign(m, q.d);
  plan.layer_starts = {0};
  for (int i = 0; i < m / 2; ++i) {
    GateOp op;
    op.matrix = q.u;
    op.slots = {(2 * i + 1) % m, (2 * i + 2) % m};
    op.out_dims = {q.l, q.r};
    plan.ops.push_back(std::move(op));
  }
  plan.layer_starts.push_back(plan.ops.size());
  for (int i = 0; i < m / 2; ++i) {
    GateOp op;
    op.matrix = q.v;
    op.slots = {2 * i, 2 * i + 1};
    op.out_dims = {q.d, q.d};
    plan.ops.push_back(std::move(op));
  }
  return plan;
}

}  // namespace klocal
