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

#include "klocal/dense.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace klocal {

Matrix factor_exchange(int m, int n) {
  Matrix e = Matrix::Zero(m * n, m * n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      e(b * m + a, a * n + b) = 1.0;
    }
  }
  return e;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom so the result is seed-deterministic.
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0 ? d / std::abs(d) : 1.0);
  }
  return q;
}

double phase_aligned_max_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_max_diff: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase(1.0, 0.0);
  if (std::abs(b(r, c)) > 0 && std::abs(a(r, c)) > 0) {
    phase = (a(r, c) / b(r, c));
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

SiteRegister::SiteRegister(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("site dimension must be >= 1");
  }
}

std::int64_t SiteRegister::total_dim() const {
  std::int64_t t = 1;
  for (int d : dims_) t *= d;
  return t;
}

std::int64_t SiteRegister::index_of(const std::vector<int>& digits) const {
  std::int64_t idx = 0;
  for (int s = 0; s < n_sites(); ++s) idx = idx * dims_[s] + digits[s];
  return idx;
}

std::int64_t CircuitPlan::dim() const {
  std::int64_t t = 1;
  for (int d : init_dims) t *= d;
  return t;
}

void CircuitPlan::append(const CircuitPlan& other) {
  layer_starts.push_back(ops.size());
  for (std::size_t i = 0; i < other.ops.size(); ++i) {
    if (std::find(other.layer_starts.begin(), other.layer_starts.end(), i) !=
            other.layer_starts.end() &&
        i != 0) {
      layer_starts.push_back(ops.size());
    }
    ops.push_back(other.ops[i]);
  }
}

namespace {

// Applies `g` to `slots` of the state given current dims; returns new dims.
std::vector<int> apply_gate_vec(Vector& state, const std::vector<int>& dims,
                                const GateOp& op) {
  const int k = static_cast<int>(op.slots.size());
  std::int64_t in_block = 1, out_block = 1;
  for (int s : op.slots) in_block *= dims[s];
  for (int d : op.out_dims) out_block *= d;
  if (op.matrix.cols() != in_block || op.matrix.rows() != out_block) {
    throw std::invalid_argument("gate shape does not match slot dimensions");
  }

  std::vector<int> new_dims = dims;
  for (int i = 0; i < k; ++i) new_dims[op.slots[i]] = op.out_dims[i];

  const int n = static_cast<int>(dims.size());
  std::vector<char> in_gate(n, 0);
  for (int s : op.slots) in_gate[s] = 1;
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (!in_gate[s]) rest.push_back(s);
  }
  std::int64_t rest_dim = 1;
  for (int s : rest) rest_dim *= dims[s];

  std::int64_t out_total = rest_dim * out_block;
  Vector out = Vector::Zero(out_total);

  // Strides in the *input* layout for rest sites and gate slots.
  std::vector<std::int64_t> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];
  std::vector<std::int64_t> ostride(n, 1);
  for (int s = n - 2; s >= 0; --s) ostride[s] = ostride[s + 1] * new_dims[s + 1];

  // Offset tables for the gate block in the input and output layouts.
  std::vector<std::int64_t> in_off(in_block), out_off(out_block);
  for (std::int64_t b = 0; b < in_block; ++b) {
    std::int64_t rem = b, off = 0;
    for (int i = k - 1; i >= 0; --i) {
      int dim_i = dims[op.slots[i]];
      off += (rem % dim_i) * stride[op.slots[i]];
      rem /= dim_i;
    }
    in_off[b] = off;
  }
  for (std::int64_t b = 0; b < out_block; ++b) {
    std::int64_t rem = b, off = 0;
    for (int i = k - 1; i >= 0; --i) {
      int dim_i = op.out_dims[i];
      off += (rem % dim_i) * ostride[op.slots[i]];
      rem /= dim_i;
    }
    out_off[b] = off;
  }

  // Enumerate configurations of the rest sites; gather, multiply, scatter.
  std::vector<int> rest_digit(rest.size(), 0);
  Vector in_blockv(in_block), out_blockv(out_block);
  bool done = false;
  while (!done) {
    std::int64_t base_in = 0, base_out = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      base_in += rest_digit[i] * stride[rest[i]];
      base_out += rest_digit[i] * ostride[rest[i]];
    }
    for (std::int64_t b = 0; b < in_block; ++b) {
      in_blockv(b) = state(base_in + in_off[b]);
    }
    out_blockv.noalias() = op.matrix * in_blockv;
    for (std::int64_t b = 0; b < out_block; ++b) {
      out(base_out + out_off[b]) = out_blockv(b);
    }
    done = true;
    for (std::size_t j = rest.size(); j-- > 0;) {
      if (++rest_digit[j] < dims[rest[j]]) {
        done = false;
        break;
      }
      rest_digit[j] = 0;
    }
  }
  state = std::move(out);
  return new_dims;
}

}  // namespace

Vector apply_plan(const CircuitPlan& plan, Vector state) {
  if (state.size() != plan.dim()) {
    throw std::invalid_argument("apply_plan: state dimension mismatch");
  }
  std::vector<int> dims = plan.init_dims;
  for (const auto& op : plan.ops) dims = apply_gate_vec(state, dims, op);
  return state;
}

Matrix plan_to_matrix(const CircuitPlan& plan) {
  std::int64_t d = plan.dim();
  Matrix m(d, d);
  for (std::int64_t c = 0; c < d; ++c) {
    Vector e = Vector::Zero(d);
    e(c) = 1.0;
    m.col(c) = apply_plan(plan, std::move(e));
  }
  return m;
}

int certify_layers(const CircuitPlan& plan) {
  std::vector<std::size_t> starts = plan.layer_starts;
  if (starts.empty() || starts.front() != 0) starts.insert(starts.begin(), 0);
  starts.push_back(plan.ops.size());
  int layers = 0;
  for (std::size_t li = 0; li + 1 < starts.size(); ++li) {
    if (starts[li] == starts[li + 1]) continue;
    std::set<int> used;
    for (std::size_t i = starts[li]; i < starts[li + 1]; ++i) {
      for (int s : plan.ops[i].slots) {
        if (!used.insert(s).second) {
          throw std::logic_error("layer has overlapping gate supports");
        }
      }
    }
    ++layers;
  }
  return layers;
}

}  // namespace klocal
