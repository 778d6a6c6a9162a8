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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klocal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Exchange map C^m (x) C^n -> C^n (x) C^m as a permutation matrix.
Matrix factor_exchange(int m, int n);

Matrix kron(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& m, double tol = 1e-10);

/// Deterministic Haar-ish random unitary: QR of a seeded Gaussian matrix.
Matrix random_unitary(int dim, std::uint64_t seed);

/// max_ij |a_ij - e^{i theta} b_ij| with the phase fixed on b's largest
/// entry. Zero iff a and b agree up to a global phase.
double phase_aligned_max_diff(const Matrix& a, const Matrix& b);

/// A register of sites with per-site dimensions that can change as gates
/// are applied (a gate may output different factor dimensions than it
/// consumed, which is how the two-layer normal form threads its internal
/// l- and r-dimensional legs through the chain).
class SiteRegister {
 public:
  explicit SiteRegister(std::vector<int> dims);

  int n_sites() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::int64_t total_dim() const;

  /// Basis index <-> digits, site 0 is the most significant factor.
  std::int64_t index_of(const std::vector<int>& digits) const;

 private:
  std::vector<int> dims_;
};

/// One gate of a plan: `matrix` maps the tensor product of the current
/// dimensions at `slots` (in slot order) to the product of `out_dims`.
struct GateOp {
  Matrix matrix;
  std::vector<int> slots;
  std::vector<int> out_dims;
};

/// An ordered gate list on a fixed set of sites. Gates apply left-to-right
/// (ops[0] first). Layer boundaries are recorded for depth certificates.
struct CircuitPlan {
  std::vector<int> init_dims;
  std::vector<GateOp> ops;
  std::vector<std::size_t> layer_starts;  // index into ops where a layer begins

  std::int64_t dim() const;
  void append(const CircuitPlan& other);
};

/// Apply the plan to a state vector (dimension must equal plan.dim()).
Vector apply_plan(const CircuitPlan& plan, Vector state);

/// Materialise the plan as a dense matrix. Only sensible for small dims.
Matrix plan_to_matrix(const CircuitPlan& plan);

/// Supports within each layer must be pairwise disjoint; throws otherwise.
/// Returns the number of layers.
int certify_layers(const CircuitPlan& plan);

}  // namespace klocal
