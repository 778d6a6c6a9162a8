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

#include "klocal/schmidt.hpp"

#include <Eigen/SVD>

namespace klocal {

std::vector<SchmidtTerm> schmidt_operator_decompose(const Matrix& op, int da,
                                                    int db, double cutoff) {
  if (op.rows() != da * db || op.cols() != da * db) {
    throw std::invalid_argument("schmidt: operator/partition mismatch");
  }
  // Rearrange O[(a,b),(a',b')] into R[(a,a'),(b,b')] and SVD.
  Matrix r(da * da, db * db);
  for (int a = 0; a < da; ++a) {
    for (int ap = 0; ap < da; ++ap) {
      for (int bb = 0; bb < db; ++bb) {
        for (int bp = 0; bp < db; ++bp) {
          r(a * da + ap, bb * db + bp) = op(a * db + bb, ap * db + bp);
        }
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  std::vector<SchmidtTerm> terms;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    double s = svd.singularValues()(k);
    if (s < cutoff) continue;
    SchmidtTerm t;
    t.weight = s;
    t.a = Matrix(da, da);
    t.b = Matrix(db, db);
    for (int a = 0; a < da; ++a) {
      for (int ap = 0; ap < da; ++ap) t.a(a, ap) = svd.matrixU()(a * da + ap, k);
    }
    for (int bb = 0; bb < db; ++bb) {
      for (int bp = 0; bp < db; ++bp) {
        t.b(bb, bp) = std::conj(svd.matrixV()(bb * db + bp, k));
      }
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

double nontriviality_on_first(const Matrix& m, int da, int db) {
  Matrix tr = Matrix::Zero(db, db);
  for (int a = 0; a < da; ++a) {
    for (int bb = 0; bb < db; ++bb) {
      for (int bp = 0; bp < db; ++bp) tr(bb, bp) += m(a * db + bb, a * db + bp);
    }
  }
  tr /= static_cast<double>(da);
  Matrix rebuilt = kron(Matrix::Identity(da, da), tr);
  return (m - rebuilt).cwiseAbs().maxCoeff();
}

double nontriviality_on_second(const Matrix& m, int da, int db) {
  Matrix tr = Matrix::Zero(da, da);
  for (int a = 0; a < da; ++a) {
    for (int ap = 0; ap < da; ++ap) {
      for (int bb = 0; bb < db; ++bb) tr(a, ap) += m(a * db + bb, ap * db + bb);
    }
  }
  tr /= static_cast<double>(db);
  Matrix rebuilt = kron(tr, Matrix::Identity(db, db));
  return (m - rebuilt).cwiseAbs().maxCoeff();
}

double ring_symmetry_defect(const MargolusQCA& q, const Matrix& s, int m) {
  Matrix ring = plan_to_matrix(plan_margolus_ring(q, m));
  Matrix sym = Matrix::Identity(1, 1);
  for (int i = 0; i < m; ++i) sym = kron(sym, s);
  return (ring * sym - sym * ring).cwiseAbs().maxCoeff();
}

double w_symmetry_defect(const MargolusQCA& q, const Matrix& s) {
  Matrix w = build_w(q);
  Matrix ss = kron(s, s);
  return (w * ss - ss * w).cwiseAbs().maxCoeff();
}

double w_translation_defect(const MargolusQCA& q, const Matrix& t) {
  Matrix w = build_w(q);
  Matrix tt = kron(t, t);
  const int d = q.d;
  double worst = 0.0;
  // Generating set: all matrix units on either supersite of the pair.
  for (int site = 0; site < 2; ++site) {
    for (int a = 0; a < d; ++a) {
      for (int bb = 0; bb < d; ++bb) {
        Matrix unit = Matrix::Zero(d, d);
        unit(a, bb) = 1.0;
        Matrix o = site == 0 ? kron(unit, Matrix::Identity(d, d))
                             : kron(Matrix::Identity(d, d), unit);
        Matrix lhs = w * tt * o * tt.adjoint() * w.adjoint();
        Matrix rhs = tt * w * o * w.adjoint() * tt.adjoint();
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

}  // namespace klocal
