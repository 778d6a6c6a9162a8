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

#include "klocal/margolus.hpp"

namespace klocal {

struct SchmidtTerm {
  double weight;  // singular value
  Matrix a;       // factor on the first subsystem
  Matrix b;       // factor on the second
};

/// Operator Schmidt decomposition of O on C^{da} (x) C^{db}:
/// O = sum_k weight_k * a_k (x) b_k with orthonormal factor families.
/// Terms below `cutoff` are dropped.
std::vector<SchmidtTerm> schmidt_operator_decompose(const Matrix& op, int da,
                                                    int db,
                                                    double cutoff = 1e-12);

/// || M - I (x) tr_first(M)/da ||_max: zero iff M acts trivially on the
/// first factor; analogous helper for the second factor.
double nontriviality_on_first(const Matrix& m, int da, int db);
double nontriviality_on_second(const Matrix& m, int da, int db);

/// || [Q_ring, s^(x)m] ||_max on a small ring (precondition of the symmetry
/// property of w).
double ring_symmetry_defect(const MargolusQCA& q, const Matrix& s, int m);

/// || [w, s (x) s] ||_max; small when q commutes with s^(x)N.
double w_symmetry_defect(const MargolusQCA& q, const Matrix& s);

/// Covariance of conjugation by w under a supersite-internal translation t:
/// max over a generating set of local O of
/// || w (t(x)t) O (t(x)t)^+ w^+ - (t(x)t) w O w^+ (t(x)t)^+ ||_max.
double w_translation_defect(const MargolusQCA& q, const Matrix& t);

}  // namespace klocal
