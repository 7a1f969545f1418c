// Copyright 2026 The qcop Authors
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

#ifndef QCOP_LINALG_H_
#define QCOP_LINALG_H_

#include <vector>

#include "qcop/matrix.h"

namespace qcop {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
// Stops when the off-diagonal Frobenius norm drops below 1e-10 or after 500
// sweeps. Throws InvalidArgument for non-symmetric input.
std::vector<double> SymmetricEigenvalues(const QMatrix& q);

struct PsdCheck {
  bool psd = false;
  // max |A - L L'| over the computed partial factor.
  double residual = 0.0;
  // Rank of the partial factor.
  int rank = 0;
};

// Diagonally pivoted Cholesky on the symmetric part of `a`. The matrix is
// declared PSD when elimination stops with every remaining pivot >= -tol and
// every remaining Schur complement entry within tol of zero, and the factor
// reproduces the accepted block within tol.
PsdCheck CheckPositiveSemidefinite(const QMatrix& a, double tol = 1e-8);

}  // namespace qcop

#endif  // QCOP_LINALG_H_
