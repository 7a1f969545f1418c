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

#include "qcop/linalg.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcop/error.h"

namespace qcop {

std::vector<double> SymmetricEigenvalues(const QMatrix& q) {
  if (!q.IsSymmetric()) {
    throw InvalidArgument("eigenvalues requested for a non-symmetric matrix");
  }
  const int n = q.n();
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      a(q.values().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue iteration failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  return std::vector<double>(ev.data(), ev.data() + n);
}

PsdCheck CheckPositiveSemidefinite(const QMatrix& a, double tol) {
  const int n = a.n();
  // Work on the symmetric part: x'Ax only sees it.
  std::vector<double> s(static_cast<size_t>(n) * n);
  auto sym = [&](int i, int j) -> double& { return s[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (a(i, j) + a(j, i));
  }
  const std::vector<double> original = s;

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // Column k of L stored in l[k * n + row] (rows in original indexing).
  std::vector<double> l;
  PsdCheck result;
  int k = 0;
  for (; k < n; ++k) {
    int best = k;
    for (int t = k + 1; t < n; ++t) {
      if (sym(perm[t], perm[t]) > sym(perm[best], perm[best])) best = t;
    }
    std::swap(perm[k], perm[best]);
    const int p = perm[k];
    const double pivot = sym(p, p);
    if (pivot <= tol) break;
    const double root = std::sqrt(pivot);
    std::vector<double> col(n, 0.0);
    col[p] = root;
    for (int t = k + 1; t < n; ++t) col[perm[t]] = sym(perm[t], p) / root;
    for (int t = k + 1; t < n; ++t) {
      for (int u = k + 1; u < n; ++u) {
        sym(perm[t], perm[u]) -= col[perm[t]] * col[perm[u]];
      }
    }
    l.insert(l.end(), col.begin(), col.end());
  }
  result.rank = k;
  // Remaining Schur complement must vanish (within tol) for PSD.
  bool ok = true;
  for (int t = k; t < n && ok; ++t) {
    for (int u = k; u < n; ++u) {
      if (std::abs(sym(perm[t], perm[u])) > tol) {
        ok = false;
        break;
      }
    }
  }
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int c = 0; c < result.rank; ++c) {
        v += l[static_cast<size_t>(c) * n + i] * l[static_cast<size_t>(c) * n + j];
      }
      residual = std::max(residual,
                          std::abs(original[static_cast<size_t>(i) * n + j] - v));
    }
  }
  result.residual = residual;
  result.psd = ok && residual <= tol;
  return result;
}

}  // namespace qcop
