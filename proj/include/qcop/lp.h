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

#ifndef QCOP_LP_H_
#define QCOP_LP_H_

#include <cstdint>
#include <vector>

#include "qcop/model.h"

namespace qcop {

// min c.x  s.t.  A x >= rhs,  lower <= x <= upper, with [lower, upper] a
// sub-interval of [0, 1]. A fixed variable has lower == upper.
struct LpProblem {
  int m = 0;
  int n = 0;
  std::vector<double> objective;  // n
  std::vector<double> rows;       // m*n, row-major
  std::vector<double> rhs;        // m
  std::vector<double> lower;      // n
  std::vector<double> upper;      // n

  // Rows of D with right-hand side 1 and bounds [0, 1].
  static LpProblem Covering(const CoverSystem& system,
                            std::vector<double> objective);
  void Fix(int j, double value) { lower[j] = upper[j] = value; }
  double a(int i, int j) const { return rows[static_cast<size_t>(i) * n + j]; }
};

enum class LpStatus { kOptimal, kInfeasible, kIterLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  // c.x of the returned point.
  double value = 0.0;
  RelaxedPoint x;
  int64_t iterations = 0;
};

struct LpOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
};

// Two-phase bounded-variable primal simplex on a dense tableau. Dantzig
// pricing switches to Bland's rule for good after 3(m+n) degenerate pivots;
// at most 50(m+n) iterations are made before kIterLimit is returned.
LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace qcop

#endif  // QCOP_LP_H_
