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

#ifndef QCOP_LINEAR_COVER_H_
#define QCOP_LINEAR_COVER_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qcop/model.h"

namespace qcop {

// Per-column state during search: kFree, or fixed to 0 / 1.
inline constexpr int8_t kFree = -1;
using Fixings = std::vector<int8_t>;

inline Fixings AllFree(int n) { return Fixings(n, kFree); }

struct LinearCoverResult {
  bool feasible = false;
  double value = std::numeric_limits<double>::infinity();
  BinaryPoint x;
  int64_t nodes = 0;
};

// Exact  min w.x  over {x binary : Dx >= 1, x agrees with fixings}.
// Free columns of non-positive weight are taken outright; the rest is a
// positive-weight cover solved by LP-bounded depth-first branch and bound.
LinearCoverResult SolveLinearCover(const CoverSystem& system,
                                   std::span<const double> weights,
                                   const Fixings& fixings);

// LP relaxation of the same problem; +infinity when infeasible.
// `x_out`, when given, receives the LP point.
double SolveLinearCoverRelaxed(const CoverSystem& system,
                               std::span<const double> weights,
                               const Fixings& fixings,
                               std::vector<double>* x_out = nullptr);

}  // namespace qcop

#endif  // QCOP_LINEAR_COVER_H_
