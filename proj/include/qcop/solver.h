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

#ifndef QCOP_SOLVER_H_
#define QCOP_SOLVER_H_

#include <cstdint>
#include <limits>
#include <string>

#include "qcop/model.h"

namespace qcop {

enum class BoundKind { kNone, kNlb, kLpLinearized };
enum class SolveMethod { kBruteForce, kGreedy, kBranchAndBound };

std::string ToString(BoundKind kind);
BoundKind ParseBoundKind(std::string_view name);
std::string ToString(SolveMethod method);

struct SolveReport {
  double optimal_value = std::numeric_limits<double>::infinity();
  BinaryPoint x;
  int64_t nodes = 0;
  SolveMethod method = SolveMethod::kBruteForce;
  BoundKind bound_kind = BoundKind::kNone;
  bool proven = false;
};

SolveReport BruteForceSolve(const QscpInstance& inst,
                            int cap = kDefaultEnumerationCap);

SolveReport GreedyUpper(const QscpInstance& inst);

inline constexpr int64_t kDefaultNodeCap = 5'000'000;

SolveReport BranchAndBound(const QscpInstance& inst,
                           BoundKind bound_kind = BoundKind::kNlb,
                           int64_t node_cap = kDefaultNodeCap);

// min over covers agreeing with `fixings` is at least this (sign bound on
// every term involving a free column).
double ElementaryBound(const Representation& rep, const std::vector<int8_t>& fixings);

}  // namespace qcop

#endif  // QCOP_SOLVER_H_
