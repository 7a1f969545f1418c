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

#ifndef QCOP_BOUNDS_H_
#define QCOP_BOUNDS_H_

#include <string>
#include <vector>

#include "qcop/linear_cover.h"
#include "qcop/model.h"

namespace qcop {

enum class NlbVariant { kNlb, kNlbR, kNlbR1 };
enum class LcopSide { kRow, kCol };

std::string ToString(NlbVariant v);
NlbVariant ParseNlbVariant(std::string_view name);

// c_k + min of the k-th row (or column) of Q over covers with x_k = 1,
// or over the LP relaxation when `relaxed`. +infinity when no such cover
// exists.
double RestrictedLcop(const QscpInstance& inst, int k, LcopSide side,
                      bool relaxed);
double RestrictedLcop(const QscpInstance& inst, int k, LcopSide side,
                      bool relaxed, const Fixings& fixings);

struct NlbReport {
  std::vector<double> l;
  std::vector<double> m_vec;
  double alpha = 0.0;
  double beta = 0.0;
  double bound = 0.0;
  NlbVariant variant = NlbVariant::kNlb;
  int subproblems_solved = 0;  // inner plus outer
  int inner_lcops = 0;
  bool symmetric_shortcut = false;
  // False when the data is fractional and raw LP values replaced ceilings.
  bool ceiling_applied = false;
  int excluded_columns = 0;  // +infinity sentinels
};

struct NlbOptions {
  int threads = 1;
};

NlbReport NaturalLowerBound(const QscpInstance& inst, NlbVariant variant,
                            NlbOptions options = {});
// Bound restricted to covers agreeing with `fixings`; bound is +infinity
// when that family is empty.
NlbReport NaturalLowerBound(const QscpInstance& inst, NlbVariant variant,
                            const Fixings& fixings, NlbOptions options = {});

// Ceiling with a small slack for LP round-off.
double LpCeil(double v);

}  // namespace qcop

#endif  // QCOP_BOUNDS_H_
