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

#include "qcop/bounds.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <limits>

#include "qcop/error.h"

namespace qcop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> SideWeights(const QMatrix& q, int k, LcopSide side) {
  const int n = q.n();
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = side == LcopSide::kRow ? q(k, j) : q(j, k);
  return w;
}

// Outer problem: min sum coef_k x_k over the (relaxed) family; sentinel
// columns are forced out.
double Outer(const CoverSystem& system, const std::vector<double>& coef,
             Fixings fixings, bool relaxed) {
  std::vector<double> w(coef.size());
  for (size_t k = 0; k < coef.size(); ++k) {
    if (coef[k] == kInf) {
      if (fixings[k] == 1) return kInf;
      fixings[k] = 0;
      w[k] = 0.0;
    } else {
      w[k] = coef[k];
    }
  }
  if (relaxed) return SolveLinearCoverRelaxed(system, w, fixings);
  return SolveLinearCover(system, w, fixings).value;
}

}  // namespace

std::string ToString(NlbVariant v) {
  switch (v) {
    case NlbVariant::kNlb:
      return "NLB";
    case NlbVariant::kNlbR:
      return "NLB_R";
    case NlbVariant::kNlbR1:
      return "NLB_R1";
  }
  return "?";
}

NlbVariant ParseNlbVariant(std::string_view name) {
  std::string s;
  for (char ch : name) {
    if (ch != '_') s.push_back(static_cast<char>(std::tolower(ch)));
  }
  if (s == "nlb") return NlbVariant::kNlb;
  if (s == "nlbr") return NlbVariant::kNlbR;
  if (s == "nlbr1") return NlbVariant::kNlbR1;
  throw InvalidArgument("unknown bound variant '" + std::string(name) + "'");
}

double LpCeil(double v) {
  if (!std::isfinite(v)) return v;
  return std::ceil(v - 1e-7);
}

double RestrictedLcop(const QscpInstance& inst, int k, LcopSide side,
                      bool relaxed) {
  return RestrictedLcop(inst, k, side, relaxed, AllFree(inst.n()));
}

double RestrictedLcop(const QscpInstance& inst, int k, LcopSide side,
                      bool relaxed, const Fixings& fixings) {
  const int n = inst.n();
  if (k < 0 || k >= n) throw InvalidArgument("column index out of range");
  if (static_cast<int>(fixings.size()) != n) {
    throw DimensionError("fixings must have one entry per column");
  }
  if (fixings[k] == 0) return kInf;
  Fixings fix = fixings;
  fix[k] = 1;
  const std::vector<double> w = SideWeights(inst.rep().q(), k, side);
  const double v = relaxed ? SolveLinearCoverRelaxed(inst.system(), w, fix)
                           : SolveLinearCover(inst.system(), w, fix).value;
  return v == kInf ? kInf : inst.rep().c()[k] + v;
}

NlbReport NaturalLowerBound(const QscpInstance& inst, NlbVariant variant,
                            NlbOptions options) {
  if (!inst.system().feasible()) {
    throw Infeasible("row " + std::to_string(inst.system().first_empty_row() + 1) +
                     " is not covered by any column");
  }
  return NaturalLowerBound(inst, variant, AllFree(inst.n()), options);
}

NlbReport NaturalLowerBound(const QscpInstance& inst, NlbVariant variant,
                            const Fixings& fixings, NlbOptions options) {
  const int n = inst.n();
  if (static_cast<int>(fixings.size()) != n) {
    throw DimensionError("fixings must have one entry per column");
  }
  NlbReport r;
  r.variant = variant;
  const bool inner_relaxed = variant != NlbVariant::kNlb;
  const bool outer_relaxed = variant == NlbVariant::kNlbR;
  r.symmetric_shortcut = inst.rep().q().IsSymmetric(0.0);
  r.ceiling_applied = inner_relaxed && inst.rep().IsIntegral();

  struct Task {
    int k;
    LcopSide side;
  };
  std::vector<Task> tasks;
  for (int k = 0; k < n; ++k) tasks.push_back({k, LcopSide::kRow});
  if (!r.symmetric_shortcut) {
    for (int k = 0; k < n; ++k) tasks.push_back({k, LcopSide::kCol});
  }
  std::vector<double> values(tasks.size());
  auto run = [&](size_t t) {
    values[t] = RestrictedLcop(inst, tasks[t].k, tasks[t].side, inner_relaxed,
                               fixings);
    if (r.ceiling_applied) values[t] = LpCeil(values[t]);
  };
  if (options.threads > 1) {
    const size_t width = static_cast<size_t>(options.threads);
    for (size_t start = 0; start < tasks.size(); start += width) {
      std::vector<std::future<void>> batch;
      for (size_t t = start; t < std::min(tasks.size(), start + width); ++t) {
        batch.push_back(std::async(std::launch::async, run, t));
      }
      for (auto& f : batch) f.get();
    }
  } else {
    for (size_t t = 0; t < tasks.size(); ++t) run(t);
  }
  r.inner_lcops = static_cast<int>(tasks.size());
  r.l.assign(values.begin(), values.begin() + n);
  r.m_vec = r.symmetric_shortcut
                ? r.l
                : std::vector<double>(values.begin() + n, values.end());
  for (int k = 0; k < n; ++k) {
    if (r.l[k] == kInf || r.m_vec[k] == kInf) ++r.excluded_columns;
  }

  r.alpha = Outer(inst.system(), r.l, fixings, outer_relaxed);
  if (r.symmetric_shortcut) {
    r.beta = r.alpha;
    r.subproblems_solved = r.inner_lcops + 1;
  } else {
    r.beta = Outer(inst.system(), r.m_vec, fixings, outer_relaxed);
    r.subproblems_solved = r.inner_lcops + 2;
  }
  r.bound = std::max(r.alpha, r.beta);
  return r;
}

}  // namespace qcop
