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

#include "qcop/linear_cover.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcop/error.h"
#include "qcop/lp.h"

namespace qcop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIntegralityTol = 1e-9;

void CheckArgs(const CoverSystem& system, std::span<const double> weights,
               const Fixings& fixings) {
  if (static_cast<int>(weights.size()) != system.n() ||
      static_cast<int>(fixings.size()) != system.n()) {
    throw DimensionError("weights and fixings must have one entry per column");
  }
}

LpProblem BuildLp(const CoverSystem& system, std::span<const double> weights,
                  const Fixings& fixings) {
  LpProblem p = LpProblem::Covering(
      system, std::vector<double>(weights.begin(), weights.end()));
  for (int j = 0; j < system.n(); ++j) {
    if (fixings[j] != kFree) p.Fix(j, fixings[j]);
  }
  return p;
}

// Positive-weight residual cover: rows not yet covered, candidate columns.
class ResidualSearch {
 public:
  ResidualSearch(const CoverSystem& system, std::span<const double> weights,
                 std::vector<int> rows, std::vector<int> cols)
      : weights_(weights), rows_(std::move(rows)), cols_(std::move(cols)) {
    const int m = static_cast<int>(rows_.size());
    const int n = static_cast<int>(cols_.size());
    std::vector<uint8_t> d(static_cast<size_t>(m) * n, 0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) {
        d[static_cast<size_t>(r) * n + c] = system.d(rows_[r], cols_[c]);
      }
    }
    sub_ = CoverSystem(m, n, std::move(d));
    sub_weights_.resize(n);
    integral_ = true;
    for (int c = 0; c < n; ++c) {
      sub_weights_[c] = weights_[cols_[c]];
      integral_ &= sub_weights_[c] == std::floor(sub_weights_[c]);
    }
  }

  // Returns chosen residual columns (indices into cols_) or empty on failure.
  bool Solve(std::vector<int>* chosen, double* value, int64_t* nodes) {
    const int n = sub_.n();
    Greedy();
    Fixings fix = AllFree(n);
    Search(fix);
    *nodes = nodes_;
    if (best_value_ == kInf) return false;
    chosen->clear();
    for (int c = 0; c < n; ++c) {
      if (best_[c]) chosen->push_back(c);
    }
    *value = best_value_;
    return true;
  }

 private:
  double Cost(const std::vector<uint8_t>& x) const {
    double v = 0.0;
    for (size_t c = 0; c < x.size(); ++c) {
      if (x[c]) v += sub_weights_[c];
    }
    return v;
  }

  void Offer(const std::vector<uint8_t>& x) {
    const double v = Cost(x);
    if (v < best_value_) {
      best_value_ = v;
      best_ = x;
    }
  }

  // Cheapest weight per newly covered row.
  void Greedy() {
    const int m = sub_.m(), n = sub_.n();
    std::vector<uint8_t> covered(m, 0), x(n, 0);
    int remaining = m;
    while (remaining > 0) {
      int pick = -1;
      double best = kInf;
      for (int c = 0; c < n; ++c) {
        if (x[c]) continue;
        int gain = 0;
        for (int r : sub_.ColumnRows(c)) gain += !covered[r];
        if (gain == 0) continue;
        const double ratio = sub_weights_[c] / gain;
        if (ratio < best) {
          best = ratio;
          pick = c;
        }
      }
      if (pick < 0) return;
      x[pick] = 1;
      for (int r : sub_.ColumnRows(pick)) {
        if (!covered[r]) {
          covered[r] = 1;
          --remaining;
        }
      }
    }
    Offer(x);
  }

  void Search(Fixings& fix) {
    ++nodes_;
    std::vector<double> lp_x;
    const double lp = SolveLinearCoverRelaxed(sub_, sub_weights_, fix, &lp_x);
    if (lp == kInf) return;
    double bound = lp;
    if (integral_) bound = std::ceil(lp - 1e-7);
    if (bound >= best_value_ - 1e-9) return;
    int branch = -1;
    double frac = 0.0;
    const int n = sub_.n();
    if (lp_x.empty()) {
      // LP hit its iteration cap; branch on the first free column.
      for (int c = 0; c < n && branch < 0; ++c) {
        if (fix[c] == kFree) branch = c;
      }
      if (branch < 0) {
        std::vector<uint8_t> x(n);
        for (int c = 0; c < n; ++c) x[c] = fix[c] == 1;
        if (IsFeasible(sub_, BinaryPoint(x))) Offer(x);
        return;
      }
    } else {
      for (int c = 0; c < n; ++c) {
        const double f = std::min(lp_x[c], 1.0 - lp_x[c]);
        if (f > kIntegralityTol && f > frac) {
          frac = f;
          branch = c;
        }
      }
      if (branch < 0) {
        std::vector<uint8_t> x(n);
        for (int c = 0; c < n; ++c) x[c] = lp_x[c] > 0.5;
        Offer(x);
        return;
      }
    }
    for (int8_t v : {int8_t{1}, int8_t{0}}) {
      fix[branch] = v;
      Search(fix);
    }
    fix[branch] = kFree;
  }

  std::span<const double> weights_;
  std::vector<int> rows_, cols_;
  CoverSystem sub_;
  std::vector<double> sub_weights_;
  bool integral_ = true;
  std::vector<uint8_t> best_;
  double best_value_ = kInf;
  int64_t nodes_ = 0;
};

}  // namespace

double SolveLinearCoverRelaxed(const CoverSystem& system,
                               std::span<const double> weights,
                               const Fixings& fixings,
                               std::vector<double>* x_out) {
  CheckArgs(system, weights, fixings);
  const LpSolution s = SolveLp(BuildLp(system, weights, fixings));
  if (x_out) x_out->clear();
  if (s.status == LpStatus::kInfeasible) return kInf;
  if (s.status == LpStatus::kIterLimit) {
    throw Error("LP iteration limit reached in covering relaxation");
  }
  if (x_out) *x_out = s.x.values();
  return s.value;
}

LinearCoverResult SolveLinearCover(const CoverSystem& system,
                                   std::span<const double> weights,
                                   const Fixings& fixings) {
  CheckArgs(system, weights, fixings);
  const int n = system.n(), m = system.m();
  LinearCoverResult result;
  std::vector<uint8_t> x(n, 0);
  for (int j = 0; j < n; ++j) {
    if (fixings[j] == 1 || (fixings[j] == kFree && weights[j] <= 0.0)) x[j] = 1;
  }
  std::vector<int> rows;
  for (int i = 0; i < m; ++i) {
    bool covered = false;
    for (int j : system.RowCover(i)) covered |= x[j] != 0;
    if (!covered) rows.push_back(i);
  }
  std::vector<int> cols;
  for (int j = 0; j < n; ++j) {
    if (fixings[j] == kFree && !x[j]) cols.push_back(j);
  }
  if (!rows.empty()) {
    std::vector<uint8_t> usable(n, 0);
    for (int j : cols) usable[j] = 1;
    for (int i : rows) {
      bool any = false;
      for (int j : system.RowCover(i)) any |= usable[j] != 0;
      if (!any) return result;  // infeasible
    }
    ResidualSearch search(system, weights, rows, cols);
    std::vector<int> chosen;
    double residual_value = 0.0;
    if (!search.Solve(&chosen, &residual_value, &result.nodes)) return result;
    for (int c : chosen) x[cols[c]] = 1;
  }
  result.feasible = true;
  result.x = BinaryPoint(std::move(x));
  double value = 0.0;
  for (int j = 0; j < n; ++j) {
    if (result.x[j]) value += weights[j];
  }
  result.value = value;
  return result;
}

}  // namespace qcop
