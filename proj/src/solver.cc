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

#include "qcop/solver.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

#include "qcop/bounds.h"
#include "qcop/error.h"
#include "qcop/linear_cover.h"

namespace qcop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPruneSlack = 1e-9;

void RequireFeasible(const CoverSystem& system) {
  if (!system.feasible()) {
    throw Infeasible("row " + std::to_string(system.first_empty_row() + 1) +
                     " is not covered by any column");
  }
}

// Change in f when column j joins the selection.
double AddDelta(const Representation& rep, const std::vector<uint8_t>& x,
                int j) {
  const QMatrix& q = rep.q();
  double d = rep.c()[j] + q(j, j);
  for (int i = 0; i < rep.n(); ++i) {
    if (x[i] && i != j) d += q(i, j) + q(j, i);
  }
  return d;
}

class BranchAndBoundSearch {
 public:
  BranchAndBoundSearch(const QscpInstance& inst, BoundKind kind,
                       int64_t node_cap)
      : inst_(inst),
        rep_(inst.rep()),
        sys_(inst.system()),
        kind_(kind),
        node_cap_(node_cap),
        fix_(AllFree(inst.n())) {}

  SolveReport Run() {
    const SolveReport greedy = GreedyUpper(inst_);
    best_ = greedy.x;
    best_value_ = greedy.optimal_value;
    if (kind_ == BoundKind::kLpLinearized) PrepareLinearized();
    Node(0, -kInf);
    SolveReport r;
    r.x = best_;
    r.optimal_value = Evaluate(rep_, best_);
    r.nodes = nodes_;
    r.method = SolveMethod::kBranchAndBound;
    r.bound_kind = kind_;
    r.proven = !aborted_;
    return r;
  }

 private:
  void PrepareLinearized() {
    const int n = inst_.n();
    const bool ceil = rep_.IsIntegral();
    symmetric_ = rep_.q().IsSymmetric(0.0);
    row_coef_.resize(n);
    col_coef_.resize(n);
    for (int k = 0; k < n; ++k) {
      row_coef_[k] = RestrictedLcop(inst_, k, LcopSide::kRow, true);
      col_coef_[k] = symmetric_ ? row_coef_[k]
                                : RestrictedLcop(inst_, k, LcopSide::kCol, true);
      if (ceil) {
        row_coef_[k] = LpCeil(row_coef_[k]);
        col_coef_[k] = LpCeil(col_coef_[k]);
      }
    }
  }

  double LinearizedLp(const std::vector<double>& coef,
                      std::vector<double>* x) const {
    Fixings fix = fix_;
    std::vector<double> w(coef.size());
    for (size_t k = 0; k < coef.size(); ++k) {
      if (coef[k] == kInf) {
        if (fix[k] == 1) return kInf;
        fix[k] = 0;
      } else {
        w[k] = coef[k];
      }
    }
    return SolveLinearCoverRelaxed(sys_, w, fix, x);
  }

  bool Coverable() const {
    for (int i = 0; i < sys_.m(); ++i) {
      bool ok = false;
      for (int j : sys_.RowCover(i)) ok |= fix_[j] != 0;
      if (!ok) return false;
    }
    return true;
  }

  void Node(int depth, double inherited) {
    if (aborted_) return;
    if (nodes_ >= node_cap_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (!Coverable()) return;
    const int n = inst_.n(), m = sys_.m();

    double bound = std::max(inherited, ElementaryBound(rep_, fix_));
    double carried = inherited;
    std::vector<double> lp_x;
    if (kind_ == BoundKind::kNlb && depth <= 2 && bound < best_value_ - kPruneSlack) {
      carried = std::max(
          carried, NaturalLowerBound(inst_, NlbVariant::kNlbR, fix_).bound);
    } else if (kind_ == BoundKind::kLpLinearized &&
               bound < best_value_ - kPruneSlack) {
      double lb = LinearizedLp(row_coef_, &lp_x);
      if (!symmetric_ && lb != kInf) lb = std::max(lb, LinearizedLp(col_coef_, nullptr));
      carried = std::max(carried, lb);
    }
    bound = std::max(bound, carried);
    if (bound >= best_value_ - kPruneSlack) return;

    std::vector<uint8_t> x(n);
    for (int j = 0; j < n; ++j) x[j] = fix_[j] == 1;
    std::vector<uint8_t> covered(m, 0);
    bool all = true;
    for (int i = 0; i < m; ++i) {
      for (int j : sys_.RowCover(i)) covered[i] |= x[j];
      all &= covered[i] != 0;
    }
    if (all) {
      BinaryPoint p(x);
      const double v = Evaluate(rep_, p);
      if (v < best_value_) {
        best_value_ = v;
        best_ = std::move(p);
      }
    }

    int branch = -1;
    if (!lp_x.empty()) {
      double frac = 1e-9;
      for (int j = 0; j < n; ++j) {
        if (fix_[j] != kFree) continue;
        const double f = std::min(lp_x[j], 1.0 - lp_x[j]);
        if (f > frac) {
          frac = f;
          branch = j;
        }
      }
    }
    if (branch < 0) {
      int most = 0;
      for (int j = 0; j < n; ++j) {
        if (fix_[j] != kFree) continue;
        int gain = 0;
        for (int i : sys_.ColumnRows(j)) gain += !covered[i];
        if (branch < 0 || gain > most) {
          branch = j;
          most = gain;
        }
      }
    }
    if (branch < 0) return;
    for (int8_t v : {int8_t{1}, int8_t{0}}) {
      fix_[branch] = v;
      Node(depth + 1, carried);
    }
    fix_[branch] = kFree;
  }

  const QscpInstance& inst_;
  const Representation& rep_;
  const CoverSystem& sys_;
  BoundKind kind_;
  int64_t node_cap_;
  Fixings fix_;
  std::vector<double> row_coef_, col_coef_;
  bool symmetric_ = false;
  BinaryPoint best_;
  double best_value_ = kInf;
  int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::string ToString(BoundKind kind) {
  switch (kind) {
    case BoundKind::kNone:
      return "none";
    case BoundKind::kNlb:
      return "nlb";
    case BoundKind::kLpLinearized:
      return "lp";
  }
  return "?";
}

BoundKind ParseBoundKind(std::string_view name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s == "none") return BoundKind::kNone;
  if (s == "nlb") return BoundKind::kNlb;
  if (s == "lp") return BoundKind::kLpLinearized;
  throw InvalidArgument("unknown bound kind '" + std::string(name) + "'");
}

std::string ToString(SolveMethod method) {
  switch (method) {
    case SolveMethod::kBruteForce:
      return "brute";
    case SolveMethod::kGreedy:
      return "greedy";
    case SolveMethod::kBranchAndBound:
      return "bb";
  }
  return "?";
}

double ElementaryBound(const Representation& rep,
                       const std::vector<int8_t>& fixings) {
  const int n = rep.n();
  const QMatrix& q = rep.q();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (fixings[i] != 1) continue;
    total += rep.c()[i];
    for (int j = 0; j < n; ++j) {
      if (fixings[j] == 1) total += q(i, j);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (fixings[j] != kFree) continue;
    double a = rep.c()[j] + q(j, j);
    for (int i = 0; i < n; ++i) {
      if (fixings[i] == 1) a += q(i, j) + q(j, i);
    }
    total += std::min(0.0, a);
    for (int i = j + 1; i < n; ++i) {
      if (fixings[i] == kFree) total += std::min(0.0, q(i, j) + q(j, i));
    }
  }
  return total;
}

SolveReport BruteForceSolve(const QscpInstance& inst, int cap) {
  RequireFeasible(inst.system());
  if (inst.n() > cap) {
    throw LimitExceeded("brute force limited to n <= " + std::to_string(cap));
  }
  const Representation& rep = inst.rep();
  const QMatrix& q = rep.q();
  SolveReport r;
  r.method = SolveMethod::kBruteForce;
  std::vector<int> support;
  ForEachFeasible(
      inst.system(),
      [&](const BinaryPoint& x) {
        ++r.nodes;
        support.clear();
        for (int j = 0; j < x.n(); ++j) {
          if (x[j]) support.push_back(j);
        }
        double v = 0.0;
        for (int i : support) {
          v += rep.c()[i];
          for (int j : support) v += q(i, j);
        }
        if (v < r.optimal_value) {
          r.optimal_value = v;
          r.x = x;
        }
      },
      cap);
  r.optimal_value = Evaluate(rep, r.x);
  r.proven = true;
  return r;
}

SolveReport GreedyUpper(const QscpInstance& inst) {
  const CoverSystem& sys = inst.system();
  RequireFeasible(sys);
  const Representation& rep = inst.rep();
  const int n = inst.n(), m = sys.m();
  std::vector<uint8_t> x(n, 0);
  std::vector<int> cover_count(m, 0);
  int uncovered = m;
  while (uncovered > 0) {
    int pick = -1;
    double best = kInf;
    for (int j = 0; j < n; ++j) {
      if (x[j]) continue;
      int gain = 0;
      for (int i : sys.ColumnRows(j)) gain += cover_count[i] == 0;
      if (gain == 0) continue;
      const double ratio = AddDelta(rep, x, j) / gain;
      if (ratio < best) {
        best = ratio;
        pick = j;
      }
    }
    x[pick] = 1;
    for (int i : sys.ColumnRows(pick)) {
      if (cover_count[i]++ == 0) --uncovered;
    }
  }
  // Local improvement: best strictly improving single add or drop.
  for (;;) {
    int move = -1;
    double gain = -1e-9;
    for (int j = 0; j < n; ++j) {
      double delta;
      if (x[j]) {
        bool needed = false;
        for (int i : sys.ColumnRows(j)) needed |= cover_count[i] == 1;
        if (needed) continue;
        x[j] = 0;
        delta = -AddDelta(rep, x, j);
        x[j] = 1;
      } else {
        delta = AddDelta(rep, x, j);
      }
      if (delta < gain) {
        gain = delta;
        move = j;
      }
    }
    if (move < 0) break;
    const int step = x[move] ? -1 : 1;
    x[move] = !x[move];
    for (int i : sys.ColumnRows(move)) cover_count[i] += step;
  }
  SolveReport r;
  r.x = BinaryPoint(std::move(x));
  r.optimal_value = Evaluate(rep, r.x);
  r.method = SolveMethod::kGreedy;
  r.proven = false;
  return r;
}

SolveReport BranchAndBound(const QscpInstance& inst, BoundKind bound_kind,
                           int64_t node_cap) {
  RequireFeasible(inst.system());
  if (node_cap < 1) throw InvalidArgument("node cap must be positive");
  return BranchAndBoundSearch(inst, bound_kind, node_cap).Run();
}

}  // namespace qcop
