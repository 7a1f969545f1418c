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

#include "qcop/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcop/error.h"

namespace qcop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Columns: n structural, m surplus (-1 in its row), m artificial (+1).
class Tableau {
 public:
  Tableau(const LpProblem& p, const LpOptions& options)
      : m_(p.m), n_(p.n), cols_(p.n + 2 * p.m), options_(options),
        t_(static_cast<size_t>(m_) * cols_, 0.0), lb_(cols_, 0.0),
        ub_(cols_, kInf), value_(cols_, 0.0), basis_(m_), basic_row_(cols_, -1),
        cost_(cols_, 0.0), reduced_(cols_, 0.0) {
    for (int j = 0; j < n_; ++j) {
      lb_[j] = p.lower[j];
      ub_[j] = p.upper[j];
      value_[j] = lb_[j];
    }
    for (int i = 0; i < m_; ++i) {
      double residual = p.rhs[i];
      for (int j = 0; j < n_; ++j) residual -= p.a(i, j) * lb_[j];
      const int surplus = n_ + i;
      const int artificial = n_ + m_ + i;
      // Row i reads  A_i x - s_i + a_i = rhs_i.
      const double sign = residual <= 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) at(i, j) = sign * p.a(i, j);
      at(i, surplus) = -sign;
      at(i, artificial) = sign;
      if (residual <= 0.0) {
        basis_[i] = surplus;
        value_[surplus] = -residual;
        ub_[artificial] = 0.0;
      } else {
        basis_[i] = artificial;
        value_[artificial] = residual;
      }
      basic_row_[basis_[i]] = i;
    }
    degenerate_limit_ = 3 * (m_ + n_);
    iteration_limit_ = 50 * static_cast<int64_t>(m_ + n_);
  }

  // Minimizes the sum of artificials. Returns false on iteration limit.
  bool PhaseOne() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int i = 0; i < m_; ++i) cost_[n_ + m_ + i] = 1.0;
    return Run();
  }

  double Infeasibility() const {
    double s = 0.0;
    for (int i = 0; i < m_; ++i) s += value_[n_ + m_ + i];
    return s;
  }

  bool PhaseTwo(const std::vector<double>& objective) {
    for (int i = 0; i < m_; ++i) {
      const int artificial = n_ + m_ + i;
      ub_[artificial] = 0.0;
      value_[artificial] = std::min(value_[artificial], 0.0);
    }
    std::fill(cost_.begin(), cost_.end(), 0.0);
    std::copy(objective.begin(), objective.end(), cost_.begin());
    return Run();
  }

  std::vector<double> Structural() const {
    std::vector<double> x(value_.begin(), value_.begin() + n_);
    for (int j = 0; j < n_; ++j) x[j] = std::clamp(x[j], lb_[j], ub_[j]);
    return x;
  }

  int64_t iterations() const { return iterations_; }

 private:
  double& at(int i, int j) { return t_[static_cast<size_t>(i) * cols_ + j]; }

  void PriceAll() {
    for (int j = 0; j < cols_; ++j) {
      double d = cost_[j];
      for (int i = 0; i < m_; ++i) d -= cost_[basis_[i]] * at(i, j);
      reduced_[j] = d;
    }
  }

  bool Run() {
    PriceAll();
    while (true) {
      const bool bland = degenerate_pivots_ >= degenerate_limit_;
      int entering = -1;
      double direction = 0.0;
      double best = 0.0;
      for (int j = 0; j < cols_; ++j) {
        if (basic_row_[j] >= 0 || ub_[j] - lb_[j] <= 0.0) continue;
        const double d = reduced_[j];
        const bool at_lower = value_[j] <= lb_[j];
        double dir = 0.0;
        if (at_lower && d < -options_.optimality_tolerance) dir = 1.0;
        if (!at_lower && d > options_.optimality_tolerance) dir = -1.0;
        if (dir == 0.0) continue;
        if (bland) {
          entering = j;
          direction = dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = j;
          direction = dir;
        }
      }
      if (entering < 0) return true;
      if (iterations_ >= iteration_limit_) return false;
      ++iterations_;

      // Ratio test.
      double theta = ub_[entering] - lb_[entering];
      int leave_row = -1;
      double leave_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = at(i, entering);
        if (std::abs(alpha) <= options_.pivot_tolerance) continue;
        const int b = basis_[i];
        const double rate = -direction * alpha;
        double limit;
        if (rate < 0.0) {
          limit = (value_[b] - lb_[b]) / -rate;
        } else if (ub_[b] < kInf) {
          limit = (ub_[b] - value_[b]) / rate;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        bool take = limit < theta;
        if (!take && leave_row >= 0 && limit == theta) {
          take = bland ? b < basis_[leave_row]
                       : std::abs(alpha) > std::abs(leave_pivot);
        }
        if (take) {
          theta = limit;
          leave_row = i;
          leave_pivot = alpha;
        }
      }
      if (theta == kInf) {
        throw std::logic_error("simplex: unbounded direction on a bounded LP");
      }
      if (theta <= 1e-12) ++degenerate_pivots_;

      for (int i = 0; i < m_; ++i) {
        value_[basis_[i]] -= direction * at(i, entering) * theta;
      }
      value_[entering] += direction * theta;
      if (leave_row < 0) {
        // Bound flip; snap to the bound reached.
        value_[entering] = direction > 0 ? ub_[entering] : lb_[entering];
        continue;
      }
      const int leaving = basis_[leave_row];
      value_[leaving] = -direction * leave_pivot < 0.0 ? lb_[leaving] : ub_[leaving];
      Pivot(leave_row, entering);
    }
  }

  void Pivot(int r, int entering) {
    const int leaving = basis_[r];
    const double pivot = at(r, entering);
    double* prow = &t_[static_cast<size_t>(r) * cols_];
    for (int j = 0; j < cols_; ++j) prow[j] /= pivot;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[static_cast<size_t>(i) * cols_];
      const double f = row[entering];
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) row[j] -= f * prow[j];
      row[entering] = 0.0;
    }
    const double f = reduced_[entering];
    for (int j = 0; j < cols_; ++j) reduced_[j] -= f * prow[j];
    reduced_[entering] = 0.0;
    basic_row_[leaving] = -1;
    basic_row_[entering] = r;
    basis_[r] = entering;
  }

  int m_, n_, cols_;
  LpOptions options_;
  std::vector<double> t_;
  std::vector<double> lb_, ub_, value_;
  std::vector<int> basis_, basic_row_;
  std::vector<double> cost_, reduced_;
  int64_t iterations_ = 0;
  int64_t iteration_limit_ = 0;
  int degenerate_pivots_ = 0;
  int degenerate_limit_ = 0;
};

void ValidateProblem(const LpProblem& p) {
  const size_t n = p.n, m = p.m;
  if (p.objective.size() != n || p.rows.size() != m * n || p.rhs.size() != m ||
      p.lower.size() != n || p.upper.size() != n) {
    throw DimensionError("LpProblem arrays disagree with (m, n)");
  }
  for (int j = 0; j < p.n; ++j) {
    if (!std::isfinite(p.objective[j])) throw InvalidArgument("non-finite LP cost");
    if (!(p.lower[j] >= 0.0 && p.lower[j] <= p.upper[j] && p.upper[j] <= 1.0)) {
      throw InvalidArgument("LP bounds of x" + std::to_string(j + 1) +
                            " must satisfy 0 <= lo <= hi <= 1");
    }
  }
  for (double v : p.rows) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite LP coefficient");
  }
}

}  // namespace

LpProblem LpProblem::Covering(const CoverSystem& system,
                              std::vector<double> objective) {
  LpProblem p;
  p.m = system.m();
  p.n = system.n();
  if (static_cast<int>(objective.size()) != p.n) {
    throw DimensionError("objective length must equal column count");
  }
  p.objective = std::move(objective);
  p.rows.assign(system.values().begin(), system.values().end());
  p.rhs.assign(p.m, 1.0);
  p.lower.assign(p.n, 0.0);
  p.upper.assign(p.n, 1.0);
  return p;
}

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  ValidateProblem(problem);
  LpSolution sol;
  // A row no admissible x can satisfy, e.g. all of its columns fixed at 0.
  for (int i = 0; i < problem.m; ++i) {
    double reach = 0.0;
    for (int j = 0; j < problem.n; ++j) {
      const double a = problem.a(i, j);
      reach += std::max(a * problem.lower[j], a * problem.upper[j]);
    }
    if (reach < problem.rhs[i] - options.feasibility_tolerance) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
  }
  Tableau tableau(problem, options);
  if (!tableau.PhaseOne()) {
    sol.status = LpStatus::kIterLimit;
    sol.iterations = tableau.iterations();
    return sol;
  }
  if (tableau.Infeasibility() > options.feasibility_tolerance) {
    sol.status = LpStatus::kInfeasible;
    sol.iterations = tableau.iterations();
    return sol;
  }
  const bool done = tableau.PhaseTwo(problem.objective);
  sol.iterations = tableau.iterations();
  std::vector<double> x = tableau.Structural();
  double value = 0.0;
  for (int j = 0; j < problem.n; ++j) value += problem.objective[j] * x[j];
  sol.value = value;
  sol.x = RelaxedPoint(std::move(x));
  sol.status = done ? LpStatus::kOptimal : LpStatus::kIterLimit;
  return sol;
}

}  // namespace qcop
