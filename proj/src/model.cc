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

#include "qcop/model.h"

#include <cstdint>
#include <string>

#include "qcop/error.h"

namespace qcop {
namespace {

constexpr const char* kKindNames[] = {"ORG", "SYM", "CNX", "CNV", "UT", "SYMI"};

void CheckDims(int expected, int actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(expected) + ", got " +
                         std::to_string(actual));
  }
}

}  // namespace

std::string ReprTag::ToString() const {
  if (kind == ReprKind::kCustom) return label;
  return kKindNames[static_cast<int>(kind)];
}

ReprTag ReprTag::Parse(std::string_view name) {
  for (int k = 0; k < 6; ++k) {
    if (name == kKindNames[k]) return {static_cast<ReprKind>(k), ""};
  }
  return Custom(std::string(name));
}

Representation::Representation(QMatrix q, LinearCost c, ReprTag tag)
    : q_(std::move(q)), c_(std::move(c)), tag_(std::move(tag)) {
  CheckDims(q_.n(), c_.n(), "Representation linear cost");
  if (tag_.kind == ReprKind::kSym && !q_.IsSymmetric()) {
    throw InvalidArgument("SYM representation requires a symmetric matrix");
  }
  if (tag_.kind == ReprKind::kUt && !q_.IsStrictlyUpperTriangular()) {
    throw InvalidArgument(
        "UT representation requires a strictly upper triangular matrix");
  }
}

BinaryPoint::BinaryPoint(std::vector<uint8_t> x) : x_(std::move(x)) {
  for (uint8_t v : x_) {
    if (v > 1) throw InvalidArgument("binary point entries must be 0 or 1");
  }
}

BinaryPoint BinaryPoint::FromString(std::string_view bits) {
  std::vector<uint8_t> x;
  x.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw InvalidArgument("binary point string must contain only 0/1");
    }
    x.push_back(ch == '1');
  }
  return BinaryPoint(std::move(x));
}

std::vector<int> BinaryPoint::Support() const {
  std::vector<int> s;
  for (int j = 0; j < n(); ++j) {
    if (x_[j]) s.push_back(j);
  }
  return s;
}

std::string BinaryPoint::ToString() const {
  std::string s;
  s.reserve(x_.size());
  for (uint8_t v : x_) s.push_back(v ? '1' : '0');
  return s;
}

RelaxedPoint::RelaxedPoint(std::vector<double> x) : x_(std::move(x)) {
  for (double v : x_) {
    if (!(v >= -kRelaxedTolerance && v <= 1.0 + kRelaxedTolerance)) {
      throw InvalidArgument("relaxed point coordinate " + std::to_string(v) +
                            " outside [0,1]");
    }
  }
}

RelaxedPoint::RelaxedPoint(const BinaryPoint& x)
    : x_(x.values().begin(), x.values().end()) {}

CoverSystem::CoverSystem(int m, int n, std::vector<uint8_t> d)
    : m_(m), n_(n), d_(std::move(d)) {
  if (m < 0 || n < 0 || d_.size() != static_cast<size_t>(m) * n) {
    throw DimensionError("CoverSystem expects m*n entries");
  }
  row_cover_.resize(m);
  column_rows_.resize(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const uint8_t v = d_[static_cast<size_t>(i) * n + j];
      if (v > 1) throw InvalidArgument("CoverSystem entries must be 0 or 1");
      if (v) {
        row_cover_[i].push_back(j);
        column_rows_[j].push_back(i);
      }
    }
    if (row_cover_[i].empty() && first_empty_row_ < 0) first_empty_row_ = i;
  }
}

CoverSystem CoverSystem::FromRows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<uint8_t> d;
  d.reserve(static_cast<size_t>(m) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("CoverSystem rows must share one length");
    }
    for (int v : row) {
      if (v != 0 && v != 1) {
        throw InvalidArgument("CoverSystem entries must be 0 or 1");
      }
      d.push_back(static_cast<uint8_t>(v));
    }
  }
  return CoverSystem(m, n, std::move(d));
}

CoverSystem CoverSystem::FromRowLists(
    int n, const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  std::vector<uint8_t> d(static_cast<size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) {
    for (int j : rows[i]) {
      if (j < 0 || j >= n) {
        throw InvalidArgument("column index " + std::to_string(j) +
                              " out of range");
      }
      d[static_cast<size_t>(i) * n + j] = 1;
    }
  }
  return CoverSystem(m, n, std::move(d));
}

QscpInstance::QscpInstance(CoverSystem system, Representation rep)
    : system_(std::move(system)), rep_(std::move(rep)) {
  CheckDims(system_.n(), rep_.n(), "QscpInstance representation");
}

double Evaluate(const Representation& rep, const BinaryPoint& x) {
  CheckDims(rep.n(), x.n(), "Evaluate");
  const std::vector<int> support = x.Support();
  double total = 0.0;
  for (int j : support) total += rep.c()[j];
  for (int i : support) {
    const auto row = rep.q().row(i);
    for (int j : support) total += row[j];
  }
  return total;
}

double EvaluateRelaxed(const Representation& rep, const RelaxedPoint& x) {
  CheckDims(rep.n(), x.n(), "EvaluateRelaxed");
  const int n = rep.n();
  double total = 0.0;
  for (int j = 0; j < n; ++j) total += rep.c()[j] * x[j];
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    const auto row = rep.q().row(i);
    double inner = 0.0;
    for (int j = 0; j < n; ++j) inner += row[j] * x[j];
    total += x[i] * inner;
  }
  return total;
}

bool IsFeasible(const CoverSystem& system, const BinaryPoint& x) {
  CheckDims(system.n(), x.n(), "IsFeasible");
  for (int i = 0; i < system.m(); ++i) {
    bool covered = false;
    for (int j : system.RowCover(i)) {
      if (x[j]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

void ForEachFeasible(const CoverSystem& system,
                     const std::function<void(const BinaryPoint&)>& visit,
                     int cap) {
  const int n = system.n();
  if (n > cap || n > 30) {
    throw LimitExceeded("exhaustive enumeration is capped at n = " +
                        std::to_string(cap) + " (got n = " +
                        std::to_string(n) +
                        "); use sampled verification instead");
  }
  if (!system.feasible()) return;
  // Bit (n-1-j) holds x_j so that increasing masks are lexicographic.
  std::vector<uint32_t> row_masks(system.m(), 0);
  for (int i = 0; i < system.m(); ++i) {
    for (int j : system.RowCover(i)) row_masks[i] |= 1u << (n - 1 - j);
  }
  BinaryPoint x(n);
  const uint64_t end = uint64_t{1} << n;
  for (uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    for (uint32_t rm : row_masks) {
      if ((mask & rm) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int j = 0; j < n; ++j) x.set(j, (mask >> (n - 1 - j)) & 1u);
    visit(x);
  }
}

std::vector<BinaryPoint> EnumerateFeasible(const CoverSystem& system,
                                           int cap) {
  std::vector<BinaryPoint> points;
  ForEachFeasible(
      system, [&](const BinaryPoint& x) { points.push_back(x); }, cap);
  return points;
}

}  // namespace qcop
