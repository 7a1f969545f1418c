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

#ifndef QCOP_MODEL_H_
#define QCOP_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcop/matrix.h"

namespace qcop {

enum class ReprKind { kOrg, kSym, kCnx, kCnv, kUt, kSymi, kCustom };

// Provenance of a representation. Custom tags carry a free-form label.
struct ReprTag {
  ReprKind kind = ReprKind::kOrg;
  std::string label;

  static ReprTag Custom(std::string label) {
    return {ReprKind::kCustom, std::move(label)};
  }
  // "ORG", "SYM", ..., or the custom label.
  std::string ToString() const;
  // Inverse of ToString; unknown names become custom tags.
  static ReprTag Parse(std::string_view name);
  friend bool operator==(const ReprTag&, const ReprTag&) = default;
};

// A pair (Q, c) describing the objective c.x + x'Qx.
class Representation {
 public:
  // Throws DimensionError if q.n() != c.n(); InvalidArgument if the tag's
  // structural promise (SYM symmetric, UT strictly upper triangular) fails.
  Representation(QMatrix q, LinearCost c, ReprTag tag = {});

  int n() const { return q_.n(); }
  const QMatrix& q() const { return q_; }
  const LinearCost& c() const { return c_; }
  const ReprTag& tag() const { return tag_; }
  bool IsIntegral() const { return q_.IsIntegral() && c_.IsIntegral(); }

 private:
  QMatrix q_;
  LinearCost c_;
  ReprTag tag_;
};

// Incidence vector of a subset of columns.
class BinaryPoint {
 public:
  BinaryPoint() = default;
  explicit BinaryPoint(int n) : x_(n, 0) {}
  // Throws InvalidArgument for entries other than 0 or 1.
  explicit BinaryPoint(std::vector<uint8_t> x);
  // "0110" -> (0,1,1,0).
  static BinaryPoint FromString(std::string_view bits);

  int n() const { return static_cast<int>(x_.size()); }
  bool operator[](int j) const { return x_[j] != 0; }
  void set(int j, bool value) { x_[j] = value ? 1 : 0; }
  const std::vector<uint8_t>& values() const { return x_; }
  std::vector<int> Support() const;
  std::string ToString() const;

  friend bool operator==(const BinaryPoint&, const BinaryPoint&) = default;
  friend auto operator<=>(const BinaryPoint&, const BinaryPoint&) = default;

 private:
  std::vector<uint8_t> x_;
};

inline constexpr double kRelaxedTolerance = 1e-9;

// Point of the unit box; coordinates within kRelaxedTolerance of [0,1].
class RelaxedPoint {
 public:
  RelaxedPoint() = default;
  explicit RelaxedPoint(std::vector<double> x);
  explicit RelaxedPoint(const BinaryPoint& x);

  int n() const { return static_cast<int>(x_.size()); }
  double operator[](int j) const { return x_[j]; }
  const std::vector<double>& values() const { return x_; }

 private:
  std::vector<double> x_;
};

// The family {x binary : Dx >= 1} given by a 0/1 incidence matrix D.
class CoverSystem {
 public:
  CoverSystem() = default;
  // `d` is m*n row-major with entries in {0,1}.
  CoverSystem(int m, int n, std::vector<uint8_t> d);
  static CoverSystem FromRows(const std::vector<std::vector<int>>& rows);
  // Builds D from, for each row, the 0-based columns covering it.
  static CoverSystem FromRowLists(int n,
                                  const std::vector<std::vector<int>>& rows);

  int m() const { return m_; }
  int n() const { return n_; }
  bool d(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
  // Columns covering row i, ascending.
  std::span<const int> RowCover(int i) const { return row_cover_[i]; }
  // Rows covered by column j, ascending.
  std::span<const int> ColumnRows(int j) const { return column_rows_[j]; }
  // False when some row is all zero, i.e. no cover exists.
  bool feasible() const { return first_empty_row_ < 0; }
  int first_empty_row() const { return first_empty_row_; }
  const std::vector<uint8_t>& values() const { return d_; }

  friend bool operator==(const CoverSystem& a, const CoverSystem& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<uint8_t> d_;
  std::vector<std::vector<int>> row_cover_;
  std::vector<std::vector<int>> column_rows_;
  int first_empty_row_ = -1;
};

// A quadratic set covering instance: feasible family plus objective data.
class QscpInstance {
 public:
  QscpInstance(CoverSystem system, Representation rep);

  int n() const { return system_.n(); }
  const CoverSystem& system() const { return system_; }
  const Representation& rep() const { return rep_; }
  // Same covering system, different objective representation.
  QscpInstance WithRepresentation(Representation rep) const {
    return QscpInstance(system_, std::move(rep));
  }

 private:
  CoverSystem system_;
  Representation rep_;
};

// c.x + x'Qx for a binary point.
double Evaluate(const Representation& rep, const BinaryPoint& x);
// Same bilinear form on a point of the unit box.
double EvaluateRelaxed(const Representation& rep, const RelaxedPoint& x);

bool IsFeasible(const CoverSystem& system, const BinaryPoint& x);

inline constexpr int kDefaultEnumerationCap = 25;

// Calls `visit` for every feasible point in lexicographic order (x_1 most
// significant). Throws LimitExceeded if n > cap.
void ForEachFeasible(const CoverSystem& system,
                     const std::function<void(const BinaryPoint&)>& visit,
                     int cap = kDefaultEnumerationCap);

// Materialized ForEachFeasible. Use sampling (see transforms.h) for n > cap.
std::vector<BinaryPoint> EnumerateFeasible(const CoverSystem& system,
                                           int cap = kDefaultEnumerationCap);

}  // namespace qcop

#endif  // QCOP_MODEL_H_
