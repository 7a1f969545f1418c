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

#ifndef QCOP_MATRIX_H_
#define QCOP_MATRIX_H_

#include <span>
#include <vector>

namespace qcop {

// Largest accepted |entry|. Sums of a few hundred such values stay exact in
// double precision when the data is integral or half-integral.
inline constexpr double kMaxMagnitude = 1048576.0;  // 2^20

// Dense row-major n x n quadratic cost matrix with finite, bounded entries.
class QMatrix {
 public:
  QMatrix() = default;
  // Zero matrix of dimension n.
  explicit QMatrix(int n);
  // Takes ownership of n*n row-major values; throws on bad size or entries.
  QMatrix(int n, std::vector<double> values);
  // Convenience for tests and small literals.
  static QMatrix FromRows(const std::vector<std::vector<double>>& rows);
  static QMatrix Identity(int n);
  static QMatrix Diagonal(std::span<const double> diagonal);

  int n() const { return n_; }
  double operator()(int i, int j) const { return values_[index(i, j)]; }
  // Unchecked writable access; call Validate() after bulk edits.
  double& at(int i, int j) { return values_[index(i, j)]; }
  std::span<const double> row(int i) const {
    return {values_.data() + static_cast<size_t>(i) * n_,
            static_cast<size_t>(n_)};
  }
  const std::vector<double>& values() const { return values_; }
  std::vector<double> diagonal() const;

  QMatrix Transposed() const;
  bool IsSymmetric(double tol = 0.0) const;
  // Strictly upper triangular: zero diagonal and zero below it.
  bool IsStrictlyUpperTriangular() const;
  bool IsIntegral() const;
  double MaxAbs() const;

  // Throws InvalidArgument for non-finite entries or |entry| > kMaxMagnitude.
  void Validate() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(double scale);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(double s, QMatrix a) { return a *= s; }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> values_;
};

// Linear cost vector c.
class LinearCost {
 public:
  LinearCost() = default;
  explicit LinearCost(int n) : values_(n, 0.0) {}
  explicit LinearCost(std::vector<double> values);
  static LinearCost Ones(int n) { return LinearCost(std::vector<double>(n, 1.0)); }

  int n() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  double& at(int j) { return values_[j]; }
  const std::vector<double>& values() const { return values_; }
  bool IsIntegral() const;
  void Validate() const;

  friend bool operator==(const LinearCost&, const LinearCost&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace qcop

#endif  // QCOP_MATRIX_H_
