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

#include "qcop/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcop/error.h"

namespace qcop {
namespace {

void CheckEntry(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " has a non-finite entry");
  }
  if (std::abs(v) > kMaxMagnitude) {
    throw InvalidArgument(std::string(what) + " entry " + std::to_string(v) +
                          " exceeds the magnitude cap 2^20");
  }
}

bool Integral(double v) { return v == std::floor(v); }

}  // namespace

QMatrix::QMatrix(int n) : n_(n), values_(static_cast<size_t>(n) * n, 0.0) {
  if (n < 0) throw InvalidArgument("negative matrix dimension");
}

QMatrix::QMatrix(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || values_.size() != static_cast<size_t>(n) * n) {
    throw DimensionError("QMatrix expects n*n values");
  }
  Validate();
}

QMatrix QMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> values;
  values.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("QMatrix rows must have n entries");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return QMatrix(n, std::move(values));
}

QMatrix QMatrix::Identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

QMatrix QMatrix::Diagonal(std::span<const double> diagonal) {
  QMatrix m(static_cast<int>(diagonal.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = diagonal[i];
  m.Validate();
  return m;
}

std::vector<double> QMatrix::diagonal() const {
  std::vector<double> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

QMatrix QMatrix::Transposed() const {
  QMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t.at(j, i) = (*this)(i, j);
  }
  return t;
}

bool QMatrix::IsSymmetric(double tol) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

bool QMatrix::IsStrictlyUpperTriangular() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      if ((*this)(i, j) != 0.0) return false;
    }
  }
  return true;
}

bool QMatrix::IsIntegral() const {
  return std::all_of(values_.begin(), values_.end(), Integral);
}

double QMatrix::MaxAbs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void QMatrix::Validate() const {
  for (double v : values_) CheckEntry(v, "QMatrix");
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (other.n_ != n_) throw DimensionError("QMatrix dimension mismatch");
  for (size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  Validate();
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  if (other.n_ != n_) throw DimensionError("QMatrix dimension mismatch");
  for (size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  Validate();
  return *this;
}

QMatrix& QMatrix::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  Validate();
  return *this;
}

LinearCost::LinearCost(std::vector<double> values)
    : values_(std::move(values)) {
  Validate();
}

bool LinearCost::IsIntegral() const {
  return std::all_of(values_.begin(), values_.end(), Integral);
}

void LinearCost::Validate() const {
  for (double v : values_) CheckEntry(v, "LinearCost");
}

}  // namespace qcop
