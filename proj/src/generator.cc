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

#include "qcop/generator.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qcop/error.h"
#include "qcop/rng.h"

namespace qcop {
namespace {

std::vector<double> DrawVector(int n, IntRange r, SplitMix64& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(rng.UniformInt(r.lo, r.hi));
  return v;
}

// B B' for a square B drawn row-major from r. Integer arithmetic in double is
// exact for the magnitudes involved.
QMatrix GramOfRandom(int n, IntRange r, SplitMix64& rng) {
  std::vector<double> b = DrawVector(n * n, r, rng);
  QMatrix q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += b[i * n + k] * b[j * n + k];
      q.at(i, j) = s;
      q.at(j, i) = s;
    }
  }
  return q;
}

void AddOuter(QMatrix& q, const std::vector<double>& a,
              const std::vector<double>& b) {
  for (int i = 0; i < q.n(); ++i) {
    for (int j = 0; j < q.n(); ++j) q.at(i, j) += a[i] * b[j];
  }
}

}  // namespace

IntRange DefaultRange(int q_class) {
  switch (q_class) {
    case 1: return {5, 10};
    case 2: return {-5, 5};
    case 3: return {5, 10};
    case 4: return {-5, 5};
    case 5: return {-5, 10};
    case 6: return {-10, 5};
    case 7:
    case 8: return {-10, 10};
    default: throw InvalidArgument("Q class must be in 1..8");
  }
}

IntRange DefaultRange2(int q_class) {
  (void)DefaultRange(q_class);
  return {-5, 5};
}

uint64_t GeneratorConfig::EffectiveSeed() const {
  if (seed) return *seed;
  return 2 * static_cast<uint64_t>(n) + 3 * static_cast<uint64_t>(m) + 11;
}

void GeneratorConfig::Validate() const {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (n < 2) throw InvalidArgument("n must be >= 2 so that floor(n/2) >= 1");
  (void)DefaultRange(q_class);
  for (const auto& r : {range, range2}) {
    if (r && r->lo > r->hi) throw InvalidArgument("empty integer range");
  }
}

CoverSystem GenerateCover(const GeneratorConfig& cfg) {
  cfg.Validate();
  const int m = cfg.m, n = cfg.n;
  SplitMix64 rng(cfg.EffectiveSeed());
  std::vector<uint8_t> d(static_cast<size_t>(m) * n, 0);
  std::vector<int> index(n);
  for (int i = 0; i < m; ++i) {
    const int k = static_cast<int>(rng.UniformInt(1, n / 2));
    std::iota(index.begin(), index.end(), 0);
    for (int l = 0; l < k; ++l) {
      const int pick = static_cast<int>(rng.UniformInt(l, n - 1));
      std::swap(index[l], index[pick]);
      d[static_cast<size_t>(i) * n + index[l]] = 1;
    }
  }
  return CoverSystem(m, n, std::move(d));
}

QMatrix GenerateQ(const GeneratorConfig& cfg) {
  cfg.Validate();
  const int n = cfg.n;
  const IntRange r = cfg.range.value_or(DefaultRange(cfg.q_class));
  const IntRange r2 = cfg.range2.value_or(DefaultRange2(cfg.q_class));
  SplitMix64 rng(cfg.EffectiveSeed() ^ kQuadraticStreamSalt);
  switch (cfg.q_class) {
    case 2:
    case 3: {
      QMatrix q = GramOfRandom(n, r, rng);
      q.Validate();
      return q;
    }
    case 7:
    case 8: {
      QMatrix q(n);
      const int terms = cfg.q_class == 7 ? 1 : 2;
      for (int t = 0; t < terms; ++t) {
        const std::vector<double> a = DrawVector(n, r, rng);
        const std::vector<double> b = DrawVector(n, r2, rng);
        AddOuter(q, a, b);
      }
      q.Validate();
      return q;
    }
    default:
      return QMatrix(n, DrawVector(n * n, r, rng));
  }
}

QscpInstance AssembleInstance(const GeneratorConfig& cfg) {
  return QscpInstance(GenerateCover(cfg),
                      Representation(GenerateQ(cfg), LinearCost::Ones(cfg.n),
                                     {ReprKind::kOrg, ""}));
}

InstanceAnalysis Analyze(const CoverSystem& system) {
  InstanceAnalysis a;
  const int m = system.m(), n = system.n();
  if (m > 0) {
    a.min_row = n;
    long total = 0;
    for (int i = 0; i < m; ++i) {
      const int s = static_cast<int>(system.RowCover(i).size());
      a.min_row = std::min(a.min_row, s);
      a.max_row = std::max(a.max_row, s);
      total += s;
    }
    a.avg_row = static_cast<double>(total) / m;
  }
  if (n > 0) {
    a.min_col = m;
    long total = 0;
    for (int j = 0; j < n; ++j) {
      const int s = static_cast<int>(system.ColumnRows(j).size());
      a.min_col = std::min(a.min_col, s);
      a.max_col = std::max(a.max_col, s);
      total += s;
      if (s == 0) ++a.empty_subsets;
    }
    a.avg_col = static_cast<double>(total) / n;
  }
  return a;
}

}  // namespace qcop
