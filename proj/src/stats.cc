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

#include "qcop/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcop/error.h"

namespace qcop {

std::vector<double> AverageRanks(std::span<const double> values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
    i = j + 1;
  }
  return ranks;
}

WilcoxonResult WilcoxonSignedRank(
    std::span<const std::pair<double, double>> pairs,
    const WilcoxonOptions& options) {
  if (pairs.empty()) throw InvalidArgument("Wilcoxon test needs at least one pair");
  std::vector<double> d;
  d.reserve(pairs.size());
  for (const auto& [a, b] : pairs) d.push_back(a - b);
  return WilcoxonSignedRank(std::span<const double>(d), options);
}

WilcoxonResult WilcoxonSignedRank(std::span<const double> differences,
                                  const WilcoxonOptions& options) {
  if (differences.empty()) {
    throw InvalidArgument("Wilcoxon test needs at least one pair");
  }
  std::vector<double> nonzero, magnitude;
  for (double v : differences) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite difference");
    if (v != 0.0) {
      nonzero.push_back(v);
      magnitude.push_back(std::fabs(v));
    }
  }
  WilcoxonResult r;
  const int n = static_cast<int>(nonzero.size());
  r.n_effective = n;
  if (n == 0) {
    r.degenerate = true;
    return r;
  }
  const std::vector<double> ranks = AverageRanks(magnitude);
  for (int i = 0; i < n; ++i) (nonzero[i] > 0 ? r.w_plus : r.w_minus) += ranks[i];

  const WilcoxonMethod method = options.force.value_or(
      n <= options.exact_limit ? WilcoxonMethod::kExact
                               : WilcoxonMethod::kNormalApprox);
  r.method = method;
  if (method == WilcoxonMethod::kExact) {
    if (n > 40) throw LimitExceeded("exact Wilcoxon limited to 40 differences");
    // Doubled ranks are integers; count sign patterns per doubled W+.
    std::vector<int> twice(n);
    int total = 0;
    for (int i = 0; i < n; ++i) {
      twice[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
      total += twice[i];
    }
    std::vector<double> count(total + 1, 0.0);
    count[0] = 1.0;
    int reach = 0;
    for (int t : twice) {
      for (int s = reach; s >= 0; --s) {
        if (count[s] != 0.0) count[s + t] += count[s];
      }
      reach += t;
    }
    const int observed = static_cast<int>(std::lround(2.0 * r.w_plus));
    // centre = total / 2; compare 2|T - centre| = |2T - total| in integers.
    const int extreme = std::abs(2 * observed - total);
    double hits = 0.0;
    for (int s = 0; s <= total; ++s) {
      if (std::abs(2 * s - total) >= extreme) hits += count[s];
    }
    r.p_value = std::min(1.0, hits / std::ldexp(1.0, n));
  } else {
    const double nn = n;
    double variance = nn * (nn + 1) * (2 * nn + 1) / 24.0;
    std::vector<double> sorted = magnitude;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size();) {
      size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i);
      variance -= (t * t * t - t) / 48.0;
      i = j;
    }
    const double deviation = std::fabs(r.w_plus - nn * (nn + 1) / 4.0);
    if (variance <= 0.0) {
      r.p_value = 1.0;
    } else {
      const double z = std::max(0.0, deviation - 0.5) / std::sqrt(variance);
      r.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }
  return r;
}

}  // namespace qcop
