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

#ifndef QCOP_STATS_H_
#define QCOP_STATS_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qcop {

enum class WilcoxonMethod { kExact, kNormalApprox };

struct WilcoxonResult {
  double w_plus = 0.0;
  double w_minus = 0.0;
  int n_effective = 0;
  double p_value = 1.0;
  WilcoxonMethod method = WilcoxonMethod::kExact;
  bool degenerate = false;
};

struct WilcoxonOptions {
  int exact_limit = 20;
  std::optional<WilcoxonMethod> force;
};

// Two-sided signed-rank test on differences first - second. Zero
// differences are dropped, tied magnitudes share their average rank.
WilcoxonResult WilcoxonSignedRank(
    std::span<const std::pair<double, double>> pairs,
    const WilcoxonOptions& options = {});

// Same test on precomputed differences.
WilcoxonResult WilcoxonSignedRank(std::span<const double> differences,
                                  const WilcoxonOptions& options = {});

// Average ranks (1-based) of `values`, ties averaged.
std::vector<double> AverageRanks(std::span<const double> values);

}  // namespace qcop

#endif  // QCOP_STATS_H_
