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

#ifndef QCOP_GENERATOR_H_
#define QCOP_GENERATOR_H_

#include <cstdint>
#include <optional>

#include "qcop/matrix.h"
#include "qcop/model.h"

namespace qcop {

struct IntRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Parameters of one random QSCP instance. Generation is a pure function of
// (m, n, seed, q_class, ranges).
//
// Q classes:
//   1  uniform integers in [5,10]
//   2  B B' with B uniform in [-5,5]
//   3  B B' with B uniform in [5,10] (some experiments use [5,15])
//   4  uniform integers in [-5,5]
//   5  uniform integers in [-5,10]
//   6  uniform integers in [-10,5]
//   7  a b' with a in [-10,10], b in [-5,5]
//   8  a1 b1' + a2 b2' with the same ranges as class 7
// `range` overrides the first range of a class (the entry range, the B
// range, or the a range) and `range2` the b range of classes 7 and 8.
struct GeneratorConfig {
  int m = 1;
  int n = 2;
  std::optional<uint64_t> seed;
  int q_class = 1;
  std::optional<IntRange> range;
  std::optional<IntRange> range2;

  // 2n + 3m + 11 unless an explicit seed was given.
  uint64_t EffectiveSeed() const;
  // Throws InvalidArgument for m < 1, n < 2, bad class or empty ranges.
  void Validate() const;
};

IntRange DefaultRange(int q_class);
// b range of classes 7 and 8.
IntRange DefaultRange2(int q_class);

// For each row i: k_i uniform in [1, floor(n/2)], then k_i distinct columns by
// a partial Fisher-Yates shuffle of 0..n-1. Columns may stay empty.
CoverSystem GenerateCover(const GeneratorConfig& cfg);

// Draws from a stream seeded with EffectiveSeed() ^ kQuadraticStreamSalt so
// that D and Q come from independent streams. Matrices are filled row-major,
// vectors in index order; class 8 draws a1, b1, a2, b2 in that order.
QMatrix GenerateQ(const GeneratorConfig& cfg);

inline constexpr uint64_t kQuadraticStreamSalt = 0xD1B54A32D192ED03ull;

// GenerateCover + GenerateQ with c = 1, tagged ORG.
QscpInstance AssembleInstance(const GeneratorConfig& cfg);

struct InstanceAnalysis {
  int min_row = 0;
  int max_row = 0;
  double avg_row = 0.0;
  int min_col = 0;
  int max_col = 0;
  double avg_col = 0.0;
  int empty_subsets = 0;
};

// Row sums (how many subsets cover each element) and column sums (subset
// sizes) of D. A zero min_row means the instance is infeasible.
InstanceAnalysis Analyze(const CoverSystem& system);

}  // namespace qcop

#endif  // QCOP_GENERATOR_H_
