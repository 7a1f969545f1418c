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

#ifndef QCOP_RNG_H_
#define QCOP_RNG_H_

#include <cstdint>

namespace qcop {

// splitmix64. Fully specified by its recurrence so that generated instances
// are bit-identical on every platform:
//   state += 0x9E3779B97F4A7C15
//   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi]. Draws are rejected while
  // z >= 2^64 - (2^64 mod span), then lo + z % span is returned.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    if (span == 0) return static_cast<int64_t>(Next());
    const uint64_t rem = (0 - span) % span;
    const uint64_t limit = 0 - rem;  // 2^64 - rem; 0 means "accept all"
    uint64_t z = Next();
    while (rem != 0 && z >= limit) z = Next();
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + z % span);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double UniformUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace qcop

#endif  // QCOP_RNG_H_
