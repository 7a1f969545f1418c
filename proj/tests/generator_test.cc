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

#include <cmath>

#include "gtest/gtest.h"
#include "qcop/error.h"
#include "qcop/linalg.h"
#include "qcop/rng.h"

namespace qcop {
namespace {

GeneratorConfig Config(int m, int n, int q_class) {
  GeneratorConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.q_class = q_class;
  return cfg;
}

TEST(SplitMix64Test, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.Next(), 0x06C45D188009454Full);
}

TEST(SplitMix64Test, UniformIntStaysInRange) {
  SplitMix64 rng(7);
  std::vector<int> hits(11, 0);
  for (int t = 0; t < 11000; ++t) {
    const int64_t v = rng.UniformInt(-5, 5);
    ASSERT_GE(v, -5);
    ASSERT_LE(v, 5);
    ++hits[v + 5];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(GeneratorConfigTest, DefaultSeedRule) {
  GeneratorConfig cfg = Config(10, 20, 1);
  EXPECT_EQ(cfg.EffectiveSeed(), 2u * 20 + 3u * 10 + 11);
  cfg.seed = 99;
  EXPECT_EQ(cfg.EffectiveSeed(), 99u);
}

TEST(GeneratorConfigTest, Validation) {
  EXPECT_THROW(GenerateCover(Config(5, 1, 1)), InvalidArgument);
  EXPECT_THROW(GenerateCover(Config(0, 5, 1)), InvalidArgument);
  EXPECT_THROW(GenerateQ(Config(5, 5, 9)), InvalidArgument);
  GeneratorConfig bad = Config(5, 5, 1);
  bad.range = IntRange{3, 2};
  EXPECT_THROW(GenerateQ(bad), InvalidArgument);
}

TEST(GenerateCoverTest, Deterministic) {
  const GeneratorConfig cfg = Config(30, 25, 4);
  EXPECT_EQ(GenerateCover(cfg), GenerateCover(cfg));
  EXPECT_EQ(GenerateQ(cfg), GenerateQ(cfg));
  GeneratorConfig other = cfg;
  other.seed = cfg.EffectiveSeed() + 1;
  EXPECT_FALSE(GenerateCover(cfg) == GenerateCover(other));
}

TEST(GenerateCoverTest, RowsCoveredAndBounded) {
  for (int n = 2; n <= 40; n += 3) {
    for (int m = 1; m <= 30; m += 7) {
      const CoverSystem sys = GenerateCover(Config(m, n, 1));
      ASSERT_TRUE(sys.feasible());
      for (int i = 0; i < m; ++i) {
        EXPECT_GE(sys.RowCover(i).size(), 1u);
        EXPECT_LE(static_cast<int>(sys.RowCover(i).size()), n / 2);
      }
    }
  }
}

TEST(GenerateCoverTest, EmptySubsetsAreKept) {
  int with_empty = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorConfig cfg = Config(2, 40, 1);
    cfg.seed = seed;
    if (Analyze(GenerateCover(cfg)).empty_subsets > 0) ++with_empty;
  }
  EXPECT_GT(with_empty, 0);
}

TEST(GenerateQTest, ClassRanges) {
  const std::vector<std::pair<int, IntRange>> plain = {
      {1, {5, 10}}, {4, {-5, 5}}, {5, {-5, 10}}, {6, {-10, 5}}};
  for (const auto& [cls, range] : plain) {
    const QMatrix q = GenerateQ(Config(5, 12, cls));
    EXPECT_TRUE(q.IsIntegral());
    double lo = 1e9, hi = -1e9;
    for (double v : q.values()) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    EXPECT_GE(lo, range.lo);
    EXPECT_LE(hi, range.hi);
    EXPECT_EQ(lo, range.lo) << "class " << cls;  // 144 draws hit both ends
    EXPECT_EQ(hi, range.hi) << "class " << cls;
  }
}

TEST(GenerateQTest, GramClassesAreSymmetricPsd) {
  for (int cls : {2, 3}) {
    const QMatrix q = GenerateQ(Config(5, 10, cls));
    EXPECT_TRUE(q.IsSymmetric());
    EXPECT_TRUE(q.IsIntegral());
    EXPECT_TRUE(CheckPositiveSemidefinite(q).psd);
  }
  const QMatrix nonneg = GenerateQ(Config(5, 10, 3));
  for (double v : nonneg.values()) EXPECT_GE(v, 25.0 * 10);
  GeneratorConfig wide = Config(5, 10, 3);
  wide.range = IntRange{5, 15};
  for (double v : GenerateQ(wide).values()) EXPECT_LE(v, 225.0 * 10);
}

TEST(GenerateQTest, LowRankClasses) {
  const QMatrix r1 = GenerateQ(Config(5, 9, 7));
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      for (int k = 0; k < 9; ++k) {
        for (int l = k + 1; l < 9; ++l) {
          EXPECT_NEAR(r1(i, k) * r1(j, l) - r1(i, l) * r1(j, k), 0.0, 1e-6);
        }
      }
    }
  }
  const QMatrix r2 = GenerateQ(Config(5, 7, 8));
  auto det3 = [&](int a, int b, int c, int x, int y, int z) {
    return r2(a, x) * (r2(b, y) * r2(c, z) - r2(b, z) * r2(c, y)) -
           r2(a, y) * (r2(b, x) * r2(c, z) - r2(b, z) * r2(c, x)) +
           r2(a, z) * (r2(b, x) * r2(c, y) - r2(b, y) * r2(c, x));
  };
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c)
        for (int x = 0; x < 7; ++x)
          for (int y = x + 1; y < 7; ++y)
            for (int z = y + 1; z < 7; ++z)
              EXPECT_NEAR(det3(a, b, c, x, y, z), 0.0, 1e-6);
}

TEST(AssembleInstanceTest, UnitLinearCostAndOrgTag) {
  const GeneratorConfig cfg = Config(8, 12, 5);
  const QscpInstance inst = AssembleInstance(cfg);
  EXPECT_EQ(inst.rep().c(), LinearCost::Ones(12));
  EXPECT_EQ(inst.rep().tag().kind, ReprKind::kOrg);
  EXPECT_EQ(inst.system().n(), inst.rep().q().n());
  const QscpInstance again = AssembleInstance(cfg);
  EXPECT_EQ(inst.system(), again.system());
  EXPECT_EQ(inst.rep().q(), again.rep().q());
}

TEST(AnalyzeTest, HandCount) {
  const InstanceAnalysis a = Analyze(CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(a.min_row, 2);
  EXPECT_EQ(a.max_row, 2);
  EXPECT_EQ(a.avg_row, 2.0);
  EXPECT_EQ(a.min_col, 1);
  EXPECT_EQ(a.max_col, 2);
  EXPECT_DOUBLE_EQ(a.avg_col, 4.0 / 3.0);
  EXPECT_EQ(a.empty_subsets, 0);
}

TEST(AnalyzeTest, GeneratedInstancesInvariants) {
  for (int n = 2; n <= 30; n += 4) {
    const CoverSystem sys = GenerateCover(Config(12, n, 1));
    const InstanceAnalysis a = Analyze(sys);
    EXPECT_GE(a.min_row, 1);
    EXPECT_LE(a.min_row, a.avg_row);
    EXPECT_LE(a.avg_row, a.max_row);
    EXPECT_LE(a.min_col, a.avg_col);
    EXPECT_LE(a.avg_col, a.max_col);
    int zero_cols = 0;
    for (int j = 0; j < n; ++j) zero_cols += sys.ColumnRows(j).empty();
    EXPECT_EQ(a.empty_subsets, zero_cols);
  }
}

}  // namespace
}  // namespace qcop
