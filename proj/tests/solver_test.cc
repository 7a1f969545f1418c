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

#include "qcop/solver.h"

#include <gtest/gtest.h>

#include "qcop/error.h"
#include "qcop/generator.h"
#include "qcop/linear_cover.h"
#include "qcop/rng.h"
#include "qcop/transforms.h"
#include "test_util.h"

namespace qcop {
namespace {

using testing::AllCovers;
using testing::DirectObjective;
using testing::OracleOptimum;
using testing::RandomCover;
using testing::RandomRep;

QscpInstance ThreeVariable() {
  QMatrix q(3);
  q.at(0, 1) = 2;
  q.at(1, 2) = 1;
  return QscpInstance(CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}),
                      Representation(q, LinearCost::Ones(3)));
}

TEST(BruteForceTest, ThreeVariableInstance) {
  const SolveReport r = BruteForceSolve(ThreeVariable());
  EXPECT_EQ(r.optimal_value, 1.0);
  EXPECT_EQ(r.x, BinaryPoint::FromString("010"));
  EXPECT_EQ(r.nodes, 5);
  EXPECT_TRUE(r.proven);
  EXPECT_EQ(r.method, SolveMethod::kBruteForce);
}

TEST(BruteForceTest, ZeroQuadraticIsMinimumCardinalityCover) {
  SplitMix64 rng(4);
  const CoverSystem sys = RandomCover(8, 12, rng);
  const QscpInstance inst(sys, Representation(QMatrix(12), LinearCost::Ones(12)));
  size_t smallest = 99;
  for (const auto& x : AllCovers(sys)) {
    size_t k = 0;
    for (int v : x) k += v;
    smallest = std::min(smallest, k);
  }
  EXPECT_EQ(BruteForceSolve(inst).optimal_value, static_cast<double>(smallest));
}

TEST(BruteForceTest, Errors) {
  const QscpInstance bad(CoverSystem::FromRows({{0, 0}}),
                         Representation(QMatrix(2), LinearCost::Ones(2)));
  EXPECT_THROW(BruteForceSolve(bad), Infeasible);
  EXPECT_THROW(BranchAndBound(bad), Infeasible);
  EXPECT_THROW(GreedyUpper(bad), Infeasible);
  const QscpInstance big(CoverSystem::FromRowLists(26, {{0}}),
                         Representation(QMatrix(26), LinearCost::Ones(26)));
  EXPECT_THROW(BruteForceSolve(big), LimitExceeded);
}

TEST(GreedyTest, DominatedColumnsPickOne) {
  const QscpInstance inst(CoverSystem::FromRows({{1, 1}, {1, 1}}),
                          Representation(QMatrix(2), LinearCost::Ones(2)));
  const SolveReport r = GreedyUpper(inst);
  EXPECT_EQ(r.optimal_value, 1.0);
  EXPECT_EQ(r.x.Support().size(), 1u);
  EXPECT_FALSE(r.proven);
}

TEST(GreedyTest, AlwaysFeasibleAndAboveOptimum) {
  SplitMix64 rng(91);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(rng.UniformInt(2, 12));
    const CoverSystem sys = RandomCover(static_cast<int>(rng.UniformInt(1, 10)), n, rng);
    const Representation rep = RandomRep(n, -10, 10, rng);
    const SolveReport r = GreedyUpper(QscpInstance(sys, rep));
    EXPECT_TRUE(IsFeasible(sys, r.x));
    EXPECT_GE(r.optimal_value, OracleOptimum(sys, rep) - 1e-9);
  }
}

TEST(ElementaryBoundTest, BelowEveryCompletion) {
  SplitMix64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.UniformInt(2, 9));
    const Representation rep = RandomRep(n, -6, 6, rng);
    Fixings fix = AllFree(n);
    for (int8_t& f : fix) f = static_cast<int8_t>(rng.UniformInt(0, 2)) - 1;
    const double b = ElementaryBound(rep, fix);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      std::vector<int> x(n);
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        x[j] = (mask >> j) & 1;
        if (fix[j] != kFree && fix[j] != x[j]) ok = false;
      }
      if (ok) EXPECT_LE(b, DirectObjective(rep, x) + 1e-9);
    }
  }
}

TEST(BranchAndBoundTest, ZeroQuadraticSolvedAtRoot) {
  const QscpInstance inst(CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}),
                          Representation(QMatrix(3), LinearCost::Ones(3)));
  for (BoundKind k : {BoundKind::kNlb, BoundKind::kLpLinearized}) {
    const SolveReport r = BranchAndBound(inst, k);
    EXPECT_EQ(r.optimal_value, 1.0);
    EXPECT_EQ(r.nodes, 1);
    EXPECT_TRUE(r.proven);
  }
}

TEST(BranchAndBoundTest, NodeCapLeavesUnproven) {
  SplitMix64 rng(8);
  const CoverSystem sys = RandomCover(10, 16, rng);
  const QscpInstance inst(sys, RandomRep(16, -10, 10, rng));
  const SolveReport r = BranchAndBound(inst, BoundKind::kNone, 3);
  EXPECT_FALSE(r.proven);
  EXPECT_LE(r.nodes, 3);
  EXPECT_TRUE(IsFeasible(sys, r.x));
  EXPECT_THROW(BranchAndBound(inst, BoundKind::kNone, 0), InvalidArgument);
}

TEST(BranchAndBoundTest, ParsesBoundNames) {
  EXPECT_EQ(ParseBoundKind("nlb"), BoundKind::kNlb);
  EXPECT_EQ(ParseBoundKind("LP"), BoundKind::kLpLinearized);
  EXPECT_EQ(ParseBoundKind("none"), BoundKind::kNone);
  EXPECT_THROW(ParseBoundKind("cuts"), InvalidArgument);
}

class SolverOracleTest : public ::testing::TestWithParam<int> {};

// Every bound kind on every standard representation reaches the enumerated
// optimum, and the optimum is shared across representations.
TEST_P(SolverOracleTest, MatchesEnumeration) {
  const int idx = GetParam();
  GeneratorConfig cfg;
  cfg.m = 3 + idx % 9;
  cfg.n = 6 + idx % 13;
  cfg.q_class = 1 + idx % 8;
  cfg.seed = 9000 + 7 * idx;
  const QscpInstance base = AssembleInstance(cfg);
  const double expected = OracleOptimum(base.system(), base.rep());
  for (const Representation& rep : StandardRepresentations(base.rep())) {
    const QscpInstance inst = base.WithRepresentation(rep);
    const std::string label = rep.tag().ToString();
    EXPECT_NEAR(BruteForceSolve(inst).optimal_value, expected, 1e-7) << label;
    for (BoundKind k : {BoundKind::kNlb, BoundKind::kLpLinearized, BoundKind::kNone}) {
      const SolveReport r = BranchAndBound(inst, k);
      EXPECT_TRUE(r.proven);
      EXPECT_TRUE(IsFeasible(inst.system(), r.x));
      EXPECT_NEAR(r.optimal_value, expected, 1e-7) << label << " " << ToString(k);
      EXPECT_EQ(r.optimal_value, Evaluate(rep, r.x));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Instances, SolverOracleTest, ::testing::Range(0, 50));

}  // namespace
}  // namespace qcop
