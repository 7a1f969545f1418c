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

#include "qcop/experiment.h"

#include <sstream>

#include <gtest/gtest.h>

#include "qcop/error.h"
#include "test_util.h"

namespace qcop {
namespace {

ExperimentConfig FromText(const std::string& text) {
  std::istringstream in(text);
  return ExperimentConfig::Parse(in);
}

int CountPrefix(const std::string& csv, const std::string& prefix) {
  std::istringstream in(csv);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
  return n;
}

TEST(ExperimentConfigTest, ParsesKeysAndSweeps) {
  const ExperimentConfig cfg = FromText(
      "# sweep\n"
      "classes = 4, 5\n"
      "count = 3\n"
      "m = 6\n"
      "n = 8\n"
      "seed_base = 10\n"
      "instance = 5 7 auto 2\n"
      "representations = org,SYM\n"
      "variants = nlb, nlb_r\n"
      "bound = lp\n"
      "node_cap = 1000\n"
      "threads = 2\n"
      "shift = 50\n");
  ASSERT_EQ(cfg.instances.size(), 7u);
  EXPECT_EQ(cfg.instances[0].m, 5);
  EXPECT_FALSE(cfg.instances[0].seed.has_value());
  EXPECT_EQ(cfg.instances[1].q_class, 4);
  EXPECT_EQ(*cfg.instances[1].seed, 10u);
  EXPECT_EQ(*cfg.instances[6].seed, 12u);
  EXPECT_EQ(cfg.instances[6].q_class, 5);
  EXPECT_EQ(cfg.representations, std::vector<ReprKind>({ReprKind::kOrg, ReprKind::kSym}));
  EXPECT_EQ(cfg.variants, std::vector<NlbVariant>({NlbVariant::kNlb, NlbVariant::kNlbR}));
  EXPECT_EQ(cfg.solver_bound, BoundKind::kLpLinearized);
  EXPECT_EQ(cfg.node_cap, 1000);
  EXPECT_EQ(cfg.threads, 2);
  EXPECT_EQ(cfg.shift, 50.0);
}

TEST(ExperimentConfigTest, ErrorsCarryLineNumbers) {
  try {
    FromText("count = 2\nbogus = 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(FromText("representations = org,foo\n"), ParseError);
  EXPECT_THROW(FromText("instance = 1 2 3\n"), ParseError);
  EXPECT_THROW(FromText("count = x\n"), ParseError);
}

TEST(ExperimentConfigTest, Validation) {
  ExperimentConfig cfg;
  EXPECT_THROW(cfg.Validate(false), InvalidArgument);
  cfg.instances.push_back({4, 6, 1, 1, ""});
  cfg.representations = {ReprKind::kOrg};
  EXPECT_NO_THROW(cfg.Validate(false));
  EXPECT_THROW(cfg.Validate(true), InvalidArgument);
  cfg.representations = {ReprKind::kSym, ReprKind::kSym};
  EXPECT_THROW(cfg.Validate(true), InvalidArgument);
}

TEST(BoundExperimentTest, RowCountAndSchema) {
  const ExperimentConfig cfg = FromText(
      "classes = 1,4\ncount = 2\nm = 5\nn = 7\nrepresentations = org,sym,ut\n");
  const BoundExperimentResult r = RunBoundExperiment(cfg);
  EXPECT_EQ(r.rows.size(), 4u * 3u * 3u);
  std::ostringstream csv;
  WriteBoundCsv(r, csv);
  EXPECT_EQ(csv.str().rfind("schema=1\n", 0), 0u);
  EXPECT_EQ(CountPrefix(csv.str(), "bound,"), 36);
  EXPECT_EQ(CountPrefix(csv.str(), "frequency,"), 2 * 3 * 3);
  EXPECT_EQ(CountPrefix(csv.str(), "timing,"), 2 * 3 * 3);
  for (const auto& row : r.rows) EXPECT_TRUE(row.ok()) << row.status;
  for (const auto& c : r.frequencies.cells) {
    EXPECT_LE(c.strict, c.tied);
    EXPECT_LE(c.tied, c.total);
    EXPECT_EQ(c.total, 2);
  }
  for (const auto& t : r.timings) {
    EXPECT_LE(t.min_ms, t.avg_ms + 1e-12);
    EXPECT_LE(t.avg_ms, t.max_ms + 1e-12);
  }
}

TEST(BoundExperimentTest, IdenticalRepresentationsAllTied) {
  const ExperimentConfig cfg = FromText(
      "classes = 2\ncount = 3\nm = 5\nn = 8\nrepresentations = org,sym\n");
  const BoundExperimentResult r = RunBoundExperiment(cfg);
  for (const auto& c : r.frequencies.cells) {
    EXPECT_EQ(c.tied, 3);
    EXPECT_EQ(c.strict, 0);
  }
}

TEST(BoundExperimentTest, EveryInstanceHasATightestRepresentation) {
  const ExperimentConfig cfg = FromText("classes = 7\ncount = 4\nm = 6\nn = 9\n");
  const BoundExperimentResult r = RunBoundExperiment(cfg);
  for (NlbVariant v : cfg.variants) {
    int tied = 0;
    for (ReprKind k : cfg.representations) tied += r.frequencies.Find(7, k, v)->tied;
    EXPECT_GE(tied, 4);
  }
}

TEST(BoundExperimentTest, FailingInstanceRecordedAndRunContinues) {
  ExperimentConfig cfg = FromText("instance = 4 6 1 1\n");
  InstanceSpec missing;
  missing.file = "/nonexistent/instance.txt";
  cfg.instances.push_back(missing);
  const BoundExperimentResult r = RunBoundExperiment(cfg);
  EXPECT_TRUE(r.rows.front().ok());
  EXPECT_FALSE(r.rows.back().ok());
}

TEST(BoundExperimentTest, ThreadedRunMatchesSequential) {
  ExperimentConfig cfg = FromText("classes = 2,8\ncount = 3\nm = 5\nn = 8\n");
  const BoundExperimentResult a = RunBoundExperiment(cfg);
  cfg.threads = 3;
  const BoundExperimentResult b = RunBoundExperiment(cfg);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].instance, b.rows[i].instance);
    EXPECT_EQ(a.rows[i].repr, b.rows[i].repr);
    EXPECT_EQ(a.rows[i].variant, b.rows[i].variant);
    EXPECT_EQ(a.rows[i].value, b.rows[i].value);
  }
}

TEST(SolverExperimentTest, SixRepresentationsAgreeWithOracle) {
  const ExperimentConfig cfg = FromText("instance = 6 10 3 5\n");
  const SolverExperimentResult r = RunSolverExperiment(cfg);
  ASSERT_EQ(r.rows.size(), 6u);
  EXPECT_TRUE(r.consistent());
  const QscpInstance inst = cfg.instances[0].Build();
  const double expected = testing::OracleOptimum(inst.system(), inst.rep());
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.proven);
    EXPECT_NEAR(row.value, expected, 1e-7);
  }
  std::ostringstream csv;
  WriteSolverCsv(r, csv);
  EXPECT_EQ(CountPrefix(csv.str(), "solve,"), 6);
  EXPECT_EQ(CountPrefix(csv.str(), "mismatch,"), 0);
}

TEST(SolverExperimentTest, NodeCapRowsAreUnproven) {
  const ExperimentConfig cfg =
      FromText("instance = 8 16 2 4\nnode_cap = 2\nbound = none\n");
  const SolverExperimentResult r = RunSolverExperiment(cfg);
  for (const auto& row : r.rows) EXPECT_FALSE(row.proven);
  std::ostringstream csv;
  WriteSolverCsv(r, csv);
  EXPECT_NE(csv.str().find(",false,ok"), std::string::npos);
}

}  // namespace
}  // namespace qcop
