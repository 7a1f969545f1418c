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

#ifndef QCOP_EXPERIMENT_H_
#define QCOP_EXPERIMENT_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcop/bounds.h"
#include "qcop/model.h"
#include "qcop/solver.h"
#include "qcop/transforms.h"

namespace qcop {

// A generated instance, or a native instance file when `file` is set.
struct InstanceSpec {
  int m = 0;
  int n = 0;
  std::optional<uint64_t> seed;
  int q_class = 0;
  std::string file;

  std::string Label() const;
  QscpInstance Build() const;
};

// Flat "key = value" text; '#' starts a comment. Keys:
//   instance = M N SEED|auto QCLASS      (repeatable)
//   instance_file = PATH                 (repeatable)
//   classes = 4,5,6  count = 20  m = 10  n = 15  seed_base = 1
//   representations = org,sym,cnx,cnv,ut,symi
//   variants = nlb,nlbr,nlbr1
//   shift = 10000   bound = nlb|lp|none   node_cap = N   threads = N
//   output = PATH
struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::vector<ReprKind> representations = {ReprKind::kOrg, ReprKind::kSym,
                                           ReprKind::kCnx, ReprKind::kCnv,
                                           ReprKind::kUt,  ReprKind::kSymi};
  std::vector<NlbVariant> variants = {NlbVariant::kNlb, NlbVariant::kNlbR,
                                      NlbVariant::kNlbR1};
  double shift = kDefaultShift;
  BoundKind solver_bound = BoundKind::kNlb;
  int64_t node_cap = kDefaultNodeCap;
  int threads = 1;
  std::string output;

  static ExperimentConfig Parse(std::istream& in);
  static ExperimentConfig ParseFile(const std::string& path);
  // Nonempty instance list; at least two representations when comparing.
  void Validate(bool comparison) const;
};

// The requested representations of `inst`, treating its objective as ORG.
std::vector<Representation> SelectRepresentations(const Representation& org,
                                                  const std::vector<ReprKind>& kinds,
                                                  double shift);

inline constexpr double kTieTolerance = 1e-7;

struct BoundRow {
  int instance = 0;
  std::string label;
  int q_class = 0;
  int m = 0;
  int n = 0;
  ReprKind repr = ReprKind::kOrg;
  NlbVariant variant = NlbVariant::kNlb;
  double value = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double ms = 0.0;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct FrequencyCell {
  int q_class = 0;
  ReprKind repr = ReprKind::kOrg;
  NlbVariant variant = NlbVariant::kNlb;
  int strict = 0;  // sole tightest
  int tied = 0;    // tightest, possibly shared
  int total = 0;
};

struct FrequencyTable {
  std::vector<FrequencyCell> cells;
  const FrequencyCell* Find(int q_class, ReprKind repr, NlbVariant variant) const;
};

struct TimingRow {
  int q_class = 0;
  ReprKind repr = ReprKind::kOrg;
  NlbVariant variant = NlbVariant::kNlb;
  double min_ms = 0.0;
  double max_ms = 0.0;
  double avg_ms = 0.0;
  int count = 0;
};

struct BoundExperimentResult {
  std::vector<BoundRow> rows;  // ordered by (instance, repr, variant)
  FrequencyTable frequencies;
  std::vector<TimingRow> timings;
};

BoundExperimentResult RunBoundExperiment(const ExperimentConfig& cfg);
void WriteBoundCsv(const BoundExperimentResult& result, std::ostream& out);

struct SolveRow {
  int instance = 0;
  std::string label;
  int q_class = 0;
  int m = 0;
  int n = 0;
  ReprKind repr = ReprKind::kOrg;
  double value = 0.0;
  int64_t nodes = 0;
  double ms = 0.0;
  bool proven = false;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct SolverExperimentResult {
  std::vector<SolveRow> rows;
  // Instances whose proven optima differ across representations.
  std::vector<int> inconsistent;
  bool consistent() const { return inconsistent.empty(); }
};

SolverExperimentResult RunSolverExperiment(const ExperimentConfig& cfg);
void WriteSolverCsv(const SolverExperimentResult& result, std::ostream& out);

}  // namespace qcop

#endif  // QCOP_EXPERIMENT_H_
