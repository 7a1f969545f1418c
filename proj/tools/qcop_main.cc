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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcop/bounds.h"
#include "qcop/error.h"
#include "qcop/experiment.h"
#include "qcop/generator.h"
#include "qcop/instance_io.h"
#include "qcop/linalg.h"
#include "qcop/lp_export.h"
#include "qcop/solver.h"
#include "qcop/stats.h"
#include "qcop/transforms.h"

namespace {

using namespace qcop;

constexpr int kUsage = 1;
constexpr int kFailure = 2;

void Emit(const QscpInstance& inst, const std::string& out) {
  if (out.empty() || out == "-") {
    WriteNative(std::cout, inst);
  } else {
    WriteNativeFile(out, inst);
  }
}

std::string Join(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += FormatNumber(v[i]);
  }
  return s;
}

ShiftPolicy PolicyFor(const std::string& name, double m) {
  if (name == "fixed") return FixedShift{m};
  if (name == "gershgorin") return GershgorinShift{};
  return EigenvalueShift{};
}

Representation ApplyTransform(const Representation& rep, const std::string& kind,
                              double m, const std::string& policy) {
  if (kind == "sym") return Symmetrize(rep);
  if (kind == "ut") return Triangularize(rep);
  if (kind == "cnx") return Convexify(rep, PolicyFor(policy, m));
  if (kind == "cnv") return Concavify(rep, m);
  if (kind == "symi") return SymConvexify(rep, PolicyFor(policy, m));
  if (kind == "dannil") return DiagonalAnnihilate(rep);
  if (kind == "lannil") return LinearAnnihilate(rep);
  return TransposeRepr(rep);
}

std::vector<std::pair<double, double>> ReadPairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::pair<double, double>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line) {
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    }
    std::istringstream fields(line);
    double a, b;
    if (!(fields >> a >> b)) {
      if (pairs.empty() && lineno == 1) continue;  // header
      throw ParseError(lineno, "expected two numbers");
    }
    pairs.emplace_back(a, b);
  }
  return pairs;
}

void WriteCsv(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write(out);
  if (!out.flush()) throw Error("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalent representations, natural lower bounds and an exact "
               "solver for quadratic set covering"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random QSCP instance");
  GeneratorConfig gcfg;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--m", gcfg.m, "Rows")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", gcfg.n, "Columns")->required()->check(CLI::Range(2, 1 << 16));
  auto* seed_opt = gen->add_option("--seed", gen_seed, "Seed (default 2n+3m+11)");
  gen->add_option("--qclass", gcfg.q_class, "Q class 1-8")->required()->check(CLI::Range(1, 8));
  std::vector<int> gen_range, gen_range2;
  gen->add_option("--range", gen_range, "Override first range: LO HI")->expected(2);
  gen->add_option("--range2", gen_range2, "Override b range of classes 7/8: LO HI")->expected(2);
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // transform
  auto* tr = app.add_subcommand("transform", "Write an equivalent representation");
  std::string tr_in, tr_out, tr_kind, tr_policy = "fixed";
  double tr_m = kDefaultShift;
  tr->add_option("--in", tr_in)->required();
  tr->add_option("--repr", tr_kind)->required()->check(CLI::IsMember(
      {"sym", "ut", "cnx", "cnv", "symi", "dannil", "lannil", "transpose"}));
  tr->add_option("--M", tr_m, "Diagonal shift for cnx/cnv/symi")->check(CLI::NonNegativeNumber);
  tr->add_option("--policy", tr_policy, "Shift policy for cnx/symi")
      ->check(CLI::IsMember({"fixed", "gershgorin", "eigen"}));
  tr->add_option("--out", tr_out);

  // bound
  auto* bd = app.add_subcommand("bound", "Natural lower bound of an instance");
  std::string bd_in, bd_variant = "nlb";
  int bd_threads = 1;
  bd->add_option("--in", bd_in)->required();
  bd->add_option("--variant", bd_variant)->check(CLI::IsMember({"nlb", "nlbr", "nlbr1"}));
  bd->add_option("--threads", bd_threads)->check(CLI::PositiveNumber);

  // solve
  auto* sv = app.add_subcommand("solve", "Solve an instance exactly");
  std::string sv_in, sv_method = "bb", sv_bound = "nlb";
  int64_t sv_cap = kDefaultNodeCap;
  sv->add_option("--in", sv_in)->required();
  sv->add_option("--method", sv_method)->check(CLI::IsMember({"brute", "bb", "greedy"}));
  sv->add_option("--bound", sv_bound)->check(CLI::IsMember({"nlb", "lp", "none"}));
  sv->add_option("--node-cap", sv_cap)->check(CLI::PositiveNumber);

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment from a config file");
  bench->require_subcommand(1);
  std::string bench_cfg, bench_out;
  auto* bb = bench->add_subcommand("bounds", "Bound comparison across representations");
  bb->add_option("--config", bench_cfg)->required();
  bb->add_option("--out", bench_out, "CSV path (overrides config output)");
  auto* bs = bench->add_subcommand("solve", "Exact solves across representations");
  bs->add_option("--config", bench_cfg)->required();
  bs->add_option("--out", bench_out, "CSV path (overrides config output)");

  // stats
  auto* stats = app.add_subcommand("stats", "Statistical tests");
  stats->require_subcommand(1);
  auto* wx = stats->add_subcommand("wilcoxon", "Wilcoxon signed-rank test on paired values");
  std::string wx_pairs;
  wx->add_option("--pairs", wx_pairs, "Two-column CSV")->required();

  // export-lp
  auto* ex = app.add_subcommand("export-lp", "Write the instance in LP format");
  std::string ex_in, ex_out;
  ex->add_option("--in", ex_in)->required();
  ex->add_option("--out", ex_out);

  // analyze
  auto* an = app.add_subcommand("analyze", "Row/column statistics of an instance");
  std::string an_in;
  an->add_option("--in", an_in)->required();

  // load-orlib
  auto* ol = app.add_subcommand("load-orlib", "Convert an OR-Library scp file");
  std::string ol_in, ol_out;
  int ol_class = 0;
  uint64_t ol_seed = 0;
  ol->add_option("--in", ol_in)->required();
  ol->add_option("--out", ol_out);
  ol->add_option("--qclass", ol_class, "Add a generated Q of this class")->check(CLI::Range(1, 8));
  auto* ol_seed_opt = ol->add_option("--seed", ol_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      if (*seed_opt) gcfg.seed = gen_seed;
      if (!gen_range.empty()) gcfg.range = IntRange{gen_range[0], gen_range[1]};
      if (!gen_range2.empty()) gcfg.range2 = IntRange{gen_range2[0], gen_range2[1]};
      try {
        gcfg.Validate();
      } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      Emit(AssembleInstance(gcfg), gen_out);
    } else if (*tr) {
      const QscpInstance inst = ReadNativeFile(tr_in);
      Emit(inst.WithRepresentation(ApplyTransform(inst.rep(), tr_kind, tr_m, tr_policy)), tr_out);
    } else if (*bd) {
      const QscpInstance inst = ReadNativeFile(bd_in);
      const NlbReport r = NaturalLowerBound(inst, ParseNlbVariant(bd_variant), NlbOptions{bd_threads});
      std::cout << "variant " << ToString(r.variant) << "\n"
                << "bound " << FormatNumber(r.bound) << "\n"
                << "alpha " << FormatNumber(r.alpha) << "\n"
                << "beta " << FormatNumber(r.beta) << "\n"
                << "l " << Join(r.l) << "\n"
                << "m " << Join(r.m_vec) << "\n"
                << "inner_lcops " << r.inner_lcops << "\n"
                << "subproblems " << r.subproblems_solved << "\n"
                << "symmetric_shortcut " << (r.symmetric_shortcut ? "true" : "false") << "\n"
                << "ceiling_applied " << (r.ceiling_applied ? "true" : "false") << "\n"
                << "excluded_columns " << r.excluded_columns << "\n";
    } else if (*sv) {
      const QscpInstance inst = ReadNativeFile(sv_in);
      SolveReport r;
      if (sv_method == "brute") {
        r = BruteForceSolve(inst);
      } else if (sv_method == "greedy") {
        r = GreedyUpper(inst);
      } else {
        r = BranchAndBound(inst, ParseBoundKind(sv_bound), sv_cap);
      }
      std::cout << "method " << ToString(r.method) << "\n";
      if (r.method == SolveMethod::kBranchAndBound) {
        std::cout << "bound " << ToString(r.bound_kind) << "\n";
      }
      std::cout << "value " << FormatNumber(r.optimal_value) << "\n"
                << "x " << r.x.ToString() << "\n"
                << "nodes " << r.nodes << "\n"
                << "proven " << (r.proven ? "true" : "false") << "\n";
    } else if (*bench) {
      ExperimentConfig cfg = ExperimentConfig::ParseFile(bench_cfg);
      if (!bench_out.empty()) cfg.output = bench_out;
      if (*bb) {
        const BoundExperimentResult r = RunBoundExperiment(cfg);
        WriteCsv(cfg.output, [&](std::ostream& out) { WriteBoundCsv(r, out); });
      } else {
        const SolverExperimentResult r = RunSolverExperiment(cfg);
        WriteCsv(cfg.output, [&](std::ostream& out) { WriteSolverCsv(r, out); });
        if (!r.consistent()) {
          std::cerr << "error: proven optima differ across representations\n";
          return kFailure;
        }
      }
    } else if (*wx) {
      const auto pairs = ReadPairs(wx_pairs);
      const WilcoxonResult r = WilcoxonSignedRank(pairs);
      std::cout << "w_plus " << FormatNumber(r.w_plus) << "\n"
                << "w_minus " << FormatNumber(r.w_minus) << "\n"
                << "n_effective " << r.n_effective << "\n"
                << "p_value " << FormatNumber(r.p_value) << "\n"
                << "method " << (r.method == WilcoxonMethod::kExact ? "exact" : "normal") << "\n"
                << "degenerate " << (r.degenerate ? "true" : "false") << "\n";
    } else if (*ex) {
      const QscpInstance inst = ReadNativeFile(ex_in);
      if (ex_out.empty() || ex_out == "-") {
        ExportLp(inst, std::cout);
      } else {
        ExportLpFile(inst, ex_out);
      }
    } else if (*an) {
      const QscpInstance inst = ReadNativeFile(an_in);
      const InstanceAnalysis a = Analyze(inst.system());
      const QMatrix& q = inst.rep().q();
      std::cout << "m " << inst.system().m() << "\n"
                << "n " << inst.n() << "\n"
                << "repr " << inst.rep().tag().ToString() << "\n"
                << "minrow " << a.min_row << "\nmaxrow " << a.max_row << "\n"
                << "avgrow " << FormatNumber(a.avg_row) << "\n"
                << "mincol " << a.min_col << "\nmaxcol " << a.max_col << "\n"
                << "avgcol " << FormatNumber(a.avg_col) << "\n"
                << "empty_subsets " << a.empty_subsets << "\n"
                << "feasible " << (inst.system().feasible() ? "true" : "false") << "\n"
                << "symmetric " << (q.IsSymmetric(0.0) ? "true" : "false") << "\n"
                << "upper_triangular " << (q.IsStrictlyUpperTriangular() ? "true" : "false") << "\n"
                << "integral " << (inst.rep().IsIntegral() ? "true" : "false") << "\n"
                << "psd " << (CheckPositiveSemidefinite(q).psd ? "true" : "false") << "\n";
    } else if (*ol) {
      const OrLibInstance lib = ReadOrLibFile(ol_in);
      QMatrix q(lib.system.n());
      if (ol_class > 0) {
        GeneratorConfig g;
        g.m = lib.system.m();
        g.n = lib.system.n();
        g.q_class = ol_class;
        if (*ol_seed_opt) g.seed = ol_seed;
        q = GenerateQ(g);
      }
      Emit(QscpInstance(lib.system, Representation(q, lib.costs)), ol_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return 0;
}
