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

#include <algorithm>
#include <cctype>
#include <chrono>
#include <limits>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <tuple>

#include "qcop/error.h"
#include "qcop/generator.h"
#include "qcop/instance_io.h"

namespace qcop {
namespace {

std::string Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string Lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::vector<std::string> SplitList(const std::string& v) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int64_t ParseInt(const std::string& v, int line) {
  try {
    size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + v + "'");
  }
}

double ParseDouble(const std::string& v, int line) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + v + "'");
  }
}

std::string CsvField(std::string s) {
  for (char& ch : s) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  }
  return s;
}

std::string ReprName(ReprKind kind) { return ReprTag{kind, ""}.ToString(); }

double Millis(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Runs job(i) for every instance, `threads` at a time, results in order.
template <typename Row>
std::vector<Row> ForInstances(const ExperimentConfig& cfg,
                              const std::function<std::vector<Row>(int)>& job) {
  const int count = static_cast<int>(cfg.instances.size());
  std::vector<std::vector<Row>> parts(count);
  if (cfg.threads > 1) {
    for (int start = 0; start < count; start += cfg.threads) {
      std::vector<std::future<std::vector<Row>>> batch;
      const int stop = std::min(count, start + cfg.threads);
      for (int i = start; i < stop; ++i) {
        batch.push_back(std::async(std::launch::async, job, i));
      }
      for (int i = start; i < stop; ++i) parts[i] = batch[i - start].get();
    }
  } else {
    for (int i = 0; i < count; ++i) parts[i] = job(i);
  }
  std::vector<Row> rows;
  for (auto& p : parts) {
    for (auto& r : p) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string InstanceSpec::Label() const {
  if (!file.empty()) return file;
  std::ostringstream s;
  s << "qsc-m" << m << "n" << n << "-c" << q_class << "-s";
  if (seed) {
    s << *seed;
  } else {
    s << "auto";
  }
  return s.str();
}

QscpInstance InstanceSpec::Build() const {
  if (!file.empty()) return ReadNativeFile(file);
  GeneratorConfig g;
  g.m = m;
  g.n = n;
  g.seed = seed;
  g.q_class = q_class;
  return AssembleInstance(g);
}

ExperimentConfig ExperimentConfig::Parse(std::istream& in) {
  ExperimentConfig cfg;
  std::vector<int> classes;
  int count = 0, m = 0, n = 0;
  uint64_t seed_base = 1;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = Trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    const std::string key = Lower(Trim(text.substr(0, eq)));
    const std::string value = Trim(text.substr(eq + 1));
    if (key == "instance") {
      std::istringstream fields(value);
      std::string f[4], extra;
      if (!(fields >> f[0] >> f[1] >> f[2] >> f[3]) || (fields >> extra)) {
        throw ParseError(line, "instance needs M N SEED QCLASS");
      }
      InstanceSpec spec;
      spec.m = static_cast<int>(ParseInt(f[0], line));
      spec.n = static_cast<int>(ParseInt(f[1], line));
      if (Lower(f[2]) != "auto") spec.seed = static_cast<uint64_t>(ParseInt(f[2], line));
      spec.q_class = static_cast<int>(ParseInt(f[3], line));
      cfg.instances.push_back(spec);
    } else if (key == "instance_file") {
      InstanceSpec spec;
      spec.file = value;
      cfg.instances.push_back(spec);
    } else if (key == "classes") {
      for (const auto& c : SplitList(value)) classes.push_back(static_cast<int>(ParseInt(c, line)));
    } else if (key == "count") {
      count = static_cast<int>(ParseInt(value, line));
    } else if (key == "m") {
      m = static_cast<int>(ParseInt(value, line));
    } else if (key == "n") {
      n = static_cast<int>(ParseInt(value, line));
    } else if (key == "seed_base") {
      seed_base = static_cast<uint64_t>(ParseInt(value, line));
    } else if (key == "representations") {
      cfg.representations.clear();
      for (const auto& r : SplitList(value)) {
        std::string up = r;
        for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        const ReprTag tag = ReprTag::Parse(up);
        if (tag.kind == ReprKind::kCustom) {
          throw ParseError(line, "unknown representation '" + r + "'");
        }
        cfg.representations.push_back(tag.kind);
      }
    } else if (key == "variants") {
      cfg.variants.clear();
      try {
        for (const auto& v : SplitList(value)) cfg.variants.push_back(ParseNlbVariant(v));
      } catch (const InvalidArgument& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "shift") {
      cfg.shift = ParseDouble(value, line);
    } else if (key == "bound") {
      try {
        cfg.solver_bound = ParseBoundKind(value);
      } catch (const InvalidArgument& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "node_cap") {
      cfg.node_cap = ParseInt(value, line);
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(ParseInt(value, line));
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!classes.empty()) {
    if (count < 1 || m < 1 || n < 2) {
      throw InvalidArgument("classes sweep needs count >= 1, m >= 1, n >= 2");
    }
    for (int c : classes) {
      for (int i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.m = m;
        spec.n = n;
        spec.seed = seed_base + static_cast<uint64_t>(i);
        spec.q_class = c;
        cfg.instances.push_back(spec);
      }
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::ParseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path + "'");
  return Parse(in);
}

void ExperimentConfig::Validate(bool comparison) const {
  if (instances.empty()) throw InvalidArgument("experiment has no instances");
  if (representations.empty() || (comparison && representations.size() < 2)) {
    throw InvalidArgument("comparison needs at least two representations");
  }
  for (size_t i = 0; i < representations.size(); ++i) {
    for (size_t j = i + 1; j < representations.size(); ++j) {
      if (representations[i] == representations[j]) {
        throw InvalidArgument("representation listed twice");
      }
    }
  }
  if (variants.empty()) throw InvalidArgument("no bound variants selected");
  if (threads < 1) throw InvalidArgument("threads must be positive");
  if (node_cap < 1) throw InvalidArgument("node_cap must be positive");
  if (!(shift >= 0.0)) throw InvalidArgument("shift must be non-negative");
}

std::vector<Representation> SelectRepresentations(
    const Representation& org, const std::vector<ReprKind>& kinds,
    double shift) {
  const std::vector<Representation> all = StandardRepresentations(org, shift);
  std::vector<Representation> out;
  for (ReprKind k : kinds) {
    const int idx = static_cast<int>(k);
    if (idx < 0 || idx >= static_cast<int>(all.size())) {
      throw InvalidArgument("not a standard representation");
    }
    out.push_back(all[idx]);
  }
  return out;
}

const FrequencyCell* FrequencyTable::Find(int q_class, ReprKind repr,
                                          NlbVariant variant) const {
  for (const auto& c : cells) {
    if (c.q_class == q_class && c.repr == repr && c.variant == variant) return &c;
  }
  return nullptr;
}

BoundExperimentResult RunBoundExperiment(const ExperimentConfig& cfg) {
  cfg.Validate(true);
  const size_t per = cfg.representations.size() * cfg.variants.size();
  BoundExperimentResult result;
  result.rows = ForInstances<BoundRow>(cfg, [&](int i) {
    const InstanceSpec& spec = cfg.instances[i];
    std::vector<BoundRow> rows;
    for (ReprKind kind : cfg.representations) {
      for (NlbVariant v : cfg.variants) {
        BoundRow row;
        row.instance = i;
        row.label = spec.Label();
        row.q_class = spec.q_class;
        row.repr = kind;
        row.variant = v;
        rows.push_back(row);
      }
    }
    try {
      const QscpInstance base = spec.Build();
      const auto reps = SelectRepresentations(base.rep(), cfg.representations, cfg.shift);
      size_t r = 0;
      for (const Representation& rep : reps) {
        const QscpInstance inst = base.WithRepresentation(rep);
        for (size_t v = 0; v < cfg.variants.size(); ++v, ++r) {
          BoundRow& row = rows[r];
          row.m = base.system().m();
          row.n = base.n();
          try {
            const auto start = std::chrono::steady_clock::now();
            const NlbReport rep_bound = NaturalLowerBound(inst, cfg.variants[v]);
            row.ms = Millis(start);
            row.value = rep_bound.bound;
            row.alpha = rep_bound.alpha;
            row.beta = rep_bound.beta;
          } catch (const std::exception& e) {
            row.status = CsvField(e.what());
          }
        }
      }
    } catch (const std::exception& e) {
      for (auto& row : rows) row.status = CsvField(e.what());
    }
    return rows;
  });

  std::map<std::tuple<int, int, int>, FrequencyCell> cells;
  std::map<std::tuple<int, int, int>, TimingRow> timing;
  for (size_t base = 0; base < result.rows.size(); base += per) {
    for (size_t v = 0; v < cfg.variants.size(); ++v) {
      double best = -std::numeric_limits<double>::infinity();
      int attained = 0;
      for (size_t r = 0; r < cfg.representations.size(); ++r) {
        const BoundRow& row = result.rows[base + r * cfg.variants.size() + v];
        if (row.ok()) best = std::max(best, row.value);
      }
      for (size_t r = 0; r < cfg.representations.size(); ++r) {
        const BoundRow& row = result.rows[base + r * cfg.variants.size() + v];
        if (row.ok() && row.value >= best - kTieTolerance) ++attained;
      }
      for (size_t r = 0; r < cfg.representations.size(); ++r) {
        const BoundRow& row = result.rows[base + r * cfg.variants.size() + v];
        const auto key = std::make_tuple(row.q_class, static_cast<int>(row.repr),
                                         static_cast<int>(row.variant));
        FrequencyCell& cell = cells[key];
        cell.q_class = row.q_class;
        cell.repr = row.repr;
        cell.variant = row.variant;
        if (!row.ok()) continue;
        ++cell.total;
        if (row.value >= best - kTieTolerance) {
          ++cell.tied;
          if (attained == 1) ++cell.strict;
        }
        TimingRow& t = timing[key];
        t.q_class = row.q_class;
        t.repr = row.repr;
        t.variant = row.variant;
        if (t.count == 0) {
          t.min_ms = t.max_ms = row.ms;
        } else {
          t.min_ms = std::min(t.min_ms, row.ms);
          t.max_ms = std::max(t.max_ms, row.ms);
        }
        t.avg_ms += row.ms;
        ++t.count;
      }
    }
  }
  for (auto& [key, cell] : cells) result.frequencies.cells.push_back(cell);
  for (auto& [key, t] : timing) {
    t.avg_ms /= t.count;
    result.timings.push_back(t);
  }
  return result;
}

void WriteBoundCsv(const BoundExperimentResult& result, std::ostream& out) {
  out << "schema=1\n";
  out << "record,instance,label,qclass,m,n,repr,variant,bound,alpha,beta,ms,status\n";
  for (const BoundRow& r : result.rows) {
    out << "bound," << r.instance << "," << CsvField(r.label) << "," << r.q_class
        << "," << r.m << "," << r.n << "," << ReprName(r.repr) << ","
        << ToString(r.variant) << ",";
    if (r.ok()) {
      out << FormatNumber(r.value) << "," << FormatNumber(r.alpha) << ","
          << FormatNumber(r.beta) << "," << r.ms << ",ok\n";
    } else {
      out << ",,," << r.ms << "," << r.status << "\n";
    }
  }
  out << "record,qclass,repr,variant,strict,tied,total\n";
  for (const FrequencyCell& c : result.frequencies.cells) {
    out << "frequency," << c.q_class << "," << ReprName(c.repr) << ","
        << ToString(c.variant) << "," << c.strict << "," << c.tied << ","
        << c.total << "\n";
  }
  out << "record,qclass,repr,variant,min_ms,max_ms,avg_ms,count\n";
  for (const TimingRow& t : result.timings) {
    out << "timing," << t.q_class << "," << ReprName(t.repr) << ","
        << ToString(t.variant) << "," << t.min_ms << "," << t.max_ms << ","
        << t.avg_ms << "," << t.count << "\n";
  }
}

SolverExperimentResult RunSolverExperiment(const ExperimentConfig& cfg) {
  cfg.Validate(false);
  SolverExperimentResult result;
  result.rows = ForInstances<SolveRow>(cfg, [&](int i) {
    const InstanceSpec& spec = cfg.instances[i];
    std::vector<SolveRow> rows;
    for (ReprKind kind : cfg.representations) {
      SolveRow row;
      row.instance = i;
      row.label = spec.Label();
      row.q_class = spec.q_class;
      row.repr = kind;
      rows.push_back(row);
    }
    try {
      const QscpInstance base = spec.Build();
      const auto reps = SelectRepresentations(base.rep(), cfg.representations, cfg.shift);
      for (size_t r = 0; r < reps.size(); ++r) {
        SolveRow& row = rows[r];
        row.m = base.system().m();
        row.n = base.n();
        try {
          const auto start = std::chrono::steady_clock::now();
          const SolveReport s = BranchAndBound(base.WithRepresentation(reps[r]),
                                               cfg.solver_bound, cfg.node_cap);
          row.ms = Millis(start);
          row.value = s.optimal_value;
          row.nodes = s.nodes;
          row.proven = s.proven;
        } catch (const std::exception& e) {
          row.status = CsvField(e.what());
        }
      }
    } catch (const std::exception& e) {
      for (auto& row : rows) row.status = CsvField(e.what());
    }
    return rows;
  });
  const size_t per = cfg.representations.size();
  for (size_t base = 0; base < result.rows.size(); base += per) {
    std::optional<double> first;
    bool agree = true;
    for (size_t r = base; r < base + per; ++r) {
      const SolveRow& row = result.rows[r];
      if (!row.ok() || !row.proven) continue;
      if (!first) {
        first = row.value;
      } else if (std::fabs(row.value - *first) > kTieTolerance) {
        agree = false;
      }
    }
    if (!agree) result.inconsistent.push_back(result.rows[base].instance);
  }
  return result;
}

void WriteSolverCsv(const SolverExperimentResult& result, std::ostream& out) {
  out << "schema=1\n";
  out << "record,instance,label,qclass,m,n,repr,value,nodes,ms,proven,status\n";
  for (const SolveRow& r : result.rows) {
    out << "solve," << r.instance << "," << CsvField(r.label) << "," << r.q_class
        << "," << r.m << "," << r.n << "," << ReprName(r.repr) << ",";
    if (r.ok()) {
      out << FormatNumber(r.value) << "," << r.nodes << "," << r.ms << ","
          << (r.proven ? "true" : "false") << ",ok\n";
    } else {
      out << ",," << r.ms << ",false," << r.status << "\n";
    }
  }
  for (int i : result.inconsistent) {
    out << "mismatch," << i << "\n";
  }
}

}  // namespace qcop
