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

#include "qcop/lp_export.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qcop/error.h"
#include "qcop/instance_io.h"

namespace qcop {
namespace {

constexpr size_t kLineWidth = 78;

// Accumulates " + term" pieces and wraps long lines.
class LineWriter {
 public:
  LineWriter(std::ostream& out, std::string head) : out_(out), line_(std::move(head)) {}

  void Term(double coef, const std::string& var) {
    std::string piece;
    if (first_) {
      piece = coef < 0 ? "- " : "";
    } else {
      piece = coef < 0 ? " - " : " + ";
    }
    piece += FormatNumber(std::fabs(coef)) + " " + var;
    first_ = false;
    Raw(piece);
  }

  void Raw(const std::string& piece) {
    if (line_.size() + piece.size() > kLineWidth && line_.size() > 1) {
      out_ << line_ << "\n";
      line_ = "  ";
    }
    line_ += piece;
  }

  void ResetSign() { first_ = true; }
  bool empty() const { return first_; }
  void Finish() { out_ << line_ << "\n"; }

 private:
  std::ostream& out_;
  std::string line_;
  bool first_ = true;
};

std::string Var(int j) { return "x" + std::to_string(j + 1); }

}  // namespace

void ExportLp(const QscpInstance& inst, std::ostream& out) {
  const Representation& rep = inst.rep();
  const QMatrix& q = rep.q();
  const int n = inst.n();
  out << "\\ QSCP " << inst.system().m() << " x " << n << ", representation "
      << rep.tag().ToString() << "\n";
  out << "Minimize\n";
  LineWriter obj(out, " obj: ");
  for (int j = 0; j < n; ++j) {
    if (rep.c()[j] != 0.0) obj.Term(rep.c()[j], Var(j));
  }
  const bool symmetric = q.IsSymmetric(0.0);
  std::vector<std::pair<double, std::string>> quad;
  for (int i = 0; i < n; ++i) {
    for (int j = symmetric ? i : 0; j < n; ++j) {
      double coef;
      std::string term;
      if (i == j) {
        coef = 2.0 * q(i, i);
        term = Var(i) + " ^ 2";
      } else {
        coef = symmetric ? 2.0 * (q(i, j) + q(j, i)) : 2.0 * q(i, j);
        term = Var(i) + " * " + Var(j);
      }
      if (coef != 0.0) quad.emplace_back(coef, term);
    }
  }
  if (obj.empty() && quad.empty()) obj.Term(0.0, Var(0));
  if (!quad.empty()) {
    obj.Raw(obj.empty() ? "[ " : " + [ ");
    obj.ResetSign();
    for (const auto& [coef, term] : quad) obj.Term(coef, term);
    obj.Raw(" ] / 2");
  }
  obj.Finish();
  out << "Subject To\n";
  for (int i = 0; i < inst.system().m(); ++i) {
    LineWriter row(out, " c" + std::to_string(i + 1) + ": ");
    for (int j : inst.system().RowCover(i)) row.Term(1.0, Var(j));
    if (row.empty()) row.Term(0.0, Var(0));
    row.Raw(" >= 1");
    row.Finish();
  }
  out << "Binary\n";
  LineWriter vars(out, " ");
  for (int j = 0; j < n; ++j) vars.Raw((j ? " " : "") + Var(j));
  vars.Finish();
  out << "End\n";
}

std::string ToLpString(const QscpInstance& inst) {
  std::ostringstream out;
  ExportLp(inst, out);
  return out.str();
}

void ExportLpFile(const QscpInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  ExportLp(inst, out);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace qcop
