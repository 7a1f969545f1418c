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

#include "qcop/instance_io.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "qcop/error.h"

namespace qcop {
namespace {

struct Token {
  std::string text;
  int line = 0;
};

// Splits a stream into whitespace-separated tokens, dropping '#' comments.
// A "# repr TAG" comment is captured into `repr`.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const size_t hash = line.find('#');
      if (hash != std::string::npos) {
        std::istringstream comment(line.substr(hash + 1));
        std::string key, value;
        if (comment >> key >> value && key == "repr") repr_ = value;
        line.resize(hash);
      }
      std::istringstream words(line);
      std::string w;
      while (words >> w) tokens_.push_back({w, number});
      last_line_ = number;
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& Next(const char* what) {
    if (done()) {
      throw ParseError(last_line_, std::string("unexpected end of input, expected ") + what);
    }
    return tokens_[pos_++];
  }
  const std::string& repr() const { return repr_; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int last_line_ = 0;
  std::string repr_;
};

int64_t ParseInt(const Token& t, const char* what) {
  int64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(t.line, std::string("expected integer ") + what +
                                 ", got '" + t.text + "'");
  }
  return v;
}

double ParseDouble(const Token& t, const char* what) {
  double v = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError(t.line, std::string("expected number ") + what +
                                 ", got '" + t.text + "'");
  }
  return v;
}

int ParseDimension(const Token& t, const char* what) {
  const int64_t v = ParseInt(t, what);
  if (v < 0 || v > 1'000'000) {
    throw ParseError(t.line, std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

std::string FormatNumber(double v) {
  if (v == std::floor(v) && std::abs(v) < 9007199254740992.0) {
    return std::to_string(static_cast<int64_t>(v));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void WriteNative(std::ostream& out, const QscpInstance& instance) {
  const CoverSystem& sys = instance.system();
  const Representation& rep = instance.rep();
  const int m = sys.m(), n = sys.n();
  out << "QSCP " << m << ' ' << n << '\n';
  out << "# repr " << rep.tag().ToString() << '\n';
  for (int j = 0; j < n; ++j) {
    out << (j ? " " : "") << FormatNumber(rep.c()[j]);
  }
  out << '\n';
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << (sys.d(i, j) ? '1' : '0');
    out << '\n';
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << (j ? " " : "") << FormatNumber(rep.q()(i, j));
    }
    out << '\n';
  }
}

std::string ToNativeString(const QscpInstance& instance) {
  std::ostringstream out;
  WriteNative(out, instance);
  return out.str();
}

QscpInstance ReadNative(std::istream& in) {
  Tokenizer tok(in);
  const Token& magic = tok.Next("header");
  if (magic.text != "QSCP") {
    throw ParseError(magic.line, "expected 'QSCP' header, got '" + magic.text + "'");
  }
  const int m = ParseDimension(tok.Next("m"), "m");
  const int n = ParseDimension(tok.Next("n"), "n");
  std::vector<double> c(n);
  for (double& v : c) v = ParseDouble(tok.Next("linear cost"), "linear cost");
  std::vector<uint8_t> d(static_cast<size_t>(m) * n);
  for (auto& v : d) {
    const Token& t = tok.Next("D entry");
    if (t.text != "0" && t.text != "1") {
      throw ParseError(t.line, "D entries must be 0 or 1, got '" + t.text + "'");
    }
    v = t.text == "1";
  }
  std::vector<double> q(static_cast<size_t>(n) * n);
  for (double& v : q) v = ParseDouble(tok.Next("Q entry"), "Q entry");
  if (!tok.done()) {
    const Token& extra = tok.Next("");
    throw ParseError(extra.line, "trailing data '" + extra.text + "'");
  }
  ReprTag tag;
  if (!tok.repr().empty()) tag = ReprTag::Parse(tok.repr());
  try {
    return QscpInstance(CoverSystem(m, n, std::move(d)),
                        Representation(QMatrix(n, std::move(q)),
                                       LinearCost(std::move(c)), tag));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

QscpInstance ReadNativeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadNative(in);
}

void WriteNativeFile(const std::string& path, const QscpInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  WriteNative(out, instance);
  out.flush();
  if (!out) throw Error("write to " + path + " failed");
}

OrLibInstance ReadOrLib(std::istream& in) {
  Tokenizer tok(in);
  const int m = ParseDimension(tok.Next("row count"), "row count");
  const int n = ParseDimension(tok.Next("column count"), "column count");
  std::vector<double> costs(n);
  for (double& v : costs) {
    v = static_cast<double>(ParseInt(tok.Next("column cost"), "column cost"));
  }
  std::vector<std::vector<int>> rows(m);
  for (int i = 0; i < m; ++i) {
    const Token& count_token = tok.Next("row count");
    const int64_t k = ParseInt(count_token, "row cover count");
    if (k < 0 || k > n) {
      throw ParseError(count_token.line, "row cover count out of range");
    }
    rows[i].reserve(k);
    for (int64_t l = 0; l < k; ++l) {
      const Token& t = tok.Next("column index");
      const int64_t j = ParseInt(t, "column index");
      if (j < 1 || j > n) {
        throw ParseError(t.line, "column index " + t.text + " outside 1.." +
                                     std::to_string(n));
      }
      rows[i].push_back(static_cast<int>(j - 1));
    }
  }
  if (!tok.done()) {
    const Token& extra = tok.Next("");
    throw ParseError(extra.line, "trailing data '" + extra.text + "'");
  }
  return {CoverSystem::FromRowLists(n, rows), LinearCost(std::move(costs))};
}

OrLibInstance ReadOrLibFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadOrLib(in);
}

}  // namespace qcop
