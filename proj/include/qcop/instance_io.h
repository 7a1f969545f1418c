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

#ifndef QCOP_INSTANCE_IO_H_
#define QCOP_INSTANCE_IO_H_

// Native QSCP text format:
//
//   QSCP m n
//   c_1 ... c_n
//   m rows of D, n tokens in {0,1} each
//   n rows of Q, n numbers each
//
// Text after '#' is a comment. The writer emits a "# repr TAG" comment after
// the header and the reader restores the tag from it. Numbers are written by
// FormatNumber, so output is byte-identical for identical data.
//
// OR-Library scp format: "m n", n column costs, then for each row a count k
// followed by k 1-based column indices.

#include <iosfwd>
#include <string>

#include "qcop/matrix.h"
#include "qcop/model.h"

namespace qcop {

// Integral values (|v| < 2^53) print as integers, "-0" as "0"; anything else
// uses the shortest representation that round-trips.
std::string FormatNumber(double v);

void WriteNative(std::ostream& out, const QscpInstance& instance);
std::string ToNativeString(const QscpInstance& instance);
// Throws ParseError with a 1-based line number.
QscpInstance ReadNative(std::istream& in);
QscpInstance ReadNativeFile(const std::string& path);
void WriteNativeFile(const std::string& path, const QscpInstance& instance);

struct OrLibInstance {
  CoverSystem system;
  LinearCost costs;
};

// Throws ParseError (with line number) on truncation, non-integer tokens or
// indices outside 1..n.
OrLibInstance ReadOrLib(std::istream& in);
OrLibInstance ReadOrLibFile(const std::string& path);

}  // namespace qcop

#endif  // QCOP_INSTANCE_IO_H_
