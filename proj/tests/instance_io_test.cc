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

#include <sstream>

#include "gtest/gtest.h"
#include "qcop/error.h"
#include "qcop/generator.h"
#include "qcop/transforms.h"

namespace qcop {
namespace {

TEST(FormatNumberTest, Rules) {
  EXPECT_EQ(FormatNumber(3.0), "3");
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(-10000.0), "-10000");
  EXPECT_EQ(FormatNumber(2.5), "2.5");
  EXPECT_EQ(FormatNumber(0.1), "0.1");
}

TEST(NativeFormatTest, ExactLayout) {
  const QscpInstance inst(
      CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}),
      Representation(QMatrix::FromRows({{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}),
                     LinearCost::Ones(3)));
  EXPECT_EQ(ToNativeString(inst),
            "QSCP 2 3\n# repr ORG\n1 1 1\n1 1 0\n0 1 1\n0 2 0\n0 0 1\n0 0 0\n");
}

TEST(NativeFormatTest, RoundTripIsLossless) {
  for (int cls = 1; cls <= 8; ++cls) {
    GeneratorConfig cfg;
    cfg.m = 7;
    cfg.n = 9;
    cfg.q_class = cls;
    const QscpInstance org = AssembleInstance(cfg);
    for (const Representation& rep :
         {org.rep(), Symmetrize(org.rep()), Triangularize(org.rep()),
          Convexify(Symmetrize(org.rep()), GershgorinShift{})}) {
      const QscpInstance inst = org.WithRepresentation(rep);
      const std::string text = ToNativeString(inst);
      std::istringstream in(text);
      const QscpInstance back = ReadNative(in);
      EXPECT_EQ(back.system(), inst.system());
      EXPECT_EQ(back.rep().q(), inst.rep().q());
      EXPECT_EQ(back.rep().c(), inst.rep().c());
      EXPECT_EQ(back.rep().tag(), inst.rep().tag());
      EXPECT_EQ(ToNativeString(back), text);
    }
  }
}

TEST(NativeFormatTest, CommentsAndFreeWhitespace) {
  std::istringstream in(
      "# a comment\nQSCP 1 2  # trailing\n1   2\n1 0\n0 1\n1 0\n");
  const QscpInstance inst = ReadNative(in);
  EXPECT_EQ(inst.rep().c(), LinearCost({1, 2}));
  EXPECT_EQ(inst.rep().q(), QMatrix::FromRows({{0, 1}, {1, 0}}));
}

TEST(NativeFormatTest, ParseErrorsCarryLine) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      ReadNative(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("QSCX 1 2\n"), 1);
  EXPECT_EQ(line_of("QSCP 1 2\n1 1\n1 2\n0 0\n0 0\n"), 3);
  EXPECT_EQ(line_of("QSCP 1 2\n1 1\n1 1\n0 0\n0 zz\n"), 5);
  EXPECT_EQ(line_of("QSCP 1 2\n1 1\n1 1\n0 0\n"), 4);  // truncated Q
}

TEST(OrLibTest, FormatDefinition) {
  std::istringstream in("2 3\n1 1 1\n2 1 2\n2 2 3\n");
  const OrLibInstance inst = ReadOrLib(in);
  EXPECT_EQ(inst.system, CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(inst.costs, LinearCost::Ones(3));
}

TEST(OrLibTest, WhitespaceAgnostic) {
  std::istringstream in("  2\n3 1\n1\n1 2 1\n2 2\n2 3");
  const OrLibInstance inst = ReadOrLib(in);
  EXPECT_EQ(inst.system, CoverSystem::FromRows({{1, 1, 0}, {0, 1, 1}}));
}

TEST(OrLibTest, Errors) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      ReadOrLib(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("2 3\n1 1 1\n2 1 4\n2 2 3\n"), 3);   // index out of range
  EXPECT_EQ(line_of("2 3\n1 1 1\n2 1 2\n2 2\n"), 4);     // truncated
  EXPECT_EQ(line_of("2 3\n1 1.5 1\n2 1 2\n2 2 3\n"), 2); // non-integer
  EXPECT_EQ(line_of("2 3\n1 1 1\n2 1 0\n2 2 3\n"), 3);   // zero index
}

}  // namespace
}  // namespace qcop
