// Copyright 2026 The QET Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qet/pauli.hpp"

#include <set>

#include <gtest/gtest.h>

namespace qet {
namespace {

TEST(Pauli, ParseRenderRoundTrip) {
  for (const char* s : {"I", "XYZI", "ZZZZZ", "IXXIXII"}) EXPECT_EQ(render(parse_pauli(s)), s);
}

TEST(Pauli, ParseErrorsCarryPosition) {
  try {
    parse_pauli("XXQ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_pauli(""), ParseError);
}

TEST(Pauli, SingleQubitAlgebra) {
  auto x = parse_pauli("X"), y = parse_pauli("Y"), z = parse_pauli("Z");
  EXPECT_EQ(x * z, y);
  EXPECT_TRUE(anticommutes(x, z));
  EXPECT_TRUE(anticommutes(x, y));
  EXPECT_TRUE(commutes(y, y));
}

TEST(Pauli, CommutationCountsOverlaps) {
  EXPECT_TRUE(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
  EXPECT_TRUE(anticommutes(parse_pauli("XXX"), parse_pauli("ZZZ")));
  EXPECT_THROW(anticommutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST(Pauli, WeightAndSymplectic) {
  auto p = parse_pauli("XIYZ");
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.symplectic().to_string(), "10100011");
  EXPECT_EQ(PauliOp::from_symplectic(p.symplectic()), p);
}

TEST(Pauli, EnumerationCountsAndOrder) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t w = 0; w <= n; ++w) {
      auto all = enumerate_paulis(n, w);
      EXPECT_EQ(all.size(), count_paulis(n, w));
      std::set<std::string> distinct;
      for (auto& p : all) distinct.insert(render(p));
      EXPECT_EQ(distinct.size(), all.size());
    }
  auto ops = enumerate_paulis(3, 2);
  EXPECT_EQ(render(ops[0]), "XII");
  EXPECT_EQ(render(ops[1]), "YII");
  EXPECT_EQ(render(ops[3]), "IXI");
  EXPECT_EQ(render(ops[9]), "XXI");
  EXPECT_EQ(render(ops[10]), "XYI");
  auto errs = errors_up_to_weight(3, 1);
  EXPECT_TRUE(errs.front().is_identity());
  EXPECT_EQ(errs.size(), 10u);
}

}  // namespace
}  // namespace qet
