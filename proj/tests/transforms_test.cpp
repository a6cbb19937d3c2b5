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

#include "qet/transforms.hpp"

#include <gtest/gtest.h>

#include "qet/catalog.hpp"

namespace qet {
namespace {

StabilizerCode trivial_inner() {
  StabilizerCode c;
  c.n = 1;
  c.k = 1;
  c.logical_x = {parse_pauli("X")};
  c.logical_z = {parse_pauli("Z")};
  return c;
}

TEST(Concatenate, SevenWithFive) {
  auto cc = concatenate(codes::seven_qubit(), codes::five_qubit());
  EXPECT_EQ(cc.result.n, 35u);
  EXPECT_EQ(cc.result.k, 2u);
  EXPECT_TRUE(validate_code(cc.result).ok());
  EXPECT_EQ(cc.result.generators.size(), 33u);
}

TEST(Concatenate, LiftPreservesCommutation) {
  auto outer = codes::seven_qubit();
  auto inner = codes::five_qubit();
  std::vector<PauliOp> ops = outer.logical_x;
  ops.insert(ops.end(), outer.logical_z.begin(), outer.logical_z.end());
  ops.insert(ops.end(), outer.generators.begin(), outer.generators.end());
  for (const auto& a : ops)
    for (const auto& b : ops)
      EXPECT_EQ(anticommutes(lift_operator(a, inner), lift_operator(b, inner)), anticommutes(a, b));
}

TEST(Concatenate, TrivialInnerIsIdentity) {
  auto outer = codes::six_qubit();
  auto cc = concatenate(outer, trivial_inner());
  EXPECT_EQ(cc.result.generators, outer.generators);
  EXPECT_EQ(cc.result.logical_x, outer.logical_x);
  EXPECT_EQ(cc.result.logical_z, outer.logical_z);
}

TEST(Concatenate, RejectsMultiQubitInner) {
  EXPECT_THROW(concatenate(codes::seven_qubit(), codes::six_qubit()), std::invalid_argument);
}

TEST(Concatenate, SmallScanRespectsBlockBound) {
  // Outer rep code with admissible {I, Z}: excluded operators need weight
  // d_inner on at least d_eff blocks.
  auto outer = codes::repetition(3);
  auto cc = concatenate(outer, codes::five_qubit());
  auto m = cc.lift(parse_admissible_list("Z", 1));
  auto lb = deff_lower_bound(cc.result, m, 4, 4);
  EXPECT_EQ(lb.kind, DistanceResult::Kind::kLowerBound);
  EXPECT_GE(lb.value, 5u);
}

}  // namespace
}  // namespace qet
