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

#include "qet/f2.hpp"

#include <random>

#include <gtest/gtest.h>

namespace qet {
namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMatrix m(c);
  for (std::size_t i = 0; i < r; ++i) {
    BitVec v(c);
    for (std::size_t j = 0; j < c; ++j)
      if (rng() & 1) v.set(j);
    m.append_row(v);
  }
  return m;
}

TEST(BitVec, StringRoundTrip) {
  auto v = BitVec::from_string("1011000000000000000000000000000000000000000000000000000000000000011");
  EXPECT_EQ(v.size(), 67u);
  EXPECT_EQ(v.popcount(), 5u);
  EXPECT_EQ(v.to_string(), "1011000000000000000000000000000000000000000000000000000000000000011");
  EXPECT_EQ(v.first_set(), 0u);
}

TEST(BitVec, TailBitsStayClear) {
  BitVec v(70);
  v.set(69);
  v.resize(65);
  EXPECT_TRUE(v.none());
  v.resize(70);
  EXPECT_FALSE(v.get(69));
}

TEST(BitVec, ConcatAndSlice) {
  auto a = BitVec::from_string("101");
  auto b = BitVec::from_string("0110");
  auto c = a.concat(b);
  EXPECT_EQ(c.to_string(), "1010110");
  EXPECT_EQ(c.slice(3, 4), b);
  EXPECT_EQ(c.slice(0, 3), a);
}

TEST(BitVec, DotIsParityOfAnd) {
  auto a = BitVec::from_string("1101");
  auto b = BitVec::from_string("1011");
  EXPECT_TRUE(dot(a, b) == false);  // overlap {0,3}
  EXPECT_TRUE(dot(a, BitVec::from_string("1000")));
}

TEST(BitMatrix, RankPlusNullityIsColumns) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    auto m = random_matrix(rng, r, c);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.rows(), c);
    for (std::size_t i = 0; i < ker.rows(); ++i) EXPECT_TRUE(m.apply(ker.row(i)).none());
  }
}

TEST(BitMatrix, RrefIsIdempotentAndKeepsRowSpace) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9);
    auto r1 = rref(m);
    auto r2 = rref(r1.reduced);
    EXPECT_EQ(r1.reduced, r2.reduced);
    EXPECT_EQ(r1.rank, rank(m));
    EchelonBasis basis(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) basis.insert(m.row(i));
    for (std::size_t i = 0; i < r1.reduced.rows(); ++i) EXPECT_TRUE(basis.contains(r1.reduced.row(i)));
  }
}

TEST(BitMatrix, SolveFindsSolutionsWhenConsistent) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    auto m = random_matrix(rng, r, c);
    BitVec x(c);
    for (std::size_t j = 0; j < c; ++j)
      if (rng() & 1) x.set(j);
    auto b = m.apply(x);
    auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
  auto m = BitMatrix::from_strings({"10", "10"});
  EXPECT_FALSE(solve(m, BitVec::from_string("10")).has_value());
}

TEST(BitMatrix, TransposeAndProduct) {
  auto a = BitMatrix::from_strings({"110", "011"});
  auto id = BitMatrix::identity(3);
  EXPECT_EQ(a * id, a);
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.transpose().rows(), 3u);
}

TEST(EchelonBasis, DetectsDependence) {
  EchelonBasis b(4);
  EXPECT_TRUE(b.insert(BitVec::from_string("1100")));
  EXPECT_TRUE(b.insert(BitVec::from_string("0110")));
  EXPECT_FALSE(b.insert(BitVec::from_string("1010")));
  EXPECT_TRUE(b.contains(BitVec(4)));
  EXPECT_FALSE(b.contains(BitVec::from_string("0001")));
}

}  // namespace
}  // namespace qet
