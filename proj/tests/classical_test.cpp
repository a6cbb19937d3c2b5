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

#include "qet/classical.hpp"

#include <random>

#include <gtest/gtest.h>

namespace qet {
namespace {

// Odometer over all 2^n words; a word is a codeword iff H·v = 0.
std::size_t odometer_distance(const LinearCode& c) {
  std::size_t best = c.n + 1;
  BitVec v(c.n);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << c.n); ++m) {
    for (std::size_t i = 0; i < c.n; ++i) v.set(i, (m >> i) & 1u);
    if (c.parity_check.apply(v).none()) best = std::min(best, v.popcount());
  }
  return best;
}

LinearCode qr17() { return cyclic_code(17, parse_poly("1+x^3+x^4+x^5+x^8")); }

LinearCode c2_dual() {
  Poly2 g = parse_poly("1+x^3+x^4+x^5+x^8") * parse_poly("1+x^5");
  return LinearCode::from_generator(cyclic_shifts(17, g, 7));
}

TEST(Poly2, ParseAndRender) {
  EXPECT_EQ(render(parse_poly("1+x^3+x^4+x^5+x^8")), "1+x^3+x^4+x^5+x^8");
  EXPECT_EQ(render(parse_poly("x^8 + x^5+1+x^4+x^3")), "1+x^3+x^4+x^5+x^8");
  EXPECT_EQ(render(parse_poly("x+x+1")), "1");
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_THROW(parse_poly("1+y"), ParseError);
  EXPECT_THROW(parse_poly("1+"), ParseError);
}

TEST(Poly2, DivisionIdentity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    BitVec a(1 + rng() % 20), b(1 + rng() % 8);
    for (std::size_t i = 0; i < a.size(); ++i) a.set(i, rng() & 1);
    for (std::size_t i = 0; i < b.size(); ++i) b.set(i, rng() & 1);
    Poly2 pa(a), pb(b);
    if (pb.is_zero()) continue;
    auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(Cyclic, QuadraticResidueCode) {
  auto c = qr17();
  EXPECT_EQ(c.k, 9u);
  auto d = classical_distance(c, 17);
  ASSERT_TRUE(d.exact());
  EXPECT_EQ(d.value, 5u);
  EXPECT_THROW(cyclic_code(17, parse_poly("1+x^2")), std::invalid_argument);
}

TEST(Cyclic, SmallCodes) {
  auto even3 = cyclic_code(3, parse_poly("1+x"));
  EXPECT_EQ(even3.k, 2u);
  auto par7 = cyclic_code(7, parse_poly("1+x"));
  EXPECT_EQ(classical_distance(par7, 7).value, 2u);
  EXPECT_EQ(odometer_distance(par7), 2u);
  auto rep3 = cyclic_code(3, parse_poly("1+x+x^2"));
  EXPECT_EQ(classical_distance(rep3, 3).value, 3u);
}

TEST(Cyclic, ShiftClosure) {
  for (auto [n, g] : std::vector<std::pair<std::size_t, const char*>>{
           {7, "1+x+x^3"}, {15, "1+x+x^4"}, {17, "1+x^3+x^4+x^5+x^8"}, {9, "1+x^3"}}) {
    auto c = cyclic_code(n, parse_poly(g));
    for (std::size_t r = 0; r < c.generator.rows(); ++r) {
      BitVec v = c.generator.row(r), s(n);
      for (std::size_t i = 0; i < n; ++i) s.set((i + 1) % n, v.get(i));
      EXPECT_TRUE(c.contains(s));
    }
  }
}

TEST(Cyclic, DistanceMatchesOdometer) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 4 + rng() % 10, k = 1 + rng() % std::min<std::size_t>(n - 1, 10);
    BitMatrix g(n);
    EchelonBasis basis(n);
    while (g.rows() < k) {
      BitVec v(n);
      for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
      if (basis.insert(v)) g.append_row(v);
    }
    auto c = LinearCode::from_generator(g);
    EXPECT_EQ(classical_distance(c, n).value, odometer_distance(c));
    auto dd = dual(dual(c));
    for (std::size_t r = 0; r < c.generator.rows(); ++r) EXPECT_TRUE(dd.contains(c.generator.row(r)));
    EXPECT_EQ(dd.k, c.k);
  }
}

TEST(Cyclic, LargeDimensionUsesBoundedSearch) {
  auto c = cyclic_code(31, parse_poly("1+x"));  // k = 30
  auto d = classical_distance(c, 3);
  ASSERT_TRUE(d.exact());
  EXPECT_EQ(d.value, 2u);
  auto full = LinearCode::from_generator(BitMatrix::identity(30));
  auto b = classical_distance(full, 0);
  EXPECT_EQ(b.kind, DistanceResult::Kind::kLowerBound);
  EXPECT_EQ(b.value, 1u);
}

TEST(Subcode, EvenSubcodeAndItsDual) {
  Poly2 g = parse_poly("1+x^3+x^4+x^5+x^8") * parse_poly("1+x^5");
  auto even = LinearCode::from_generator(cyclic_shifts(17, g, 8));
  EXPECT_EQ(even.k, 8u);
  for (std::size_t r = 0; r < even.generator.rows(); ++r) EXPECT_TRUE(qr17().contains(even.generator.row(r)));
  auto sub = subcode_from_rows(even, {0, 1, 2, 3, 4, 5, 6});
  EXPECT_EQ(sub.generator, c2_dual().generator);
  auto all = subcode_from_rows(qr17(), {0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(all.generator, qr17().generator);
  EXPECT_THROW(subcode_from_rows(even, {}), std::invalid_argument);
  auto c2 = dual(c2_dual());
  EXPECT_EQ(c2.k, 10u);
  EXPECT_EQ(classical_distance(c2, 17).value, 3u);
}

TEST(Css, SeventeenQubitCode) {
  auto c = css_build(qr17(), dual(c2_dual()));
  EXPECT_EQ(c.n, 17u);
  EXPECT_EQ(c.k, 2u);
  EXPECT_TRUE(validate_code(c).ok());
  auto [dx, dz] = asymmetric_distances(c, 6, 4);
  ASSERT_TRUE(dx.exact());
  ASSERT_TRUE(dz.exact());
  EXPECT_EQ(dx.value, 3u);
  EXPECT_EQ(dz.value, 5u);

  auto w3 = pure_logical_classes(c, 3, Letter::X);
  auto w4 = pure_logical_classes(c, 4, Letter::X);
  ASSERT_EQ(w3.size(), 1u);
  ASSERT_EQ(w4.size(), 1u);
  EXPECT_NE(w3.begin()->first, w4.begin()->first);
  EXPECT_FALSE(logical_form(w3.begin()->first.bits, w4.begin()->first.bits));
}

TEST(Css, ContainmentFailureNamesRows) {
  auto zero_code = dual(LinearCode::from_generator(BitMatrix::identity(17)));  // C2 = {0}
  try {
    css_build(qr17(), zero_code);
    FAIL();
  } catch (const ContainmentError& e) {
    auto p1 = qr17().parity_check.row(e.x_row());
    EXPECT_TRUE(dot(p1, zero_code.parity_check.row(e.z_row())));
  }
}

TEST(Css, SelfContainingCodeIsValid) {
  auto hamming = cyclic_code(7, parse_poly("1+x+x^3"));
  auto steane = css_build(hamming, hamming);
  EXPECT_EQ(steane.k, 1u);
  auto [dx, dz] = asymmetric_distances(steane, 7);
  EXPECT_EQ(dx.value, 3u);
  EXPECT_EQ(dz.value, dx.value);
}

}  // namespace
}  // namespace qet
