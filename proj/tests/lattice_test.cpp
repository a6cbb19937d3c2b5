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

#include "qet/lattice.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "qet/verify.hpp"

namespace qet {
namespace {

TEST(LPoly, Arithmetic) {
  auto a = parse_lpoly("1+x");
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ(a * a, parse_lpoly("1+x^2"));
  EXPECT_EQ(parse_lpoly("x*y").conjugate(), parse_lpoly("x^-1*y^-1"));
  EXPECT_EQ(render(parse_lpoly("y^2*x^-1 + 1 + 1 + x")), "x^-1*y^2+x");
  EXPECT_TRUE(parse_lpoly("0").is_zero());
  EXPECT_THROW(parse_lpoly("1+z"), ParseError);
  EXPECT_THROW(parse_lpoly("x^"), ParseError);
  for (const char* s : {"1", "x*y", "1+x+x*y", "x^-2*y^3+y^-1"}) EXPECT_EQ(parse_lpoly(render(parse_lpoly(s))), parse_lpoly(s));
}

TEST(LPoly, SymplecticFormBasics) {
  LaurentVec xq{LPoly::one(), LPoly()};
  LaurentVec zq{LPoly(), LPoly::one()};
  EXPECT_TRUE(symplectic_form(xq, xq).is_zero());
  EXPECT_TRUE(symplectic_form(xq, zq).is_one());
  auto g = tile3_cell().sigma[0];
  EXPECT_TRUE(symplectic_form(g, g).is_zero());
  EXPECT_THROW(symplectic_form(xq, LaurentVec{LPoly()}), std::invalid_argument);
}

TEST(UnitCell, Tile3WithLogicals) {
  auto u = tile3_cell();
  auto d = validate_unit_cell(u);
  EXPECT_TRUE(d.ok()) << d.summary();
  u.b[0][3] = parse_lpoly("1");  // drop the y term
  auto bad = validate_unit_cell(u);
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.summary().find("B1"), std::string::npos);
}

TEST(UnitCell, Tile2) { EXPECT_TRUE(validate_unit_cell(tile2_cell()).ok()); }

TEST(UnitCell, FileRoundTrip) {
  auto u = tile3_cell();
  auto back = parse_unit_cell(render_unit_cell(u));
  EXPECT_EQ(back.n, u.n);
  EXPECT_EQ(back.sigma, u.sigma);
  EXPECT_EQ(back.a, u.a);
  EXPECT_EQ(back.b, u.b);
  EXPECT_THROW(parse_unit_cell("n 1 s 1\nx\n"), ParseError);
  EXPECT_THROW(parse_unit_cell("n 1 s 1\n0\n1\nA2:\n0\n1\n"), ParseError);
  EXPECT_THROW(parse_unit_cell("n 1 q 1\n0\n1\n"), ParseError);
}

TEST(Torus, SingleQubitCell) {
  UnitCellCode u;
  u.n = 1;
  u.sigma.push_back({LPoly(), LPoly::one()});
  auto t = instantiate_torus(u, 3, 2);
  EXPECT_EQ(t.code.n, 6u);
  EXPECT_EQ(t.code.k, 0u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(t.code.generators[i], PauliOp::single(6, i, Letter::Z));
}

TEST(Torus, DegenerateOverlapReported) {
  UnitCellCode u;
  u.n = 1;
  u.sigma.push_back({LPoly(), parse_lpoly("1+x^2")});
  EXPECT_THROW(instantiate_torus(u, 2, 2), std::invalid_argument);
}

TEST(Torus, Tile3FourByFour) {
  auto t = instantiate_torus(tile3_cell(), 4, 4);
  EXPECT_EQ(t.code.n, 48u);
  EXPECT_EQ(t.all_rows.size(), 16u);
  EXPECT_EQ(t.dropped, 0u);
  EXPECT_EQ(t.code.k, 32u);
  EXPECT_TRUE(t.cell_logicals);
  EXPECT_TRUE(validate_code(t.code).ok());
  for_each_pauli(48, 1, [&](const PauliOp& p) {
    EXPECT_TRUE(syndrome(t.code, p).any()) << render(p);
    return true;
  });
  std::set<PauliOp> translates;
  for (long dx = 0; dx < 4; ++dx)
    for (long dy = 0; dy < 4; ++dy) translates.insert(place_on_torus(tile3_cell().a[0], 3, 4, 4, dx, dy));
  std::size_t zero_syndrome = 0;
  for_each_pauli(48, 2, [&](const PauliOp& p) {
    if (p.weight() == 2 && syndrome(t.code, p).none()) {
      ++zero_syndrome;
      EXPECT_TRUE(translates.count(p)) << render(p);
    }
    return true;
  });
  EXPECT_EQ(zero_syndrome, 16u);
}

TEST(Torus, KernelDimensionPerCell) {
  for (std::size_t L : {3u, 4u, 5u}) {
    auto t = instantiate_torus(tile3_cell(), L, L);
    EXPECT_EQ(t.code.k, 2 * L * L) << L;
  }
}

TEST(Torus, Tile2Distance) {
  auto t = instantiate_torus(tile2_cell(), 4, 4);
  EXPECT_TRUE(validate_code(t.code).ok());
  auto d = code_distance(t.code, 4, 4);
  ASSERT_TRUE(d.exact());
  EXPECT_EQ(d.value, 3u);
}

TEST(Torus, TranslationCovariance) {
  for (std::size_t L : {3u, 4u}) {
    auto t = instantiate_torus(tile3_cell(), L, L);
    auto full_syndrome = [&](const PauliOp& p) {
      BitVec s(t.all_rows.size());
      for (std::size_t r = 0; r < t.all_rows.size(); ++r) s.set(r, anticommutes(p, t.all_rows[r]));
      return s;
    };
    std::size_t checked = 0;
    for_each_pauli(t.code.n, 2, [&](const PauliOp& p) {
      if (checked++ % 7) return true;  // a spread-out sample keeps this quick
      auto s = full_syndrome(p);
      for (long dx = 0; dx < static_cast<long>(L); ++dx)
        for (long dy = 0; dy < static_cast<long>(L); ++dy) {
          auto ts = full_syndrome(t.translate(p, dx, dy));
          for (std::size_t cell = 0; cell < t.cells(); ++cell) {
            std::size_t cx = cell % L, cy = cell / L;
            std::size_t moved = ((cy + dy) % L) * L + (cx + dx) % L;
            EXPECT_EQ(ts.get(moved), s.get(cell));
          }
        }
      return true;
    });
  }
}

TEST(Torus, SymbolicMatchesInstantiated) {
  auto u = tile3_cell();
  std::vector<LaurentVec> vecs = {u.sigma[0], u.a[0], u.a[1], u.b[0], u.b[1]};
  const std::size_t L = 7;
  for (const auto& a : vecs)
    for (const auto& b : vecs) {
      LPoly f = symplectic_form(a, b);
      PauliOp pb = place_on_torus(b, 3, L, L, 3, 3);
      for (long k1 = -2; k1 <= 2; ++k1)
        for (long k2 = -2; k2 <= 2; ++k2) {
          PauliOp pa = place_on_torus(a, 3, L, L, static_cast<std::size_t>(3 + k1), static_cast<std::size_t>(3 + k2));
          EXPECT_EQ(anticommutes(pb, pa), f.terms().count({k1, k2}) != 0);
        }
    }
}

TEST(Toric, ThreeByThree) {
  auto c = toric_code(3);
  EXPECT_TRUE(validate_code(c).ok());
  EXPECT_EQ(c.k, 2u);
  EXPECT_EQ(min_weight_in_class(c, parse_logical_class("Z1", 2), 6, Purity::kPureZ).value, 3u);
  EXPECT_EQ(min_weight_in_class(c, parse_logical_class("Z2", 2), 6, Purity::kPureZ).value, 3u);
  EXPECT_EQ(min_weight_in_class(c, parse_logical_class("Z1Z2", 2), 6, Purity::kPureZ).value, 6u);
  EXPECT_EQ(min_weight_in_class(c, LogicalClass::zero(2), 6).value, 0u);
}

TEST(Compact, CosetStructureAtFour) {
  auto ce = compact_encoding(4);
  const auto& c = ce.code;
  EXPECT_EQ(c.n, 48u);
  EXPECT_TRUE(validate_code(c).ok());
  std::set<std::size_t> vertices(ce.vertex_qubits.begin(), ce.vertex_qubits.end());
  std::map<BitVec, std::vector<PauliOp>> buckets;
  for_each_pauli(c.n, 1, [&](const PauliOp& p) {
    buckets[syndrome(c, p)].push_back(p);
    return true;
  });
  for (const auto& [s, ops] : buckets) {
    if (s.none()) {
      for (const auto& p : ops) {
        std::size_t q = p.x().any() ? p.x().first_set() : p.z().first_set();
        EXPECT_TRUE(vertices.count(q));
        EXPECT_EQ(p.at(q), Letter::Z);
      }
      continue;
    }
    if (ops.size() == 1) continue;
    ASSERT_EQ(ops.size(), 2u);
    std::size_t q = (ops[0].x() | ops[0].z()).first_set();
    EXPECT_EQ((ops[1].x() | ops[1].z()).first_set(), q);
    EXPECT_TRUE(vertices.count(q));
    std::set<Letter> ls{ops[0].at(q), ops[1].at(q)};
    EXPECT_EQ(ls, (std::set<Letter>{Letter::X, Letter::Y}));
  }
  for (auto q : ce.vertex_qubits) EXPECT_TRUE(syndrome(c, PauliOp::single(c.n, q, Letter::Z)).none());
  EXPECT_THROW(compact_encoding(5), std::invalid_argument);
}

}  // namespace
}  // namespace qet
