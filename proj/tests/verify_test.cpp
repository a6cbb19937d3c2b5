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

#include "qet/verify.hpp"

#include <set>

#include <gtest/gtest.h>

#include "random_codes.hpp"

namespace qet {
namespace {

StabilizerCode seven_qubit() {
  return parse_code(
      "7 2\n"
      "XXYYZIZ\nIZXYYXY\nIIIIIZZ\nZZIIZIZ\nZZZZIII\n"
      "XL\nIXXIXII\nIIXXIIZ\n"
      "ZL\nZZIIIII\nZIIZIIZ\n");
}

StabilizerCode six_qubit() {
  return parse_code(
      "6 2\n"
      "YXZIXX\nZIXXXX\nZZZZII\nZZIIZZ\n"
      "XL\nIXIXXI\nZIZIIZ\n"
      "ZL\nZZIIII\nIIIIXX\n");
}

AdmissibleSet adm(const char* list, std::size_t k) { return parse_admissible_list(list, k); }

// Pairwise oracle straight from the definition: some assignment π exists with
// π(E_i) XOR π(E_j) = class(E_i·E_j) for every same-syndrome pair. Tries every
// admissible π(E_1) and propagates.
bool oracle_general(const StabilizerCode& c, const AdmissibleSet& m, const std::vector<PauliOp>& errs) {
  std::vector<bool> done(errs.size(), false);
  for (std::size_t a = 0; a < errs.size(); ++a) {
    if (done[a]) continue;
    std::vector<std::size_t> bucket;
    for (std::size_t b = a; b < errs.size(); ++b)
      if (!done[b] && syndrome(c, errs[b]) == syndrome(c, errs[a])) bucket.push_back(b), done[b] = true;
    bool any = false;
    for (const auto& start : m.classes()) {
      bool ok = true;
      for (std::size_t i : bucket)
        for (std::size_t j : bucket) {
          LogicalClass pi_i = start ^ logical_class(c, errs[a] * errs[i]);
          LogicalClass pi_j = start ^ logical_class(c, errs[a] * errs[j]);
          if (!m.contains(pi_i) || !m.contains(pi_j)) ok = false;
          if ((pi_i ^ pi_j) != logical_class(c, errs[i] * errs[j])) ok = false;
        }
      any = any || ok;
    }
    if (!any) return false;
  }
  return true;
}

TEST(Admissible, ParsingAndGroupFlag) {
  auto m = adm("ZI,IZ", 2);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_FALSE(m.is_group());
  EXPECT_TRUE(m.contains(LogicalClass::zero(2)));
  auto g = AdmissibleSet::generated_by(2, {parse_logical_class("ZI", 2), parse_logical_class("IZ", 2)});
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.is_group());
  EXPECT_TRUE(AdmissibleSet::full(2).is_full());
  EXPECT_EQ(parse_admissible("# c\nZ1\n\nIZ\n", 2), m);
  EXPECT_THROW(parse_admissible("ZZZ\n", 2), ParseError);
}

TEST(Verify, SevenQubitGroupPass) {
  auto c = seven_qubit();
  ASSERT_TRUE(validate_code(c).ok());
  auto v = check_group_qet(c, adm("ZI", 2), errors_up_to_weight(7, 1));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.num_errors, 22u);
}

TEST(Verify, SevenQubitQecFailsWithWitness) {
  auto c = seven_qubit();
  auto errs = errors_up_to_weight(7, 1);
  auto v = check_group_qet(c, AdmissibleSet(2), errs);
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(render(v.witness->first), "ZIIIIII");
  EXPECT_EQ(render(v.witness->second), "IZIIIII");
  EXPECT_EQ(syndrome(c, v.witness->first), syndrome(c, v.witness->second));
  EXPECT_EQ(logical_class(c, v.witness->first * v.witness->second), v.witness->product_class);
  EXPECT_EQ(render(v.witness->product_class), "ZI");
}

TEST(Verify, IdentityOnlyAlwaysPasses) {
  auto c = seven_qubit();
  std::vector<PauliOp> errs{PauliOp::identity(7)};
  EXPECT_TRUE(check_group_qet(c, AdmissibleSet(2), errs).pass);
  EXPECT_TRUE(check_general_qet(c, AdmissibleSet(2), errs).pass);
}

TEST(Verify, GroupCheckRejectsNonGroup) {
  EXPECT_THROW(check_group_qet(six_qubit(), adm("ZI,IZ", 2), errors_up_to_weight(6, 1)), std::invalid_argument);
}

TEST(Verify, SixQubitGeneralPassesStrongFails) {
  auto c = six_qubit();
  ASSERT_TRUE(validate_code(c).ok());
  auto m = adm("ZI,IZ", 2);
  auto errs = errors_up_to_weight(6, 1);
  auto v = check_general_qet(c, m, errs);
  ASSERT_TRUE(v.pass);
  EXPECT_FALSE(strong_conditions_hold(c, m, errs));
  // The Y5/Y6 bucket assigns classes whose XOR is Z̄1Z̄2.
  for (const auto& bm : v.maps) {
    auto it = std::find(bm.members.begin(), bm.members.end(), parse_pauli("IIIIYI"));
    if (it == bm.members.end()) continue;
    auto jt = std::find(bm.members.begin(), bm.members.end(), parse_pauli("IIIIIY"));
    ASSERT_NE(jt, bm.members.end());
    std::size_t i = it - bm.members.begin(), j = jt - bm.members.begin();
    for (std::size_t ch = 0; ch < bm.choices.size(); ++ch)
      EXPECT_EQ(render(bm.pi(ch, i) ^ bm.pi(ch, j)), "ZZ");
  }
  EXPECT_FALSE(check_general_qet(c, adm("IZ", 2), errs).pass);
}

TEST(Verify, EffectiveDistances) {
  auto d7 = effective_distance(seven_qubit(), adm("ZI", 2), 3);
  ASSERT_TRUE(d7.exact());
  EXPECT_EQ(d7.value, 3u);
  auto d6 = effective_distance(six_qubit(), adm("ZI,IZ", 2), 3);
  ASSERT_TRUE(d6.exact());
  EXPECT_EQ(d6.value, 3u);
  auto lb = deff_lower_bound(seven_qubit(), adm("ZI", 2), 7);
  ASSERT_TRUE(lb.exact());
  EXPECT_EQ(lb.value, 3u);
  EXPECT_EQ(deff_lower_bound(seven_qubit(), AdmissibleSet::full(2), 7).kind, DistanceResult::Kind::kUnbounded);
  EXPECT_EQ(deff_lower_bound(seven_qubit(), AdmissibleSet(2), 7).value, code_distance(seven_qubit(), 7).value);
}

TEST(Verify, SymplecticGroupOrders) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::uint64_t count = 0;
    bool first_is_identity = false;
    for_each_symplectic(k, [&](const SymplecticRows& r) {
      if (count++ == 0) {
        first_is_identity = true;
        for (std::size_t i = 0; i < 2 * k; ++i) first_is_identity = first_is_identity && r[i] == (1u << i);
      }
      return true;
    });
    EXPECT_EQ(count, symplectic_group_order(k));
    (void)first_is_identity;
  }
  EXPECT_EQ(symplectic_group_order(2), 720u);
}

TEST(Verify, RelabelSearchFindsBasis) {
  auto sf = with_standard_basis(seven_qubit());
  auto errs = errors_up_to_weight(7, 1);
  auto r = relabel_search(sf, adm("ZI", 2), errs, 2);
  ASSERT_TRUE(r);
  EXPECT_TRUE(validate_code(r->code).ok());
  EXPECT_TRUE(check_group_qet(r->code, adm("ZI", 2), errs).pass);
  // All four weight-2 logicals share one class in the found basis.
  std::set<std::string> classes;
  for (const char* s : {"ZZIIIII", "IIZZIII", "IIIIZZI", "IIIIZIZ"})
    classes.insert(render(logical_class(r->code, parse_pauli(s))));
  EXPECT_EQ(classes.size(), 1u);

  auto r6 = relabel_search(with_standard_basis(six_qubit()), adm("ZI,IZ", 2), errors_up_to_weight(6, 1));
  ASSERT_TRUE(r6);
  EXPECT_TRUE(r6->verdict.pass);
}

TEST(Verify, RecoveryTables) {
  auto c = six_qubit();
  auto m = adm("ZI,IZ", 2);
  auto errs = errors_up_to_weight(6, 1);
  auto v = check_general_qet(c, m, errs);
  auto t = build_recovery(c, m, v);
  for (const auto& e : errs) {
    const auto* entry = t.find(syndrome(c, e));
    ASSERT_NE(entry, nullptr);
    double sum = 0;
    for (const auto& comp : entry->components) {
      auto residual = comp.correction * e;
      EXPECT_TRUE(syndrome(c, residual).none());
      EXPECT_TRUE(m.contains(logical_class(c, residual)));
      sum += comp.weight;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
  auto qec = build_recovery(c, AdmissibleSet(2), check_general_qet(c, AdmissibleSet(2), errors_up_to_weight(6, 0)));
  for (const auto& entry : qec.entries) EXPECT_EQ(entry.components.size(), 1u);
  EXPECT_THROW(build_recovery(c, AdmissibleSet(2), check_general_qet(c, AdmissibleSet(2), errs)),
               std::invalid_argument);
}

TEST(VerifyProperties, GroupAndGeneralAgreeOnGroups) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 3 + rng() % 4, k = 1 + rng() % 2;
    auto c = testing::random_code(rng, n, k);
    std::vector<LogicalClass> gens;
    for (int g = 0; g < static_cast<int>(rng() % 3); ++g)
      gens.push_back(AdmissibleSet::class_from_int(k, rng() % (1u << (2 * k))));
    auto m = AdmissibleSet::generated_by(k, gens);
    auto errs = errors_up_to_weight(n, 2);
    auto a = check_group_qet(c, m, errs, 2);
    auto b = check_general_qet(c, m, errs, 3);
    EXPECT_EQ(a.pass, b.pass);
    if (!a.pass) EXPECT_EQ(a.witness->second, b.witness->second);
    if (a.pass && strong_conditions_hold(c, m, errs))
      for (const auto& bm : b.maps) EXPECT_EQ(bm.choices.size(), m.size());
  }
}

TEST(VerifyProperties, GeneralMatchesPairwiseOracle) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 3 + rng() % 3, k = 1 + rng() % 2;
    auto c = testing::random_code(rng, n, k);
    std::vector<LogicalClass> cls;
    for (int g = 0; g < 1 + static_cast<int>(rng() % 4); ++g)
      cls.push_back(AdmissibleSet::class_from_int(k, rng() % (1u << (2 * k))));
    AdmissibleSet m(k, cls);
    auto errs = errors_up_to_weight(n, 1 + rng() % 2);
    auto v = check_general_qet(c, m, errs);
    EXPECT_EQ(v.pass, oracle_general(c, m, errs));
    if (strong_conditions_hold(c, m, errs)) EXPECT_TRUE(v.pass);
  }
}

TEST(VerifyProperties, QecMatchesTextbookCondition) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + rng() % 4, k = 1 + rng() % 2;
    auto c = testing::random_code(rng, n, k);
    auto errs = errors_up_to_weight(n, 1);
    // E_i†E_j must not lie in N(S)∖S.
    bool textbook = true;
    for (const auto& a : errs)
      for (const auto& b : errs) {
        auto p = a * b;
        if (syndrome(c, p).none() && !in_stabilizer(c, p)) textbook = false;
      }
    EXPECT_EQ(check_group_qet(c, AdmissibleSet(k), errs).pass, textbook);
  }
}

TEST(VerifyProperties, EffectiveDistanceMonotoneAndAtLeastDistance) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 4 + rng() % 3, k = 1 + rng() % 2;
    auto c = testing::random_code(rng, n, k);
    AdmissibleSet m(k);
    auto prev = effective_distance(c, m, 2);
    auto d = code_distance(c, n);
    if (prev.exact()) EXPECT_GE(prev.value, d.value - ((d.value % 2) ? 0 : 1));
    for (int g = 0; g < 3; ++g) {
      m.insert(AdmissibleSet::class_from_int(k, rng() % (1u << (2 * k))));
      auto cur = effective_distance(c, m, 2);
      EXPECT_GE(cur.value, prev.value);
      auto lb = deff_lower_bound(c, m, n);
      if (lb.exact() && lb.value >= 1) {
        std::size_t w = (lb.value - 1) / 2;
        EXPECT_TRUE(strong_conditions_hold(c, m, errors_up_to_weight(n, std::min(w, n))));
      }
      prev = cur;
    }
  }
}

TEST(VerifyProperties, RelabelingInvariance) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    auto c = testing::random_code(rng, 5, 2);
    std::vector<LogicalClass> cls;
    for (int g = 0; g < 3; ++g) cls.push_back(AdmissibleSet::class_from_int(2, rng() % 16));
    AdmissibleSet pattern(2, cls);
    std::vector<SymplecticRows> all;
    for_each_symplectic(2, [&](const SymplecticRows& r) {
      all.push_back(r);
      return true;
    });
    auto b = symplectic_matrix(all[rng() % all.size()], 2);
    auto errs = errors_up_to_weight(5, 1);
    auto relabelled = relabel(c, b);
    EXPECT_EQ(check_general_qet(relabelled, pattern, errs).pass,
              check_general_qet(c, pattern.mapped(b), errs).pass);
  }
}

}  // namespace
}  // namespace qet
