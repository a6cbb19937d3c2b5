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

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qet/classical.hpp"
#include "qet/lattice.hpp"
#include "qet/stabilizer.hpp"
#include "qet/transforms.hpp"
#include "qet/verify.hpp"

namespace qet {

struct CatalogCode {
  std::string name;
  StabilizerCode code;
  std::optional<AdmissibleSet> admissible;
};

namespace codes {

inline StabilizerCode seven_qubit() {
  return parse_code(
      "7 2\n"
      "XXYYZIZ\nIZXYYXY\nIIIIIZZ\nZZIIZIZ\nZZZZIII\n"
      "XL\nIXXIXII\nIIXXIIZ\n"
      "ZL\nZZIIIII\nZIIZIIZ\n");
}

inline StabilizerCode six_qubit() {
  return parse_code(
      "6 2\n"
      "YXZIXX\nZIXXXX\nZZZZII\nZZIIZZ\n"
      "XL\nIXIXXI\nZIZIIZ\n"
      "ZL\nZZIIII\nIIIIXX\n");
}

inline StabilizerCode five_qubit() {
  return parse_code(
      "5 1\n"
      "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n"
      "XL\nXXXXX\nZL\nZZZZZ\n");
}

/// Bit-flip repetition code: Z_iZ_{i+1} checks, X̄ = X^n, Z̄ = Z_1.
inline StabilizerCode repetition(std::size_t n) {
  if (n < 2) throw std::invalid_argument("repetition: n must be at least 2");
  StabilizerCode c;
  c.n = n;
  c.k = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PauliOp p(n);
    p.set(i, Letter::Z);
    p.set(i + 1, Letter::Z);
    c.generators.push_back(p);
  }
  PauliOp x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, Letter::X);
  c.logical_x = {x};
  c.logical_z = {PauliOp::single(n, 0, Letter::Z)};
  return c;
}

inline const char* kQrGenerator = "1+x^3+x^4+x^5+x^8";

inline LinearCode qr17() { return cyclic_code(17, parse_poly(kQrGenerator)); }

/// Span of the first seven cyclic shifts of (1+x^5)·g.
inline LinearCode c2_dual17() {
  return LinearCode::from_generator(cyclic_shifts(17, parse_poly(kQrGenerator) * parse_poly("1+x^5"), 7));
}

/// The [17,2] CSS code with X̄_1, X̄_2 the unique weight-3 and weight-4
/// pure-X logical classes.
inline StabilizerCode css17() {
  StabilizerCode c = css_build(qr17(), dual(c2_dual17()));
  auto w3 = pure_logical_classes(c, 3, Letter::X);
  auto w4 = pure_logical_classes(c, 4, Letter::X);
  if (w3.size() != 1 || w4.size() != 1) throw std::logic_error("css17: pure-X classes are not unique");
  return relabel(c, complete_symplectic_basis(2, {w3.begin()->first, w4.begin()->first}));
}

}  // namespace codes

namespace detail {

inline std::pair<std::size_t, std::size_t> parse_dims(const std::optional<std::string>& p, std::size_t dx,
                                                      std::size_t dy) {
  if (!p) return {dx, dy};
  auto comma = p->find_first_of(",x");
  try {
    if (comma == std::string::npos) {
      std::size_t v = std::stoul(*p);
      return {v, v};
    }
    return {std::stoul(p->substr(0, comma)), std::stoul(p->substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad lattice size \"" + *p + "\"");
  }
}

inline std::size_t parse_size(const std::optional<std::string>& p, std::size_t dflt) {
  if (!p) return dflt;
  try {
    return std::stoul(*p);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size \"" + *p + "\"");
  }
}

}  // namespace detail

inline CatalogCode make_tile3(std::size_t lx, std::size_t ly) {
  auto cell = tile3_cell();
  auto t = instantiate_torus(cell, lx, ly);
  AdmissibleSet m(t.code.k);
  for (std::size_t cy = 0; cy < ly; ++cy)
    for (std::size_t cx = 0; cx < lx; ++cx)
      m.insert(logical_class(t.code, place_on_torus(cell.a[0], cell.n, lx, ly, cx, cy)));
  return {"tile3-lattice:" + std::to_string(lx) + "," + std::to_string(ly), std::move(t.code), std::move(m)};
}

inline CatalogCode make_compact(std::size_t L) {
  auto ce = compact_encoding(L);
  AdmissibleSet m(ce.code.k);
  for (auto q : ce.vertex_qubits) m.insert(raw_class(ce.code, PauliOp::single(ce.code.n, q, Letter::Z)));
  return {"compact:" + std::to_string(L), std::move(ce.code), std::move(m)};
}

/// One self-test assertion: returns an empty string on success, otherwise
/// what was observed.
struct Expectation {
  std::string what;
  std::function<std::string(const CatalogCode&, std::size_t threads)> check;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  std::function<CatalogCode(const std::optional<std::string>& param)> build;
  std::vector<Expectation> expectations;  ///< for the default parameters
};

namespace detail {

inline std::string expect_eq(std::size_t got, std::size_t want) {
  return got == want ? std::string() : "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

inline Expectation expect_valid() {
  return {"validates", [](const CatalogCode& c, std::size_t) { return validate_code(c.code).summary(); }};
}

inline Expectation expect_distance(std::size_t d, std::size_t cap) {
  return {"code distance " + std::to_string(d), [=](const CatalogCode& c, std::size_t threads) {
            auto r = code_distance(c.code, cap, threads);
            return r.exact() ? expect_eq(r.value, d) : "not found within cap " + std::to_string(cap);
          }};
}

inline Expectation expect_deff(std::size_t d, std::size_t cap) {
  return {"effective distance " + std::to_string(d), [=](const CatalogCode& c, std::size_t threads) {
            auto r = effective_distance(c.code, *c.admissible, cap, threads);
            return r.exact() ? expect_eq(r.value, d) : "bound " + r.describe();
          }};
}

inline Expectation expect_deff_at_least_distance(std::size_t cap) {
  return {"effective distance >= code distance", [=](const CatalogCode& c, std::size_t threads) {
            auto e = effective_distance(c.code, *c.admissible, cap, threads);
            auto d = code_distance(c.code, std::min(c.code.n, 2 * cap + 1), threads);
            if (!d.exact() || e.value >= d.value) return std::string();
            return "d_eff " + e.describe() + " < d " + d.describe();
          }};
}

inline Expectation expect_weight2_logicals(std::set<std::string> want) {
  return {"weight-2 logical operators outside S", [want](const CatalogCode& c, std::size_t) {
            std::set<std::string> got;
            for_each_pauli(c.code.n, 2, [&](const PauliOp& p) {
              if (p.weight() == 2 && syndrome(c.code, p).none() && !in_stabilizer(c.code, p)) got.insert(render(p));
              return true;
            });
            if (got == want) return std::string();
            std::string s = "got {";
            for (const auto& g : got) s += g + " ";
            return s + "}";
          }};
}

inline Expectation expect_pure_min(const char* cls, Purity purity, std::size_t want) {
  return {std::string(purity == Purity::kPureX ? "pure-X" : "pure-Z") + " weight of " + cls + " is " +
              std::to_string(want),
          [=](const CatalogCode& c, std::size_t threads) {
            auto r = min_weight_in_class(c.code, parse_logical_class(cls, c.code.k), want, purity, threads);
            return r.exact() ? expect_eq(r.value, want) : "not found within " + std::to_string(want);
          }};
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  using namespace detail;
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    e.push_back({"transmute-7q",
                 {"7q"},
                 "[7,2,2] code transmuting single-qubit errors into logical Z on the first qubit",
                 [](const std::optional<std::string>&) {
                   return CatalogCode{"transmute-7q", codes::seven_qubit(), parse_admissible_list("ZI", 2)};
                 },
                 {expect_valid(), expect_distance(2, 7),
                  expect_weight2_logicals({"ZZIIIII", "IIZZIII", "IIIIZZI", "IIIIZIZ"}), expect_deff(3, 3),
                  expect_deff_at_least_distance(3)}});
    e.push_back({"transmute-6q",
                 {"6q"},
                 "[6,2,2] code with the non-group admissible set {I, ZI, IZ}",
                 [](const std::optional<std::string>&) {
                   return CatalogCode{"transmute-6q", codes::six_qubit(), parse_admissible_list("ZI,IZ", 2)};
                 },
                 {expect_valid(), expect_distance(2, 6),
                  expect_weight2_logicals({"ZZIIII", "IIZZII", "IIIIZZ", "IIIIXX", "IIIIYY"}),
                  {"general check passes, strong conditions fail",
                   [](const CatalogCode& c, std::size_t threads) {
                     auto errs = errors_up_to_weight(c.code.n, 1);
                     bool general = check_general_qet(c.code, *c.admissible, errs, threads).pass;
                     bool strong = strong_conditions_hold(c.code, *c.admissible, errs);
                     return general && !strong ? std::string()
                                               : "general " + std::to_string(general) + ", strong " +
                                                     std::to_string(strong);
                   }},
                  expect_deff(3, 3), expect_deff_at_least_distance(3)}});
    e.push_back({"css17",
                 {},
                 "[17,2,3/5] CSS code from the length-17 QR code; admissible {I, XI, IX}",
                 [](const std::optional<std::string>&) {
                   return CatalogCode{"css17", codes::css17(), parse_admissible_list("XI,IX", 2)};
                 },
                 {expect_valid(),
                  {"asymmetric distances 3/5",
                   [](const CatalogCode& c, std::size_t threads) {
                     auto [dx, dz] = asymmetric_distances(c.code, 6, threads);
                     if (dx.exact() && dz.exact() && dx.value == 3 && dz.value == 5) return std::string();
                     return "got " + dx.describe() + "/" + dz.describe();
                   }},
                  expect_deff(5, 3), expect_deff_at_least_distance(3)}});
    e.push_back({"tile3-lattice",
                 {"tile3"},
                 "three-qubit unit cell on a torus (param Lx,Ly; default 4,4); admissible: translates of Z1",
                 [](const std::optional<std::string>& p) {
                   auto [lx, ly] = parse_dims(p, 4, 4);
                   return make_tile3(lx, ly);
                 },
                 {expect_valid(),
                  {"k = 32", [](const CatalogCode& c, std::size_t) { return expect_eq(c.code.k, 32); }},
                  expect_distance(2, 3), expect_deff(3, 2)}});
    e.push_back({"tile2-lattice",
                 {"tile2"},
                 "two-qubit unit cell on a torus (param Lx,Ly; default 4,4)",
                 [](const std::optional<std::string>& p) {
                   auto [lx, ly] = parse_dims(p, 4, 4);
                   auto t = instantiate_torus(tile2_cell(), lx, ly);
                   return CatalogCode{"tile2-lattice:" + std::to_string(lx) + "," + std::to_string(ly),
                                      std::move(t.code), std::nullopt};
                 },
                 {expect_valid(), expect_distance(3, 4)}});
    e.push_back({"compact",
                 {},
                 "compact fermion encoding on a rotated torus of L x L unit cells (param L, even; default 4); admissible: vertex Z",
                 [](const std::optional<std::string>& p) { return make_compact(parse_size(p, 4)); },
                 {expect_valid(), expect_deff(3, 2)}});
    e.push_back({"toric",
                 {},
                 "square-torus toric code (param L; default 3)",
                 [](const std::optional<std::string>& p) {
                   std::size_t L = parse_size(p, 3);
                   return CatalogCode{"toric:" + std::to_string(L), toric_code(L), std::nullopt};
                 },
                 {expect_valid(), expect_pure_min("Z1", Purity::kPureZ, 3), expect_pure_min("Z2", Purity::kPureZ, 3),
                  expect_pure_min("Z1Z2", Purity::kPureZ, 6), expect_pure_min("X1", Purity::kPureX, 3),
                  expect_pure_min("X2", Purity::kPureX, 3), expect_pure_min("X1X2", Purity::kPureX, 6)}});
    e.push_back({"rep",
                 {},
                 "bit-flip repetition code (param n; default 3); admissible {I, Z}",
                 [](const std::optional<std::string>& p) {
                   std::size_t n = parse_size(p, 3);
                   return CatalogCode{"rep:" + std::to_string(n), codes::repetition(n), parse_admissible_list("Z", 1)};
                 },
                 {expect_valid(), expect_distance(1, 3), expect_deff(3, 2), expect_deff_at_least_distance(2)}});
    e.push_back({"inner-5q",
                 {"five-qubit"},
                 "[5,1,3] perfect code",
                 [](const std::optional<std::string>&) {
                   return CatalogCode{"inner-5q", codes::five_qubit(), std::nullopt};
                 },
                 {expect_valid(), expect_distance(3, 5)}});
    return e;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name) return &e;
  }
  return nullptr;
}

/// Loads "name" or "name:param" (e.g. "toric:5", "tile3:6,6").
inline CatalogCode load_catalog(std::string_view spec) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  std::optional<std::string> param;
  if (colon != std::string_view::npos) param = std::string(spec.substr(colon + 1));
  const auto* e = find_catalog_entry(name);
  if (!e) throw std::invalid_argument("unknown catalog entry \"" + name + "\"");
  return e->build(param);
}

struct SelftestLine {
  std::string entry;
  std::string what;
  bool pass = false;
  std::string detail;
};

inline std::vector<SelftestLine> catalog_selftest(std::size_t threads = 1) {
  std::vector<SelftestLine> out;
  for (const auto& e : catalog()) {
    CatalogCode c = e.build(std::nullopt);
    for (const auto& x : e.expectations) {
      std::string detail;
      try {
        detail = x.check(c, threads);
      } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
      }
      out.push_back({e.name, x.what, detail.empty(), detail});
    }
  }
  return out;
}

}  // namespace qet
