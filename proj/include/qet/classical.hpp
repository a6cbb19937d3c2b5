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
#include <bit>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qet/f2.hpp"
#include "qet/pauli.hpp"
#include "qet/stabilizer.hpp"

namespace qet {

/// Polynomial over F2; coefficient of x^i at position i, no trailing zeros.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(BitVec coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly2 monomial(std::size_t d) { return Poly2(BitVec::unit(d + 1, d)); }
  static Poly2 one() { return monomial(0); }

  /// x^n + 1.
  static Poly2 cyclic_modulus(std::size_t n) {
    BitVec b(n + 1);
    b.set(0);
    b.set(n);
    return Poly2(b);
  }

  bool is_zero() const { return c_.size() == 0; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool coeff(std::size_t i) const { return i < c_.size() && c_.get(i); }
  const BitVec& coeffs() const { return c_; }

  /// Coefficients padded or cut to length n.
  BitVec to_vector(std::size_t n) const {
    BitVec v = c_;
    v.resize(n);
    return v;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    std::size_t len = std::max(a.c_.size(), b.c_.size());
    BitVec x = a.c_, y = b.c_;
    x.resize(len);
    y.resize(len);
    return Poly2(x ^ y);
  }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    BitVec out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_.get(i))
        for (std::size_t j = 0; j < b.c_.size(); ++j)
          if (b.c_.get(j)) out.flip(i + j);
    return Poly2(out);
  }

  /// Quotient and remainder.
  friend std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("Poly2: division by zero");
    BitVec r = a.c_;
    long db = b.degree();
    if (a.degree() < db) return {Poly2(), a};
    BitVec q(static_cast<std::size_t>(a.degree() - db + 1));
    for (long d = a.degree(); d >= db; --d) {
      if (!r.get(static_cast<std::size_t>(d))) continue;
      std::size_t shift = static_cast<std::size_t>(d - db);
      q.set(shift);
      for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j)
        if (b.c_.get(j)) r.flip(j + shift);
    }
    return {Poly2(q), Poly2(r)};
  }
  friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void trim() {
    std::size_t len = c_.size();
    while (len > 0 && !c_.get(len - 1)) --len;
    c_.resize(len);
  }
  BitVec c_;
};

/// Parses "1+x^3+x^4+x^5+x^8"; terms in any order, repeated terms cancel.
inline Poly2 parse_poly(std::string_view s) {
  std::vector<std::size_t> exps;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&](std::size_t& out) {
    std::size_t start = i;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out = out * 10 + static_cast<std::size_t>(s[i++] - '0');
    if (i == start) throw ParseError("expected exponent", i);
  };
  skip_ws();
  if (i < s.size() && s[i] == '0' && s.find_first_not_of(" \t0") == std::string_view::npos) return Poly2();
  while (true) {
    skip_ws();
    if (i >= s.size()) throw ParseError("expected term", i);
    if (s[i] == '1') {
      ++i;
      exps.push_back(0);
    } else if (s[i] == 'x') {
      ++i;
      std::size_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        read_int(e);
      }
      exps.push_back(e);
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != '+') throw ParseError(std::string("expected '+', got '") + s[i] + "'", i);
    ++i;
  }
  std::size_t top = exps.empty() ? 0 : *std::max_element(exps.begin(), exps.end());
  BitVec b(top + 1);
  for (auto e : exps) b.flip(e);
  return Poly2(b);
}

inline std::string render(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    if (!p.coeff(i)) continue;
    if (!s.empty()) s += "+";
    s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

/// Binary linear code. The generator keeps the rows it was built from.
struct LinearCode {
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix generator;
  BitMatrix parity_check;

  /// Code spanned by `rows`; the rows must be independent.
  static LinearCode from_generator(const BitMatrix& rows) {
    if (rank(rows) != rows.rows()) throw std::invalid_argument("LinearCode: generator rows are dependent");
    LinearCode c;
    c.n = rows.cols();
    c.k = rows.rows();
    c.generator = rows;
    c.parity_check = kernel_basis(rows);
    return c;
  }

  bool contains(const BitVec& v) const { return parity_check.apply(v).none(); }
};

/// Codewords of the cyclic code of length n generated by g, as length-n
/// vectors g, x·g, ..., x^{n-deg g-1}·g.
inline LinearCode cyclic_code(std::size_t n, const Poly2& g) {
  if (g.is_zero() || static_cast<std::size_t>(g.degree()) >= n)
    throw std::invalid_argument("cyclic_code: generator degree must be below n");
  if (!(Poly2::cyclic_modulus(n) % g).is_zero())
    throw std::invalid_argument("cyclic_code: " + render(g) + " does not divide x^" + std::to_string(n) + "+1");
  std::size_t k = n - static_cast<std::size_t>(g.degree());
  BitMatrix rows(n);
  for (std::size_t i = 0; i < k; ++i) rows.append_row((Poly2::monomial(i) * g).to_vector(n));
  return LinearCode::from_generator(rows);
}

/// Cyclic shifts x^i·p mod x^n+1 for i in [0, count).
inline BitMatrix cyclic_shifts(std::size_t n, const Poly2& p, std::size_t count) {
  BitMatrix rows(n);
  Poly2 mod = Poly2::cyclic_modulus(n);
  for (std::size_t i = 0; i < count; ++i) rows.append_row(((Poly2::monomial(i) * p) % mod).to_vector(n));
  return rows;
}

inline LinearCode subcode_from_rows(const LinearCode& c, const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw std::invalid_argument("subcode_from_rows: empty selection");
  BitMatrix g(c.n);
  for (auto r : rows) {
    if (r >= c.generator.rows()) throw std::out_of_range("subcode_from_rows: row index out of range");
    g.append_row(c.generator.row(r));
  }
  return LinearCode::from_generator(g);
}

inline LinearCode dual(const LinearCode& c) {
  LinearCode d;
  d.n = c.n;
  d.k = c.n - c.k;
  d.generator = c.parity_check;
  d.parity_check = c.generator;
  return d;
}

struct ClassicalDistance {
  DistanceResult::Kind kind = DistanceResult::Kind::kExact;
  std::size_t value = 0;
  std::size_t cap = 0;
  std::optional<BitVec> codeword;

  bool exact() const { return kind == DistanceResult::Kind::kExact; }
};

/// Minimum nonzero codeword weight. Walks all 2^k codewords in Gray-code
/// order when k <= 25; otherwise checks every vector of weight <= cap
/// against the parity check and reports cap+1 as a bound if none is found.
inline ClassicalDistance classical_distance(const LinearCode& c, std::size_t cap) {
  ClassicalDistance res;
  res.cap = cap;
  if (c.k == 0) {
    res.kind = DistanceResult::Kind::kUnbounded;
    return res;
  }
  if (c.k <= 25) {
    BitVec cur(c.n);
    std::size_t best = c.n + 1;
    std::uint64_t total = std::uint64_t{1} << c.k;
    for (std::uint64_t i = 1; i < total; ++i) {
      cur ^= c.generator.row(static_cast<std::size_t>(std::countr_zero(i)));
      std::size_t w = cur.popcount();
      if (w < best) {
        best = w;
        res.codeword = cur;
      }
    }
    res.value = best;
    return res;
  }
  for (std::size_t w = 1; w <= std::min(cap, c.n); ++w) {
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    do {
      BitVec v(c.n);
      for (auto q : support) v.set(q);
      if (c.contains(v)) {
        res.value = w;
        res.codeword = v;
        return res;
      }
    } while (next_combination(support, c.n));
  }
  res.kind = DistanceResult::Kind::kLowerBound;
  res.value = cap + 1;
  return res;
}

/// Thrown when the CSS containment fails; names one offending row pair.
class ContainmentError : public std::invalid_argument {
 public:
  ContainmentError(std::size_t x_row, std::size_t z_row)
      : std::invalid_argument("css_build: X row " + std::to_string(x_row) + " and Z row " + std::to_string(z_row) +
                              " anticommute (dual containment fails)"),
        x_row_(x_row),
        z_row_(z_row) {}
  std::size_t x_row() const { return x_row_; }
  std::size_t z_row() const { return z_row_; }

 private:
  std::size_t x_row_, z_row_;
};

/// CSS code with X-type generators from the rows of P1 (parity check of c1)
/// and Z-type generators from the rows of P2 (parity check of c2). Pure-X
/// logicals then live in c2 and pure-Z logicals in c1.
inline StabilizerCode css_build(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("css_build: codes have different lengths");
  const auto& p1 = c1.parity_check;
  const auto& p2 = c2.parity_check;
  for (std::size_t i = 0; i < p1.rows(); ++i)
    for (std::size_t j = 0; j < p2.rows(); ++j)
      if (dot(p1.row(i), p2.row(j))) throw ContainmentError(i, j);
  std::vector<PauliOp> gens;
  for (std::size_t i = 0; i < p1.rows(); ++i) gens.emplace_back(p1.row(i), BitVec(c1.n));
  for (std::size_t j = 0; j < p2.rows(); ++j) gens.emplace_back(BitVec(c1.n), p2.row(j));
  return standard_form(gens, c1.n);
}

inline bool is_css(const StabilizerCode& c) {
  for (const auto& g : c.generators)
    if (g.x().any() && g.z().any()) return false;
  return true;
}

/// Minimum weights of pure-X and pure-Z logical operators outside S.
inline std::pair<DistanceResult, DistanceResult> asymmetric_distances(const StabilizerCode& c, std::size_t cap,
                                                                      std::size_t threads = 1) {
  if (!is_css(c)) throw std::invalid_argument("asymmetric_distances: code is not CSS");
  auto nontrivial = [](const LogicalClass& cls) { return !cls.is_zero(); };
  return {min_weight_search(c, cap, nontrivial, Purity::kPureX, threads),
          min_weight_search(c, cap, nontrivial, Purity::kPureZ, threads)};
}

/// Class -> count over all single-letter operators of weight w in N(S) \ S.
inline std::map<LogicalClass, std::size_t> pure_logical_classes(const StabilizerCode& c, std::size_t w, Letter letter) {
  std::map<LogicalClass, std::size_t> out;
  if (w == 0 || w > c.n) return out;
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = i;
  do {
    PauliOp p(c.n);
    for (auto q : support) p.set(q, letter);
    if (syndrome(c, p).any()) continue;
    auto cls = raw_class(c, p);
    if (!cls.is_zero()) ++out[cls];
  } while (next_combination(support, c.n));
  return out;
}

}  // namespace qet
