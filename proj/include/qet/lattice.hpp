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
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qet/f2.hpp"
#include "qet/pauli.hpp"
#include "qet/stabilizer.hpp"

namespace qet {

/// Laurent polynomial in x, y over F2: a set of exponent pairs.
class LPoly {
 public:
  using Monomial = std::pair<long, long>;

  LPoly() = default;
  LPoly(std::initializer_list<Monomial> terms) {
    for (const auto& t : terms) toggle(t);
  }

  static LPoly one() { return LPoly{{0, 0}}; }
  static LPoly monomial(long i, long j) { return LPoly{{i, j}}; }

  void toggle(const Monomial& m) {
    if (!terms_.erase(m)) terms_.insert(m);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && *terms_.begin() == Monomial{0, 0}; }
  bool constant_term() const { return terms_.count({0, 0}) != 0; }
  const std::set<Monomial>& terms() const { return terms_; }

  LPoly conjugate() const {
    LPoly out;
    for (const auto& [i, j] : terms_) out.terms_.insert({-i, -j});
    return out;
  }

  LPoly& operator+=(const LPoly& o) {
    for (const auto& t : o.terms_) toggle(t);
    return *this;
  }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly out;
    for (const auto& [i1, j1] : a.terms_)
      for (const auto& [i2, j2] : b.terms_) out.toggle({i1 + i2, j1 + j2});
    return out;
  }
  friend bool operator==(const LPoly&, const LPoly&) = default;

 private:
  std::set<Monomial> terms_;
};

/// Parses sums of monomials such as "1+x+x*y", "x^2*y^-1", "0".
inline LPoly parse_lpoly(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty polynomial", 0);
  if (t == "0") return LPoly();
  LPoly out;
  std::size_t i = 0;
  auto read_exp = [&](long& e) {
    std::size_t start = i;
    bool neg = false;
    if (i < t.size() && t[i] == '-') neg = true, ++i;
    long v = 0;
    std::size_t digits = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) v = v * 10 + (t[i++] - '0');
    if (i == digits) throw ParseError("expected exponent", start);
    e = neg ? -v : v;
  };
  while (true) {
    long ex = 0, ey = 0;
    bool any = false;
    while (true) {
      if (i >= t.size()) throw ParseError("expected monomial factor", i);
      char c = t[i];
      if (c == '1') {
        ++i;
      } else if (c == 'x' || c == 'y') {
        ++i;
        long e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          read_exp(e);
        }
        (c == 'x' ? ex : ey) += e;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      any = true;
      if (i < t.size() && t[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (any) out.toggle({ex, ey});
    if (i == t.size()) break;
    if (t[i] != '+') throw ParseError(std::string("expected '+', got '") + t[i] + "'", i);
    ++i;
  }
  return out;
}

inline std::string render(const LPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [i, j] : p.terms()) {
    if (!s.empty()) s += "+";
    std::string m;
    auto factor = [&](char v, long e) {
      if (e == 0) return;
      if (!m.empty()) m += "*";
      m += v;
      if (e != 1) m += "^" + std::to_string(e);
    };
    factor('x', i);
    factor('y', j);
    s += m.empty() ? "1" : m;
  }
  return s;
}

/// 2n Laurent polynomials: X block then Z block.
using LaurentVec = std::vector<LPoly>;

inline LaurentVec parse_laurent_vec(const std::vector<std::string>& entries) {
  LaurentVec v;
  for (const auto& e : entries) v.push_back(parse_lpoly(e));
  return v;
}

/// a†Λb = Σ_i conj(a_i)·b_{n+i} + conj(a_{n+i})·b_i. Its constant term is the
/// commutation bit of P(a) and P(b); the coefficient at (k1, k2) is the bit
/// for P(b) against P(a) translated by (k1, k2).
inline LPoly symplectic_form(const LaurentVec& a, const LaurentVec& b) {
  if (a.size() != b.size() || a.size() % 2 || a.empty())
    throw std::invalid_argument("symplectic_form: vectors must have the same even length");
  std::size_t n = a.size() / 2;
  LPoly out;
  for (std::size_t i = 0; i < n; ++i) {
    out += a[i].conjugate() * b[n + i];
    out += a[n + i].conjugate() * b[i];
  }
  return out;
}

/// Translation-invariant code: `sigma` holds s generator columns per cell;
/// optional logical vectors with Z̄_i = P(a_i) and X̄_i = P(b_i).
struct UnitCellCode {
  std::size_t n = 0;
  std::vector<LaurentVec> sigma;
  std::vector<LaurentVec> a;
  std::vector<LaurentVec> b;

  std::size_t s() const { return sigma.size(); }
};

inline Diagnostics validate_unit_cell(const UnitCellCode& u) {
  Diagnostics d;
  auto& out = d.problems;
  auto check_len = [&](const std::vector<LaurentVec>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].size() != 2 * u.n)
        out.push_back(std::string(what) + std::to_string(i + 1) + " has " + std::to_string(vs[i].size()) +
                      " entries, expected " + std::to_string(2 * u.n));
  };
  if (u.n == 0) out.push_back("n must be positive");
  check_len(u.sigma, "column ");
  check_len(u.a, "A");
  check_len(u.b, "B");
  if (u.a.size() != u.b.size()) out.push_back("A and B blocks must come in pairs");
  if (!out.empty()) return d;

  auto expect = [&](const LaurentVec& p, const LaurentVec& q, bool one, const std::string& what) {
    LPoly f = symplectic_form(p, q);
    bool ok = one ? f.is_one() : f.is_zero();
    if (!ok) out.push_back(what + " = " + render(f) + ", expected " + (one ? "1" : "0"));
  };
  for (std::size_t p = 0; p < u.s(); ++p)
    for (std::size_t q = p; q < u.s(); ++q)
      expect(u.sigma[p], u.sigma[q], false,
             "sigma" + std::to_string(p + 1) + "^dag L sigma" + std::to_string(q + 1));
  for (std::size_t p = 0; p < u.s(); ++p)
    for (std::size_t i = 0; i < u.a.size(); ++i) {
      expect(u.sigma[p], u.a[i], false, "sigma" + std::to_string(p + 1) + "^dag L A" + std::to_string(i + 1));
      expect(u.sigma[p], u.b[i], false, "sigma" + std::to_string(p + 1) + "^dag L B" + std::to_string(i + 1));
    }
  for (std::size_t i = 0; i < u.a.size(); ++i)
    for (std::size_t j = 0; j < u.a.size(); ++j) {
      std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
      expect(u.a[i], u.b[j], i == j, "A" + si + "^dag L B" + sj);
      if (j >= i) {
        expect(u.a[i], u.a[j], false, "A" + si + "^dag L A" + sj);
        expect(u.b[i], u.b[j], false, "B" + si + "^dag L B" + sj);
      }
    }
  return d;
}

// ---------------------------------------------------------------------------
// Unit-cell file format:
//   n <n> s <s>
//   <2n lines per sigma column>
//   A1:            (optional, 2n lines each; Ai/Bi blocks in pairs)
//   B1:
// '#' comment lines and blank lines are ignored.

inline UnitCellCode parse_unit_cell(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    lines.emplace_back(no, line.substr(b, e - b + 1));
  }
  if (lines.empty()) throw ParseError("unit-cell file is empty", 0);
  UnitCellCode u;
  std::size_t s = 0;
  {
    std::istringstream hdr(lines[0].second);
    std::string kn, ks;
    if (!(hdr >> kn >> u.n >> ks >> s) || kn != "n" || ks != "s" || u.n == 0)
      throw ParseError("header must be \"n <n> s <s>\"", lines[0].first);
  }
  std::size_t idx = 1;
  auto read_vec = [&](const std::string& what) {
    LaurentVec v;
    for (std::size_t r = 0; r < 2 * u.n; ++r, ++idx) {
      if (idx >= lines.size()) throw ParseError("missing entry in " + what, lines.back().first + 1);
      try {
        v.push_back(parse_lpoly(lines[idx].second));
      } catch (const ParseError& e) {
        throw ParseError(what + ": " + e.what(), lines[idx].first);
      }
    }
    return v;
  };
  for (std::size_t c = 0; c < s; ++c) u.sigma.push_back(read_vec("column " + std::to_string(c + 1)));
  while (idx < lines.size()) {
    const auto& [ln, tag] = lines[idx];
    if (tag.size() < 3 || (tag[0] != 'A' && tag[0] != 'B') || tag.back() != ':')
      throw ParseError("expected an \"A<i>:\" or \"B<i>:\" block, got \"" + tag + "\"", ln);
    std::size_t i = std::strtoul(tag.substr(1, tag.size() - 2).c_str(), nullptr, 10);
    auto& target = tag[0] == 'A' ? u.a : u.b;
    if (i != target.size() + 1) throw ParseError("logical blocks must be numbered 1, 2, ... in order", ln);
    ++idx;
    target.push_back(read_vec(tag.substr(0, tag.size() - 1)));
  }
  if (u.a.size() != u.b.size()) throw ParseError("A and B blocks must come in pairs", lines.back().first);
  return u;
}

inline std::string render_unit_cell(const UnitCellCode& u) {
  std::string s = "n " + std::to_string(u.n) + " s " + std::to_string(u.s()) + "\n";
  for (std::size_t c = 0; c < u.s(); ++c) {
    s += "# column " + std::to_string(c + 1) + "\n";
    for (const auto& p : u.sigma[c]) s += render(p) + "\n";
  }
  for (std::size_t i = 0; i < u.a.size(); ++i) {
    s += "A" + std::to_string(i + 1) + ":\n";
    for (const auto& p : u.a[i]) s += render(p) + "\n";
    s += "B" + std::to_string(i + 1) + ":\n";
    for (const auto& p : u.b[i]) s += render(p) + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Torus instantiation.

/// Periodic Lx x Ly instance. Qubit (cx, cy, q) has index (cy·Lx + cx)·n + q.
struct TorusCode {
  std::size_t n = 0, lx = 0, ly = 0;
  StabilizerCode code;
  /// Every translate of every column, before dependent rows were dropped;
  /// row (column c, cell t) sits at t·s + c.
  std::vector<PauliOp> all_rows;
  std::size_t dropped = 0;
  /// True when the logical basis is the translates of the cell's logical
  /// vectors; false when it came from the standard form.
  bool cell_logicals = false;

  std::size_t qubit(std::size_t cx, std::size_t cy, std::size_t q) const { return (cy * lx + cx) * n + q; }
  std::size_t cells() const { return lx * ly; }

  PauliOp translate(const PauliOp& p, long dx, long dy) const {
    PauliOp out(p.num_qubits());
    for (std::size_t idx = 0; idx < p.num_qubits(); ++idx) {
      Letter l = p.at(idx);
      if (l == Letter::I) continue;
      std::size_t cell = idx / n, q = idx % n;
      std::size_t cx = cell % lx, cy = cell / lx;
      std::size_t nx = static_cast<std::size_t>(((static_cast<long>(cx) + dx) % static_cast<long>(lx) + static_cast<long>(lx)) %
                                                static_cast<long>(lx));
      std::size_t ny = static_cast<std::size_t>(((static_cast<long>(cy) + dy) % static_cast<long>(ly) + static_cast<long>(ly)) %
                                                static_cast<long>(ly));
      out.set(qubit(nx, ny, q), l);
    }
    return out;
  }
};

/// P(v) placed with its origin at cell (cx, cy), exponents wrapped onto the
/// torus. Two terms of one entry landing on the same qubit is reported as a
/// degenerate overlap.
inline PauliOp place_on_torus(const LaurentVec& v, std::size_t n, std::size_t lx, std::size_t ly, std::size_t cx,
                              std::size_t cy) {
  if (v.size() != 2 * n) throw std::invalid_argument("place_on_torus: vector has the wrong length");
  BitVec x(n * lx * ly), z(n * lx * ly);
  auto wrap = [](long a, std::size_t m) {
    long r = a % static_cast<long>(m);
    return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(m) : r);
  };
  for (std::size_t e = 0; e < 2 * n; ++e) {
    std::set<std::size_t> hit;
    for (const auto& [i, j] : v[e].terms()) {
      std::size_t idx = (wrap(static_cast<long>(cy) + j, ly) * lx + wrap(static_cast<long>(cx) + i, lx)) * n + e % n;
      if (!hit.insert(idx).second)
        throw std::invalid_argument("instantiate_torus: degenerate overlap, " + render(v[e]) + " wraps onto itself on a " +
                                    std::to_string(lx) + "x" + std::to_string(ly) + " torus");
      (e < n ? x : z).flip(idx);
    }
  }
  return PauliOp(x, z);
}

inline TorusCode instantiate_torus(const UnitCellCode& u, std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) throw std::invalid_argument("instantiate_torus: torus must be at least 2x2");
  auto diag = validate_unit_cell(u);
  if (!diag.ok()) throw std::invalid_argument("instantiate_torus: invalid unit cell:\n" + diag.summary());
  TorusCode t;
  t.n = u.n;
  t.lx = lx;
  t.ly = ly;
  const std::size_t nq = u.n * lx * ly;
  std::vector<PauliOp> kept;
  EchelonBasis basis(2 * nq);
  for (std::size_t cy = 0; cy < ly; ++cy)
    for (std::size_t cx = 0; cx < lx; ++cx)
      for (const auto& col : u.sigma) {
        PauliOp p = place_on_torus(col, u.n, lx, ly, cx, cy);
        t.all_rows.push_back(p);
        if (basis.insert(p.symplectic()))
          kept.push_back(p);
        else
          ++t.dropped;
      }
  t.code.n = nq;
  t.code.k = nq - kept.size();
  t.code.generators = kept;
  if (!u.a.empty()) {
    StabilizerCode trial = t.code;
    for (std::size_t cy = 0; cy < ly; ++cy)
      for (std::size_t cx = 0; cx < lx; ++cx)
        for (std::size_t i = 0; i < u.a.size(); ++i) {
          trial.logical_z.push_back(place_on_torus(u.a[i], u.n, lx, ly, cx, cy));
          trial.logical_x.push_back(place_on_torus(u.b[i], u.n, lx, ly, cx, cy));
        }
    if (validate_code(trial).ok()) {
      t.code = std::move(trial);
      t.cell_logicals = true;
      return t;
    }
  }
  if (t.code.k > 0) t.code = with_standard_basis(std::move(t.code));
  return t;
}

// ---------------------------------------------------------------------------
// Named lattice constructions.

/// Three qubits per cell, one generator column; logical vectors included.
inline UnitCellCode tile3_cell() {
  UnitCellCode u;
  u.n = 3;
  u.sigma.push_back(parse_laurent_vec({"x*y", "y+x*y", "x+x*y", "x+y", "1+x+x*y", "1+y+x*y"}));
  u.a.push_back(parse_laurent_vec({"0", "1", "1", "0", "1", "1"}));
  u.a.push_back(parse_laurent_vec({"0", "1", "0", "x*y", "0", "1"}));
  u.b.push_back(parse_laurent_vec({"0", "0", "0", "1+y", "0", "1"}));
  u.b.push_back(parse_laurent_vec({"0", "1", "0", "x+y+x*y", "1", "0"}));
  return u;
}

/// Two qubits per cell, single-error-correcting comparison code.
inline UnitCellCode tile2_cell() {
  UnitCellCode u;
  u.n = 2;
  u.sigma.push_back(parse_laurent_vec({"x*y", "x*y+y", "1+x+y", "1+x*y"}));
  return u;
}

/// Square-torus toric code: qubits h(x,y) = 2(yL+x), v(x,y) = 2(yL+x)+1.
inline StabilizerCode toric_code(std::size_t L) {
  if (L < 2) throw std::invalid_argument("toric_code: L must be at least 2");
  const std::size_t n = 2 * L * L;
  auto h = [&](std::size_t x, std::size_t y) { return 2 * ((y % L) * L + (x % L)); };
  auto v = [&](std::size_t x, std::size_t y) { return 2 * ((y % L) * L + (x % L)) + 1; };
  StabilizerCode c;
  c.n = n;
  c.k = 2;
  auto op = [&](Letter l, std::initializer_list<std::size_t> qs) {
    PauliOp p(n);
    for (auto q : qs) p.set(q, l);
    return p;
  };
  // The last plaquette and last vertex are products of the others.
  for (std::size_t i = 0; i + 1 < L * L; ++i) {
    std::size_t x = i % L, y = i / L;
    c.generators.push_back(op(Letter::Z, {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}));
  }
  for (std::size_t i = 0; i + 1 < L * L; ++i) {
    std::size_t x = i % L, y = i / L;
    c.generators.push_back(op(Letter::X, {h(x, y), h(x + L - 1, y), v(x, y), v(x, y + L - 1)}));
  }
  PauliOp z1(n), z2(n), x1(n), x2(n);
  for (std::size_t t = 0; t < L; ++t) {
    z1.set(h(t, 0), Letter::Z);
    z2.set(v(0, t), Letter::Z);
    x1.set(h(0, t), Letter::X);
    x2.set(v(t, 0), Letter::X);
  }
  c.logical_x = {x1, x2};
  c.logical_z = {z1, z2};
  return c;
}

/// Fermion-to-qubit encoding on a periodic square lattice: vertex qubits plus
/// one auxiliary qubit per odd face, stabilized by loops of edge operators
/// around even faces.
struct CompactEncoding {
  std::size_t L = 0;
  StabilizerCode code;
  std::vector<std::size_t> vertex_qubits;
  std::vector<std::size_t> face_qubits;
  std::size_t dropped = 0;
};

/// The lattice is Z² modulo (L,L) and (L,-L): 2L² vertices and L² odd faces
/// in L² cells of three qubits. Cell (i, j) has base point (i+j, i-j) and
/// index j·L+i; its qubits are the vertex at the base, the odd face whose
/// lower-left corner is base+(1,0), and the vertex at base+(1,0).
inline CompactEncoding compact_encoding(std::size_t L) {
  if (L < 4 || L % 2) throw std::invalid_argument("compact_encoding: L must be even and at least 4");
  const long m = static_cast<long>(2 * L);
  const std::size_t n = 3 * L * L;
  auto cell_of = [&](long x, long y, std::size_t type_even, std::size_t type_odd) {
    long u = ((x + y) % m + m) % m;
    long w = ((x - y) % m + m) % m;
    if (u % 2 == 0) return static_cast<std::size_t>(((w / 2) * static_cast<long>(L) + u / 2) * 3) + type_even;
    return static_cast<std::size_t>((((w - 1) / 2) * static_cast<long>(L) + (u - 1) / 2) * 3) + type_odd;
  };
  auto vertex = [&](long x, long y) { return cell_of(x, y, 0, 2); };
  auto odd_face = [&](long x, long y) {
    if (((x + y) % 2 + 2) % 2 != 1) throw std::logic_error("compact_encoding: not an odd face");
    return cell_of(x, y, 0, 1);
  };

  // Edge operator X_tail Y_head on the vertices times X (vertical edge) or
  // Y (horizontal edge) on the adjacent odd face. Orientation circulates
  // around the adjacent even face: counterclockwise on even rows, clockwise
  // on odd rows.
  auto edge = [&](long x0, long y0, long x1, long y1) {
    bool horizontal = y0 == y1;
    long ax = std::min(x0, x1), ay = std::min(y0, y1);
    long bx = horizontal ? ax + 1 : ax, by = horizontal ? ay : ay + 1;
    std::pair<long, long> f1{ax, ay}, f2 = horizontal ? std::pair<long, long>{ax, ay - 1} : std::pair<long, long>{ax - 1, ay};
    bool f1_even = ((f1.first + f1.second) % 2 + 2) % 2 == 0;
    auto even = f1_even ? f1 : f2;
    auto odd = f1_even ? f2 : f1;
    std::pair<long, long> corners[4] = {{even.first, even.second},
                                        {even.first + 1, even.second},
                                        {even.first + 1, even.second + 1},
                                        {even.first, even.second + 1}};
    auto index = [&](long x, long y) {
      for (int c = 0; c < 4; ++c)
        if (corners[c].first == x && corners[c].second == y) return c;
      throw std::logic_error("compact_encoding: edge not on face");
    };
    bool ccw = (index(bx, by) - index(ax, ay) + 4) % 4 == 1;
    bool want_ccw = ((even.second % 2) + 2) % 2 == 0;
    std::pair<long, long> tail{ax, ay}, head{bx, by};
    if (ccw != want_ccw) std::swap(tail, head);
    PauliOp p(n);
    p.set(vertex(tail.first, tail.second), Letter::X);
    p.set(vertex(head.first, head.second), Letter::Y);
    p.set(odd_face(odd.first, odd.second), horizontal ? Letter::Y : Letter::X);
    return p;
  };

  CompactEncoding out;
  out.L = L;
  std::vector<PauliOp> kept;
  EchelonBasis basis(2 * n);
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t i = 0; i < L; ++i) {
      long x = static_cast<long>(i + j), y = static_cast<long>(i) - static_cast<long>(j);
      PauliOp loop = edge(x, y, x + 1, y) * edge(x + 1, y, x + 1, y + 1) * edge(x, y + 1, x + 1, y + 1) *
                     edge(x, y, x, y + 1);
      if (basis.insert(loop.symplectic()))
        kept.push_back(loop);
      else
        ++out.dropped;
    }
  for (std::size_t c = 0; c < L * L; ++c) {
    out.vertex_qubits.push_back(3 * c);
    out.vertex_qubits.push_back(3 * c + 2);
    out.face_qubits.push_back(3 * c + 1);
  }
  out.code.n = n;
  out.code.k = n - kept.size();
  out.code.generators = std::move(kept);
  out.code = with_standard_basis(std::move(out.code));
  return out;
}

}  // namespace qet
