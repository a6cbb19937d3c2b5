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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qet {

/// Fixed-length vector over F2, packed 64 bits per word.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison and hashing see only the logical payload.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_(word_count(n), 0) {}

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVec from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitVec: expected '0' or '1' at position " + std::to_string(i));
      }
    }
    return v;
  }

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  static constexpr std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  void resize(std::size_t n) {
    words_.resize(word_count(n), 0);
    n_ = n;
    clear_tail();
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return n_;
  }

  BitVec& operator^=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  /// Concatenation: this followed by `tail`.
  BitVec concat(const BitVec& tail) const {
    BitVec out(n_ + tail.n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) out.set(i);
    for (std::size_t i = 0; i < tail.n_; ++i)
      if (tail.get(i)) out.set(n_ + i);
    return out;
  }
  BitVec slice(std::size_t begin, std::size_t len) const {
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
      if (get(begin + i)) out.set(i);
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9E3779B97F4A7C15ull;
    for (Word w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
    return h;
  }

 private:
  void check_same(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: length mismatch");
  }
  void clear_tail() {
    if (n_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// Inner product over F2.
inline bool dot(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  auto wa = a.words();
  auto wb = b.words();
  BitVec::Word acc = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) acc ^= wa[k] & wb[k];
  return std::popcount(acc) & 1;
}

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

/// Row-major dense matrix over F2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}

  static BitMatrix from_rows(std::size_t cols, std::vector<BitVec> rows) {
    BitMatrix m(cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
  }
  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.front().size());
    for (const auto& r : rows) m.append_row(BitVec::from_string(r));
    return m;
  }
  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  std::span<const BitVec> row_span() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(BitVec r) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    rows_.push_back(std::move(r));
  }

  /// m·v, one output bit per row.
  BitVec apply(const BitVec& v) const {
    BitVec out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
      if (dot(rows_[i], v)) out.set(i);
    return out;
  }

  /// v·m, the row combination selected by `v`.
  BitVec combine(const BitVec& v) const {
    if (v.size() != rows()) throw std::invalid_argument("BitMatrix::combine: length mismatch");
    BitVec out(cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      if (v.get(i)) out ^= rows_[i];
    return out;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i);
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrix: product shape mismatch");
    BitMatrix out(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(b.combine(a.row(i)));
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows_) {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows collect at the bottom; the shape is kept.
inline RrefResult rref(BitMatrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    std::swap(m.row(p), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

/// Basis of {v : m·v = 0}, one row per free column in ascending order.
inline BitMatrix kernel_basis(const BitMatrix& m) {
  auto [reduced, r, pivots] = rref(m);
  BitMatrix basis(m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < r; ++i)
      if (reduced.get(i, f)) v.set(pivots[i]);
    basis.append_row(std::move(v));
  }
  return basis;
}

/// Some x with m·x = b, or nullopt when the system is inconsistent.
inline std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length must equal row count");
  BitMatrix aug(m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVec row = m.row(i);
    row.resize(m.cols() + 1);
    row.set(m.cols(), b.get(i));
    aug.append_row(std::move(row));
  }
  auto [reduced, r, pivots] = rref(std::move(aug));
  if (r > 0 && pivots[r - 1] == m.cols()) return std::nullopt;
  BitVec x(m.cols());
  for (std::size_t i = 0; i < r; ++i)
    if (reduced.get(i, m.cols())) x.set(pivots[i]);
  return x;
}

/// Incrementally maintained echelon basis; answers span-membership queries
/// and reports which inserted vectors were independent.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return n_; }

  /// Reduces `v` against the basis; the result is zero iff v is in the span.
  BitVec reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
  }
  bool contains(const BitVec& v) const { return reduce(v).none(); }

  /// Adds v if it is independent; returns whether it was added.
  bool insert(const BitVec& v) {
    BitVec r = reduce(v);
    std::size_t p = r.first_set();
    if (p == n_) return false;
    for (auto& row : rows_)
      if (row.get(p)) row ^= r;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qet

template <>
struct std::hash<qet::BitVec> {
  std::size_t operator()(const qet::BitVec& v) const { return v.hash(); }
};
