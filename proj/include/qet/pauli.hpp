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

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qet/f2.hpp"

namespace qet {

/// Thrown for malformed text input; `position` is the offending character
/// (or line, for file parsers) index.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Single-qubit letters in enumeration order.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Letter, 3> kNonIdentityLetters = {Letter::X, Letter::Y, Letter::Z};

inline constexpr char letter_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

/// n-qubit Pauli operator modulo global phase, stored as (x | z).
///
/// Qubit i carries I, X, Z, Y for (x_i, z_i) = (0,0), (1,0), (0,1), (1,1).
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(std::size_t n) : x_(n), z_(n) {}
  PauliOp(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) throw std::invalid_argument("PauliOp: x/z length mismatch");
  }

  static PauliOp identity(std::size_t n) { return PauliOp(n); }

  static PauliOp single(std::size_t n, std::size_t qubit, Letter l) {
    PauliOp p(n);
    p.set(qubit, l);
    return p;
  }

  /// Builds from a 2n-bit symplectic vector laid out (x | z).
  static PauliOp from_symplectic(const BitVec& v) {
    if (v.size() % 2) throw std::invalid_argument("PauliOp: symplectic vector must have even length");
    std::size_t n = v.size() / 2;
    return PauliOp(v.slice(0, n), v.slice(n, n));
  }

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }

  Letter at(std::size_t q) const {
    bool x = x_.get(q);
    bool z = z_.get(q);
    if (x) return z ? Letter::Y : Letter::X;
    return z ? Letter::Z : Letter::I;
  }
  void set(std::size_t q, Letter l) {
    x_.set(q, l == Letter::X || l == Letter::Y);
    z_.set(q, l == Letter::Z || l == Letter::Y);
  }

  BitVec symplectic() const { return x_.concat(z_); }

  std::size_t weight() const { return (x_ | z_).popcount(); }
  bool is_identity() const { return x_.none() && z_.none(); }

  PauliOp& operator*=(const PauliOp& o) {
    check_same(o);
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
  }
  friend PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }

  friend bool operator==(const PauliOp& a, const PauliOp& b) = default;
  friend auto operator<=>(const PauliOp& a, const PauliOp& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

  std::size_t hash() const { return x_.hash() * 31 + z_.hash(); }

  void check_same(const PauliOp& o) const {
    if (o.num_qubits() != num_qubits())
      throw std::invalid_argument("Pauli dimension mismatch: " + std::to_string(num_qubits()) + " vs " +
                                  std::to_string(o.num_qubits()));
  }

 private:
  BitVec x_;
  BitVec z_;
};

struct PauliHash {
  std::size_t operator()(const PauliOp& p) const { return p.hash(); }
};

/// Parses a string over {I,X,Y,Z}, qubit 0 leftmost.
inline PauliOp parse_pauli(std::string_view s) {
  if (s.empty()) throw ParseError("empty Pauli string", 0);
  PauliOp p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I': break;
      case 'X': p.set(i, Letter::X); break;
      case 'Y': p.set(i, Letter::Y); break;
      case 'Z': p.set(i, Letter::Z); break;
      default:
        throw ParseError(std::string("invalid Pauli character '") + s[i] + "'", i);
    }
  }
  return p;
}

inline std::string render(const PauliOp& p) {
  std::string s(p.num_qubits(), 'I');
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    bool x = p.x().get(q);
    bool z = p.z().get(q);
    s[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

inline PauliOp multiply(const PauliOp& a, const PauliOp& b) { return a * b; }

/// Symplectic product x_a·z_b + z_a·x_b; true means the operators anticommute.
inline bool anticommutes(const PauliOp& a, const PauliOp& b) {
  a.check_same(b);
  return dot(a.x(), b.z()) ^ dot(a.z(), b.x());
}

inline bool commutes(const PauliOp& a, const PauliOp& b) { return !anticommutes(a, b); }

inline std::size_t weight(const PauliOp& p) { return p.weight(); }

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of non-identity Paulis on n qubits with weight ≤ max_weight.
inline std::uint64_t count_paulis(std::size_t n, std::size_t max_weight) {
  std::uint64_t total = 0;
  std::uint64_t pow3 = 1;
  for (std::size_t w = 1; w <= max_weight && w <= n; ++w) {
    pow3 *= 3;
    total += binomial(n, w) * pow3;
  }
  return total;
}

/// Advances `support` (strictly increasing qubit indices) to the next
/// combination in lexicographic order; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& support, std::size_t n) {
  std::size_t w = support.size();
  for (std::size_t i = w; i-- > 0;) {
    if (support[i] < n - w + i) {
      ++support[i];
      for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Calls fn(p) for every non-identity Pauli of weight ≤ max_weight, ordered by
/// weight, then support (lexicographic), then letters (X < Y < Z, leftmost
/// qubit most significant). fn may return false to stop early.
template <class Fn>
void for_each_pauli(std::size_t n, std::size_t max_weight, Fn&& fn) {
  if (max_weight > n) throw std::invalid_argument("for_each_pauli: max_weight exceeds qubit count");
  for (std::size_t w = 1; w <= max_weight; ++w) {
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    do {
      std::vector<std::uint8_t> digits(w, 0);
      while (true) {
        PauliOp p(n);
        for (std::size_t i = 0; i < w; ++i) p.set(support[i], kNonIdentityLetters[digits[i]]);
        if (!fn(static_cast<const PauliOp&>(p))) return;
        std::size_t i = w;
        while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
    } while (next_combination(support, n));
  }
}

inline std::vector<PauliOp> enumerate_paulis(std::size_t n, std::size_t max_weight) {
  std::vector<PauliOp> out;
  out.reserve(static_cast<std::size_t>(count_paulis(n, max_weight)));
  for_each_pauli(n, max_weight, [&](const PauliOp& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

/// Identity followed by every Pauli of weight 1..max_weight, in enumeration order.
inline std::vector<PauliOp> errors_up_to_weight(std::size_t n, std::size_t max_weight) {
  std::vector<PauliOp> out;
  out.push_back(PauliOp::identity(n));
  for_each_pauli(n, max_weight, [&](const PauliOp& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace qet

template <>
struct std::hash<qet::PauliOp> {
  std::size_t operator()(const qet::PauliOp& p) const { return p.hash(); }
};
