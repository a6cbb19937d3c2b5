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
#include <atomic>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qet/f2.hpp"
#include "qet/parallel.hpp"
#include "qet/pauli.hpp"

namespace qet {

/// [n, k] stabilizer code with a chosen logical basis.
///
/// The logical basis fixes the identification of N(S)/S with the k-qubit
/// logical Pauli group; every class computation is relative to it.
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOp> generators;
  std::vector<PauliOp> logical_x;
  std::vector<PauliOp> logical_z;

  std::size_t num_generators() const { return generators.size(); }
};

/// Image of an N(S) element in the logical Pauli group, as 2k bits:
/// bit i is anticommutation with Z̄_i, bit k+i with X̄_i. The class of X̄_i has
/// bit i set; equivalently the bits are the (x | z) vector of a k-qubit Pauli.
struct LogicalClass {
  BitVec bits;

  LogicalClass() = default;
  explicit LogicalClass(BitVec b) : bits(std::move(b)) {}
  static LogicalClass zero(std::size_t k) { return LogicalClass(BitVec(2 * k)); }
  static LogicalClass from_logical_pauli(const PauliOp& p) { return LogicalClass(p.symplectic()); }

  std::size_t k() const { return bits.size() / 2; }
  bool is_zero() const { return bits.none(); }
  PauliOp as_logical_pauli() const { return PauliOp::from_symplectic(bits); }

  LogicalClass& operator^=(const LogicalClass& o) {
    bits ^= o.bits;
    return *this;
  }
  friend LogicalClass operator^(LogicalClass a, const LogicalClass& b) { return a ^= b; }
  friend bool operator==(const LogicalClass&, const LogicalClass&) = default;
  friend auto operator<=>(const LogicalClass& a, const LogicalClass& b) { return a.bits <=> b.bits; }
};

struct LogicalClassHash {
  std::size_t operator()(const LogicalClass& c) const { return c.bits.hash(); }
};

/// Renders a class as a logical Pauli string over the k logical qubits.
inline std::string render(const LogicalClass& c) { return render(c.as_logical_pauli()); }

/// Parses "Z1Z2"-style indexed products (1-based) or a plain k-letter Pauli string.
inline LogicalClass parse_logical_class(std::string_view s, std::size_t k) {
  bool indexed = std::any_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  if (!indexed) {
    PauliOp p = parse_pauli(s);
    if (p.num_qubits() != k)
      throw ParseError("logical Pauli has " + std::to_string(p.num_qubits()) + " letters, expected " +
                           std::to_string(k),
                       0);
    return LogicalClass::from_logical_pauli(p);
  }
  PauliOp acc(k);
  std::size_t i = 0;
  while (i < s.size()) {
    char letter = s[i];
    if (letter != 'X' && letter != 'Y' && letter != 'Z' && letter != 'I')
      throw ParseError(std::string("expected logical letter, got '") + letter + "'", i);
    std::size_t j = i + 1;
    std::size_t index = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') index = index * 10 + static_cast<std::size_t>(s[j++] - '0');
    if (j == i + 1) throw ParseError("missing logical qubit index", j);
    if (index == 0 || index > k) throw ParseError("logical qubit index out of range", i + 1);
    Letter l = letter == 'X' ? Letter::X : letter == 'Y' ? Letter::Y : letter == 'Z' ? Letter::Z : Letter::I;
    acc *= PauliOp::single(k, index - 1, l);
    i = j;
  }
  return LogicalClass::from_logical_pauli(acc);
}

struct Diagnostics {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& p : problems) s += p + "\n";
    return s;
  }
};

namespace detail {

inline BitMatrix symplectic_rows(const std::vector<PauliOp>& ops, std::size_t n) {
  BitMatrix m(2 * n);
  for (const auto& p : ops) m.append_row(p.symplectic());
  return m;
}

}  // namespace detail

inline Diagnostics validate_code(const StabilizerCode& c) {
  Diagnostics d;
  auto& out = d.problems;
  if (c.k > c.n) out.push_back("k exceeds n");
  if (c.generators.size() + c.k != c.n)
    out.push_back("expected " + std::to_string(c.n - std::min(c.k, c.n)) + " generators, got " +
                  std::to_string(c.generators.size()));
  if (c.logical_x.size() != c.k || c.logical_z.size() != c.k)
    out.push_back("expected " + std::to_string(c.k) + " logical X and Z operators");
  auto check_len = [&](const std::vector<PauliOp>& ops, const char* what) {
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (ops[i].num_qubits() != c.n)
        out.push_back(std::string(what) + "[" + std::to_string(i) + "] acts on " +
                      std::to_string(ops[i].num_qubits()) + " qubits, expected " + std::to_string(c.n));
  };
  check_len(c.generators, "generator");
  check_len(c.logical_x, "logical_x");
  check_len(c.logical_z, "logical_z");
  if (!out.empty()) return d;

  for (std::size_t i = 0; i < c.generators.size(); ++i)
    for (std::size_t j = i + 1; j < c.generators.size(); ++j)
      if (anticommutes(c.generators[i], c.generators[j]))
        out.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
  std::size_t r = rank(detail::symplectic_rows(c.generators, c.n));
  if (r != c.generators.size())
    out.push_back("generators are dependent: rank " + std::to_string(r) + " < " +
                  std::to_string(c.generators.size()));

  for (std::size_t i = 0; i < c.k; ++i) {
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
      if (anticommutes(c.logical_x[i], c.generators[g]))
        out.push_back("logical_x[" + std::to_string(i) + "] anticommutes with generator " + std::to_string(g));
      if (anticommutes(c.logical_z[i], c.generators[g]))
        out.push_back("logical_z[" + std::to_string(i) + "] anticommutes with generator " + std::to_string(g));
    }
    for (std::size_t j = 0; j < c.k; ++j) {
      if (anticommutes(c.logical_x[i], c.logical_z[j]) != (i == j))
        out.push_back("logical_x[" + std::to_string(i) + "] vs logical_z[" + std::to_string(j) +
                      "] has the wrong commutation");
      if (j > i && anticommutes(c.logical_x[i], c.logical_x[j]))
        out.push_back("logical_x[" + std::to_string(i) + "] and logical_x[" + std::to_string(j) + "] anticommute");
      if (j > i && anticommutes(c.logical_z[i], c.logical_z[j]))
        out.push_back("logical_z[" + std::to_string(i) + "] and logical_z[" + std::to_string(j) + "] anticommute");
    }
  }
  return d;
}

/// Bit l is set iff p anticommutes with generator l.
inline BitVec syndrome(const StabilizerCode& c, const PauliOp& p) {
  if (p.num_qubits() != c.n) throw std::invalid_argument("syndrome: Pauli acts on the wrong number of qubits");
  BitVec s(c.generators.size());
  for (std::size_t l = 0; l < c.generators.size(); ++l)
    if (anticommutes(p, c.generators[l])) s.set(l);
  return s;
}

/// Anticommutation pattern against (Z̄_1..Z̄_k, X̄_1..X̄_k) for any Pauli;
/// equals the logical class when p is in N(S).
inline LogicalClass raw_class(const StabilizerCode& c, const PauliOp& p) {
  BitVec b(2 * c.k);
  for (std::size_t i = 0; i < c.k; ++i) {
    if (anticommutes(p, c.logical_z[i])) b.set(i);
    if (anticommutes(p, c.logical_x[i])) b.set(c.k + i);
  }
  return LogicalClass(std::move(b));
}

inline LogicalClass logical_class(const StabilizerCode& c, const PauliOp& p) {
  if (syndrome(c, p).any()) throw std::invalid_argument("logical_class: operator " + render(p) + " is not in N(S)");
  return raw_class(c, p);
}

/// Product of logical basis operators realising `cls`.
inline PauliOp logical_representative(const StabilizerCode& c, const LogicalClass& cls) {
  if (cls.bits.size() != 2 * c.k) throw std::invalid_argument("logical_representative: class has the wrong length");
  PauliOp p(c.n);
  for (std::size_t i = 0; i < c.k; ++i) {
    if (cls.bits.get(i)) p *= c.logical_x[i];
    if (cls.bits.get(c.k + i)) p *= c.logical_z[i];
  }
  return p;
}

/// Membership in the stabilizer group, by solving for a generator product.
inline bool in_stabilizer(const StabilizerCode& c, const PauliOp& p) {
  BitMatrix gt = detail::symplectic_rows(c.generators, c.n).transpose();
  if (c.generators.empty()) return p.is_identity();
  return solve(gt, p.symplectic()).has_value();
}

/// Symplectic form on 2k-bit logical coordinates laid out (x | z).
inline bool logical_form(const BitVec& u, const BitVec& v) {
  std::size_t k = u.size() / 2;
  bool acc = false;
  for (std::size_t i = 0; i < k; ++i) acc ^= (u.get(i) && v.get(k + i)) ^ (u.get(k + i) && v.get(i));
  return acc;
}

/// Re-expresses the logical basis: row i (i < k) of `transform` gives X̄'_i and
/// row k+i gives Z̄'_i as combinations of the current basis, in logical (x | z)
/// coordinates. The transform must be symplectic.
inline StabilizerCode relabel(const StabilizerCode& c, const BitMatrix& transform) {
  if (transform.rows() != 2 * c.k || transform.cols() != 2 * c.k)
    throw std::invalid_argument("relabel: transform must be 2k x 2k");
  for (std::size_t i = 0; i < 2 * c.k; ++i)
    for (std::size_t j = i + 1; j < 2 * c.k; ++j) {
      bool expected = (j == i + c.k) && i < c.k;
      if (logical_form(transform.row(i), transform.row(j)) != expected)
        throw std::invalid_argument("relabel: transform is not symplectic");
    }
  StabilizerCode out = c;
  for (std::size_t i = 0; i < c.k; ++i) {
    out.logical_x[i] = logical_representative(c, LogicalClass(transform.row(i)));
    out.logical_z[i] = logical_representative(c, LogicalClass(transform.row(c.k + i)));
  }
  return out;
}

/// Symplectic transform whose first rows are the given mutually commuting,
/// independent classes (they become X̄'_1..X̄'_m); the rest of the basis is
/// completed deterministically.
inline BitMatrix complete_symplectic_basis(std::size_t k, const std::vector<LogicalClass>& x_classes) {
  std::size_t m = x_classes.size();
  if (m > k) throw std::invalid_argument("complete_symplectic_basis: too many classes");
  std::size_t dim = 2 * k;
  auto unit = [&](std::size_t i) { return BitVec::unit(dim, i); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (logical_form(x_classes[i].bits, x_classes[j].bits))
        throw std::invalid_argument("complete_symplectic_basis: classes must commute");

  // Grow a list of isotropic "x" vectors and matched "z" partners by symplectic
  // Gram-Schmidt, seeded with the requested classes.
  std::vector<BitVec> xs;
  std::vector<BitVec> zs;
  for (const auto& c : x_classes) xs.push_back(c.bits);
  EchelonBasis seen(dim);
  for (const auto& x : xs)
    if (!seen.insert(x)) throw std::invalid_argument("complete_symplectic_basis: classes are dependent");

  // Partners: solve form(x_i, z) = delta_ij, form(z_j, z) = 0 for earlier partners.
  for (std::size_t j = 0; j < m; ++j) {
    BitMatrix eq(dim);
    BitVec rhs(m + j);
    for (std::size_t i = 0; i < m; ++i) {
      BitVec row(dim);
      for (std::size_t t = 0; t < k; ++t) {
        if (xs[i].get(t)) row.flip(k + t);
        if (xs[i].get(k + t)) row.flip(t);
      }
      eq.append_row(row);
      if (i == j) rhs.set(i);
    }
    for (std::size_t i = 0; i < j; ++i) {
      BitVec row(dim);
      for (std::size_t t = 0; t < k; ++t) {
        if (zs[i].get(t)) row.flip(k + t);
        if (zs[i].get(k + t)) row.flip(t);
      }
      eq.append_row(row);
    }
    auto z = solve(eq, rhs);
    if (!z) throw std::logic_error("complete_symplectic_basis: no partner found");
    zs.push_back(*z);
  }
  // Extend with further hyperbolic pairs from the orthogonal complement.
  auto orthogonalize = [&](BitVec v) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool a = logical_form(v, zs[i]);
      bool b = logical_form(v, xs[i]);
      if (a) v ^= xs[i];
      if (b) v ^= zs[i];
    }
    return v;
  };
  for (std::size_t cand = 0; cand < dim && xs.size() < k; ++cand) {
    BitVec x = orthogonalize(unit(cand));
    if (x.none()) continue;
    std::optional<BitVec> partner;
    for (std::size_t c2 = 0; c2 < dim; ++c2) {
      BitVec z = orthogonalize(unit(c2));
      if (logical_form(x, z)) {
        partner = z;
        break;
      }
    }
    if (!partner) continue;
    xs.push_back(x);
    zs.push_back(*partner);
  }
  if (xs.size() != k) throw std::logic_error("complete_symplectic_basis: failed to complete basis");
  BitMatrix t(dim);
  for (const auto& x : xs) t.append_row(x);
  for (const auto& z : zs) t.append_row(z);
  return t;
}

/// Gottesman standard form of a commuting, independent generator list, with a
/// logical basis read off the standard-form blocks. Qubit columns are
/// permuted internally and restored in the output.
inline StabilizerCode standard_form(const std::vector<PauliOp>& generators, std::size_t n) {
  for (const auto& g : generators)
    if (g.num_qubits() != n) throw std::invalid_argument("standard_form: generator has wrong qubit count");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (anticommutes(generators[i], generators[j]))
        throw std::invalid_argument("standard_form: generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " anticommute");
  const std::size_t m = generators.size();
  if (rank(detail::symplectic_rows(generators, n)) != m)
    throw std::invalid_argument("standard_form: generators are dependent");
  const std::size_t k = n - m;

  std::vector<BitVec> xs;
  std::vector<BitVec> zs;
  for (const auto& g : generators) {
    xs.push_back(g.x());
    zs.push_back(g.z());
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m; ++r) {
      bool xa = xs[r].get(a), xb = xs[r].get(b);
      xs[r].set(a, xb);
      xs[r].set(b, xa);
      bool za = zs[r].get(a), zb = zs[r].get(b);
      zs[r].set(a, zb);
      zs[r].set(b, za);
    }
    std::swap(perm[a], perm[b]);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(xs[a], xs[b]);
    std::swap(zs[a], zs[b]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src) {
    xs[dst] ^= xs[src];
    zs[dst] ^= zs[src];
  };

  // X block: identity on the first r columns.
  std::size_t r = 0;
  while (r < m) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t c = r; c < n && !pivot; ++c)
      for (std::size_t row = r; row < m; ++row)
        if (xs[row].get(c)) {
          pivot = {row, c};
          break;
        }
    if (!pivot) break;
    swap_rows(r, pivot->first);
    swap_cols(r, pivot->second);
    for (std::size_t row = 0; row < m; ++row)
      if (row != r && xs[row].get(r)) add_row(row, r);
    ++r;
  }
  // Z block of the remaining pure-Z rows: identity on columns r..m-1.
  for (std::size_t i = r; i < m; ++i) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t c = i; c < n && !pivot; ++c)
      for (std::size_t row = i; row < m; ++row)
        if (zs[row].get(c)) {
          pivot = {row, c};
          break;
        }
    if (!pivot) throw std::logic_error("standard_form: missing Z pivot");
    swap_rows(i, pivot->first);
    swap_cols(i, pivot->second);
    for (std::size_t row = 0; row < m; ++row)
      if (row != i && zs[row].get(i)) add_row(row, i);
  }

  // Logical operators in permuted coordinates:
  //   X̄_j = (0 | Eᵀ_j | e_j ; Cᵀ_j | 0 | 0),  Z̄_j = (0 ; Ã2ᵀ_j | 0 | e_j).
  std::vector<BitVec> lx_x(k, BitVec(n)), lx_z(k, BitVec(n)), lz_z(k, BitVec(n));
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t col = m + j;
    lx_x[j].set(col);
    lz_z[j].set(col);
    for (std::size_t i = r; i < m; ++i)
      if (zs[i].get(col)) lx_x[j].set(i);
    for (std::size_t l = 0; l < r; ++l) {
      if (zs[l].get(col)) lx_z[j].set(l);
      if (xs[l].get(col)) lz_z[j].set(l);
    }
  }

  auto unpermute = [&](const BitVec& x, const BitVec& z) {
    PauliOp p(n);
    for (std::size_t c = 0; c < n; ++c) {
      bool bx = x.get(c), bz = z.get(c);
      p.set(perm[c], bx ? (bz ? Letter::Y : Letter::X) : (bz ? Letter::Z : Letter::I));
    }
    return p;
  };
  StabilizerCode out;
  out.n = n;
  out.k = k;
  for (std::size_t row = 0; row < m; ++row) out.generators.push_back(unpermute(xs[row], zs[row]));
  for (std::size_t j = 0; j < k; ++j) {
    out.logical_x.push_back(unpermute(lx_x[j], lx_z[j]));
    out.logical_z.push_back(unpermute(BitVec(n), lz_z[j]));
  }
  return out;
}

inline StabilizerCode standard_form(const std::vector<PauliOp>& generators) {
  if (generators.empty()) throw std::invalid_argument("standard_form: need the qubit count for an empty list");
  return standard_form(generators, generators.front().num_qubits());
}

/// Replaces the logical basis with the standard-form one; generators untouched.
inline StabilizerCode with_standard_basis(StabilizerCode c) {
  auto sf = standard_form(c.generators, c.n);
  c.logical_x = std::move(sf.logical_x);
  c.logical_z = std::move(sf.logical_z);
  return c;
}

/// Outcome of a capped minimum-weight search.
struct DistanceResult {
  enum class Kind {
    kExact,       ///< value is the minimum; a witness of that weight exists
    kLowerBound,  ///< nothing found up to the cap; value = the implied lower bound
    kUnbounded,   ///< the searched family is empty (e.g. every class admissible)
  };
  Kind kind = Kind::kExact;
  std::size_t value = 0;
  std::size_t cap = 0;
  std::optional<PauliOp> witness;

  bool exact() const { return kind == Kind::kExact; }

  std::string describe() const {
    switch (kind) {
      case Kind::kExact: return std::to_string(value);
      case Kind::kLowerBound: return ">= " + std::to_string(value) + " (cap " + std::to_string(cap) + ")";
      case Kind::kUnbounded: return "infinite";
    }
    return "?";
  }
};

enum class Purity { kAny, kPureX, kPureZ };

/// Packed per-(qubit, letter) signatures: syndrome bits then raw class bits.
/// XOR of signatures is the signature of the product.
class SignatureTable {
 public:
  using Word = BitVec::Word;

  explicit SignatureTable(const StabilizerCode& c)
      : n_(c.n), k_(c.k), r_(c.generators.size()), words_(BitVec::word_count(r_ + 2 * c.k)) {
    table_.assign(n_ * 3 * words_, 0);
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t li = 0; li < 3; ++li) {
        PauliOp p = PauliOp::single(n_, q, kNonIdentityLetters[li]);
        BitVec s = syndrome(c, p).concat(raw_class(c, p).bits);
        auto w = s.words();
        std::copy(w.begin(), w.end(), table_.begin() + static_cast<std::ptrdiff_t>(offset(q, li)));
      }
    syndrome_mask_.assign(words_, 0);
    for (std::size_t b = 0; b < r_; ++b) syndrome_mask_[b / 64] |= Word{1} << (b % 64);
  }

  std::size_t words() const { return words_; }
  const Word* single(std::size_t q, std::size_t letter_index) const { return &table_[offset(q, letter_index)]; }

  bool syndrome_zero(const Word* sig) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (sig[i] & syndrome_mask_[i]) return false;
    return true;
  }
  LogicalClass class_of(const Word* sig) const {
    BitVec b(2 * k_);
    for (std::size_t i = 0; i < 2 * k_; ++i) {
      std::size_t bit = r_ + i;
      if ((sig[bit / 64] >> (bit % 64)) & 1u) b.set(i);
    }
    return LogicalClass(std::move(b));
  }
  BitVec syndrome_of(const Word* sig) const {
    BitVec b(r_);
    for (std::size_t i = 0; i < r_; ++i)
      if ((sig[i / 64] >> (i % 64)) & 1u) b.set(i);
    return b;
  }

 private:
  std::size_t offset(std::size_t q, std::size_t li) const { return (q * 3 + li) * words_; }

  std::size_t n_, k_, r_, words_;
  std::vector<Word> table_;
  std::vector<Word> syndrome_mask_;
};

namespace detail {

inline std::vector<std::size_t> allowed_letters(Purity purity) {
  switch (purity) {
    case Purity::kPureX: return {0};
    case Purity::kPureZ: return {2};
    case Purity::kAny: break;
  }
  return {0, 1, 2};
}

/// Scans every operator of exactly weight w whose first support qubit is q0,
/// in (support, letter) order, returning the first with zero syndrome whose
/// class satisfies accept.
template <class Accept>
std::optional<PauliOp> scan_first_qubit(const SignatureTable& table, std::size_t n, std::size_t w, std::size_t q0,
                                        const std::vector<std::size_t>& letters, const Accept& accept) {
  const std::size_t W = table.words();
  std::vector<BitVec::Word> acc((w + 1) * W, 0);
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = q0 + i;
  if (support.back() >= n) return std::nullopt;
  std::vector<std::size_t> digit(w, 0);

  do {
    if (support[0] != q0) break;
    // Odometer over letters with prefix-XOR buffers; position `from` onward is stale.
    std::size_t from = 0;
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      for (std::size_t pos = from; pos < w; ++pos) {
        const auto* s = table.single(support[pos], letters[digit[pos]]);
        for (std::size_t t = 0; t < W; ++t) acc[(pos + 1) * W + t] = acc[pos * W + t] ^ s[t];
      }
      const auto* sig = &acc[w * W];
      if (table.syndrome_zero(sig) && accept(table.class_of(sig))) {
        PauliOp p(n);
        for (std::size_t i = 0; i < w; ++i) p.set(support[i], kNonIdentityLetters[letters[digit[i]]]);
        return p;
      }
      std::size_t i = w;
      while (i > 0 && digit[i - 1] + 1 == letters.size()) digit[--i] = 0;
      if (i == 0) break;
      ++digit[i - 1];
      from = i - 1;
    }
  } while (next_combination(support, n));
  return std::nullopt;
}

}  // namespace detail

/// Minimum weight of an operator in N(S) whose class satisfies `accept`,
/// searched by iterative deepening up to `cap`. The identity (weight 0) counts
/// when accept(zero class) holds. Work is split by first support qubit; the
/// reported witness is the first in enumeration order regardless of threads.
template <class Accept>
DistanceResult min_weight_search(const StabilizerCode& c, std::size_t cap, const Accept& accept,
                                 Purity purity = Purity::kAny, std::size_t threads = 1) {
  if (cap > c.n) throw std::invalid_argument("min_weight_search: cap exceeds n");
  DistanceResult res;
  res.cap = cap;
  if (accept(LogicalClass::zero(c.k))) {
    res.value = 0;
    res.witness = PauliOp::identity(c.n);
    return res;
  }
  SignatureTable table(c);
  auto letters = detail::allowed_letters(purity);
  for (std::size_t w = 1; w <= cap; ++w) {
    std::size_t tasks = c.n - w + 1;
    std::vector<std::optional<PauliOp>> found(tasks);
    std::atomic<std::size_t> best{tasks};
    parallel_for(tasks, threads, [&](std::size_t q0) {
      if (q0 > best.load()) return;
      found[q0] = detail::scan_first_qubit(table, c.n, w, q0, letters, accept);
      if (found[q0]) {
        std::size_t cur = best.load();
        while (q0 < cur && !best.compare_exchange_weak(cur, q0)) {
        }
      }
    });
    for (auto& f : found)
      if (f) {
        res.value = w;
        res.witness = std::move(f);
        return res;
      }
  }
  res.kind = DistanceResult::Kind::kLowerBound;
  res.value = cap + 1;
  return res;
}

/// Minimum weight of N(S) \ S, exact when it is at most `cap`.
inline DistanceResult code_distance(const StabilizerCode& c, std::size_t cap, std::size_t threads = 1) {
  if (c.k == 0) {
    DistanceResult r;
    r.kind = DistanceResult::Kind::kUnbounded;
    r.cap = cap;
    return r;
  }
  return min_weight_search(c, cap, [](const LogicalClass& cls) { return !cls.is_zero(); }, Purity::kAny, threads);
}

inline DistanceResult min_weight_in_class(const StabilizerCode& c, const LogicalClass& target, std::size_t cap,
                                          Purity purity = Purity::kAny, std::size_t threads = 1) {
  if (target.bits.size() != 2 * c.k) throw std::invalid_argument("min_weight_in_class: class has the wrong length");
  return min_weight_search(c, cap, [&](const LogicalClass& cls) { return cls == target; }, purity, threads);
}

// ---------------------------------------------------------------------------
// Code file format:
//   n k
//   <n-k generator lines>
//   XL            (optional, followed by k lines)
//   ZL            (optional, followed by k lines)
// Lines starting with '#' and blank lines are ignored. Without XL/ZL the
// standard-form basis is used.

inline StabilizerCode parse_code(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    lines.emplace_back(line_no, line.substr(b, e - b + 1));
  }
  if (lines.empty()) throw ParseError("code file is empty", 0);
  std::size_t n = 0, k = 0;
  {
    std::istringstream hdr(lines[0].second);
    if (!(hdr >> n >> k) || k > n || n == 0)
      throw ParseError("first line must be \"n k\" with 0 <= k <= n", lines[0].first);
  }
  std::size_t idx = 1;
  auto read_ops = [&](std::size_t count, const char* what) {
    std::vector<PauliOp> ops;
    for (std::size_t i = 0; i < count; ++i, ++idx) {
      if (idx >= lines.size())
        throw ParseError(std::string("missing ") + what + " line", lines.back().first + 1);
      const auto& [ln, s] = lines[idx];
      PauliOp p;
      try {
        p = parse_pauli(s);
      } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.what(), ln);
      }
      if (p.num_qubits() != n)
        throw ParseError(std::string(what) + " has " + std::to_string(p.num_qubits()) + " letters, expected " +
                             std::to_string(n),
                         ln);
      ops.push_back(std::move(p));
    }
    return ops;
  };
  StabilizerCode c;
  c.n = n;
  c.k = k;
  c.generators = read_ops(n - k, "generator");
  bool have_x = false, have_z = false;
  while (idx < lines.size()) {
    const auto& [ln, s] = lines[idx];
    if (s == "XL" && !have_x) {
      ++idx;
      c.logical_x = read_ops(k, "logical X");
      have_x = true;
    } else if (s == "ZL" && !have_z) {
      ++idx;
      c.logical_z = read_ops(k, "logical Z");
      have_z = true;
    } else {
      throw ParseError("unexpected line \"" + s + "\"", ln);
    }
  }
  if (have_x != have_z) throw ParseError("XL and ZL sections must appear together", lines.back().first);
  if (!have_x) {
    if (k == 0) {
      auto d = validate_code(c);
      if (!d.ok()) throw std::invalid_argument("invalid code:\n" + d.summary());
      return c;
    }
    c = with_standard_basis(std::move(c));
  }
  auto d = validate_code(c);
  if (!d.ok()) throw std::invalid_argument("invalid code:\n" + d.summary());
  return c;
}

inline std::string render_code(const StabilizerCode& c) {
  std::string s = std::to_string(c.n) + " " + std::to_string(c.k) + "\n";
  for (const auto& g : c.generators) s += render(g) + "\n";
  if (c.k > 0) {
    s += "XL\n";
    for (const auto& p : c.logical_x) s += render(p) + "\n";
    s += "ZL\n";
    for (const auto& p : c.logical_z) s += render(p) + "\n";
  }
  return s;
}

}  // namespace qet
