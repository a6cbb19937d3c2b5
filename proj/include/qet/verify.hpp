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
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qet/parallel.hpp"
#include "qet/stabilizer.hpp"

namespace qet {

/// Set of logical classes an error may be transmuted into. Always holds 0.
class AdmissibleSet {
 public:
  AdmissibleSet() = default;
  explicit AdmissibleSet(std::size_t k) : k_(k) { insert(LogicalClass::zero(k)); }
  AdmissibleSet(std::size_t k, const std::vector<LogicalClass>& classes) : AdmissibleSet(k) {
    for (const auto& c : classes) insert(c);
  }

  static AdmissibleSet full(std::size_t k) {
    if (2 * k >= 63) throw std::invalid_argument("AdmissibleSet::full: k too large");
    AdmissibleSet s(k);
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << (2 * k)); ++v) s.insert(class_from_int(k, v));
    return s;
  }

  /// XOR closure of the given classes.
  static AdmissibleSet generated_by(std::size_t k, const std::vector<LogicalClass>& gens) {
    AdmissibleSet s(k);
    for (const auto& g : gens) {
      std::vector<LogicalClass> current = s.classes();
      for (const auto& c : current) s.insert(c ^ g);
    }
    return s;
  }

  void insert(const LogicalClass& c) {
    if (c.bits.size() != 2 * k_) throw std::invalid_argument("AdmissibleSet: class has the wrong length");
    if (set_.insert(c).second) {
      auto it = std::lower_bound(sorted_.begin(), sorted_.end(), c);
      sorted_.insert(it, c);
    }
  }

  std::size_t k() const { return k_; }
  std::size_t size() const { return sorted_.size(); }
  bool contains(const LogicalClass& c) const { return set_.count(c) != 0; }
  const std::vector<LogicalClass>& classes() const { return sorted_; }

  bool is_group() const {
    for (const auto& a : sorted_)
      for (const auto& b : sorted_)
        if (!contains(a ^ b)) return false;
    return true;
  }
  bool is_full() const { return 2 * k_ < 63 && sorted_.size() == (std::size_t{1} << (2 * k_)); }

  /// Image under v -> v·transform; maps a set written in a relabelled basis
  /// back to the original basis.
  AdmissibleSet mapped(const BitMatrix& transform) const {
    AdmissibleSet out(k_);
    for (const auto& c : sorted_) out.insert(LogicalClass(transform.combine(c.bits)));
    return out;
  }

  static LogicalClass class_from_int(std::size_t k, std::uint64_t v) {
    BitVec b(2 * k);
    for (std::size_t i = 0; i < 2 * k; ++i)
      if ((v >> i) & 1u) b.set(i);
    return LogicalClass(std::move(b));
  }
  static std::uint64_t class_to_int(const LogicalClass& c) {
    if (c.bits.size() >= 64) throw std::invalid_argument("class_to_int: class too wide");
    return c.bits.size() == 0 ? 0 : c.bits.words()[0];
  }

  friend bool operator==(const AdmissibleSet& a, const AdmissibleSet& b) {
    return a.k_ == b.k_ && a.sorted_ == b.sorted_;
  }

 private:
  std::size_t k_ = 0;
  std::unordered_set<LogicalClass, LogicalClassHash> set_;
  std::vector<LogicalClass> sorted_;
};

/// One class per line (k-letter logical Pauli or indexed form like "Z1Z2");
/// '#' comments, identity implied.
inline AdmissibleSet parse_admissible(std::string_view text, std::size_t k) {
  AdmissibleSet s(k);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    try {
      s.insert(parse_logical_class(line.substr(b, e - b + 1), k));
    } catch (const ParseError& err) {
      throw ParseError(std::string("admissible set: ") + err.what(), line_no);
    }
  }
  return s;
}

/// Comma-separated inline form, e.g. "ZI,IZ".
inline AdmissibleSet parse_admissible_list(std::string_view list, std::size_t k) {
  std::string text(list);
  std::replace(text.begin(), text.end(), ',', '\n');
  return parse_admissible(text, k);
}

inline std::string render_admissible(const AdmissibleSet& m) {
  std::string s;
  for (const auto& c : m.classes()) s += render(c) + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Syndrome buckets.

/// Errors sharing one syndrome. Member 0 is the reference E_1 (first in input
/// order); relative[j] is the class of E_1·E_j.
struct Bucket {
  BitVec syndrome;
  std::vector<PauliOp> members;
  std::vector<std::size_t> order;  // position of each member in the deduplicated input
  std::vector<LogicalClass> relative;
  std::unordered_map<PauliOp, std::size_t, PauliHash> member_index;
};

class BucketSet {
 public:
  explicit BucketSet(const StabilizerCode& c) : code_(&c) {}

  /// Adds an error; duplicates are ignored. Returns false for a duplicate.
  bool add(const PauliOp& e) {
    if (e.num_qubits() != code_->n) throw std::invalid_argument("error acts on the wrong number of qubits");
    if (!seen_.insert(e).second) return false;
    BitVec s = syndrome(*code_, e);
    LogicalClass raw = raw_class(*code_, e);
    auto it = index_.find(s);
    std::size_t b;
    if (it == index_.end()) {
      b = buckets_.size();
      index_.emplace(s, b);
      buckets_.push_back(Bucket{s, {}, {}, {}, {}});
      reference_raw_.push_back(raw);
    } else {
      b = it->second;
    }
    auto& bucket = buckets_[b];
    bucket.member_index.emplace(e, bucket.members.size());
    bucket.members.push_back(e);
    bucket.order.push_back(count_++);
    bucket.relative.push_back(raw ^ reference_raw_[b]);
    return true;
  }

  template <class Range>
  void add_all(const Range& errors) {
    for (const auto& e : errors) add(e);
  }

  const std::vector<Bucket>& buckets() const { return buckets_; }
  std::size_t num_errors() const { return count_; }
  const StabilizerCode& code() const { return *code_; }

 private:
  const StabilizerCode* code_;
  std::vector<Bucket> buckets_;
  std::vector<LogicalClass> reference_raw_;
  std::unordered_map<BitVec, std::size_t, BitVecHash> index_;
  std::unordered_set<PauliOp, PauliHash> seen_;
  std::size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Verdicts.

struct Witness {
  PauliOp first;
  PauliOp second;
  BitVec syndrome;
  LogicalClass product_class;
};

/// Admissible assignments for one syndrome: choosing m* fixes
/// π(E_j) = m* XOR relative[j] for every member.
struct BucketMaps {
  BitVec syndrome;
  PauliOp reference;
  std::vector<PauliOp> members;
  std::vector<LogicalClass> relative;
  std::vector<LogicalClass> choices;

  LogicalClass pi(std::size_t choice, std::size_t member) const { return choices.at(choice) ^ relative.at(member); }
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;
  std::vector<BucketMaps> maps;
  std::size_t num_errors = 0;
};

namespace detail {

struct BucketOutcome {
  std::vector<LogicalClass> choices;
  std::optional<std::size_t> failing_member;
};

inline BucketOutcome group_bucket(const Bucket& b, const AdmissibleSet& m) {
  BucketOutcome out;
  for (std::size_t j = 1; j < b.members.size(); ++j)
    if (!m.contains(b.relative[j])) {
      out.failing_member = j;
      return out;
    }
  out.choices = m.classes();
  return out;
}

inline BucketOutcome general_bucket(const Bucket& b, const AdmissibleSet& m) {
  BucketOutcome out;
  std::vector<LogicalClass> cand = m.classes();
  for (std::size_t j = 1; j < b.members.size(); ++j) {
    std::vector<LogicalClass> next;
    for (const auto& c : cand)
      if (m.contains(c ^ b.relative[j])) next.push_back(c);
    cand.swap(next);
    if (cand.empty()) {
      out.failing_member = j;
      return out;
    }
  }
  out.choices = std::move(cand);
  return out;
}

template <class PerBucket>
Verdict run_check(const BucketSet& buckets, const AdmissibleSet& m, PerBucket per_bucket, std::size_t threads) {
  if (m.k() != buckets.code().k) throw std::invalid_argument("admissible set has the wrong logical qubit count");
  const auto& bs = buckets.buckets();
  std::vector<BucketOutcome> outcomes(bs.size());
  parallel_for(bs.size(), threads, [&](std::size_t i) { outcomes[i] = per_bucket(bs[i], m); });
  Verdict v;
  v.num_errors = buckets.num_errors();
  std::optional<std::pair<std::size_t, std::size_t>> worst;  // (input position, bucket)
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (outcomes[i].failing_member) {
      std::size_t pos = bs[i].order[*outcomes[i].failing_member];
      if (!worst || pos < worst->first) worst = {pos, i};
    }
  if (worst) {
    const auto& b = bs[worst->second];
    std::size_t j = *outcomes[worst->second].failing_member;
    v.pass = false;
    v.witness = Witness{b.members[0], b.members[j], b.syndrome, b.relative[j]};
    return v;
  }
  for (std::size_t i = 0; i < bs.size(); ++i)
    v.maps.push_back(BucketMaps{bs[i].syndrome, bs[i].members[0], bs[i].members, bs[i].relative,
                                std::move(outcomes[i].choices)});
  return v;
}

}  // namespace detail

/// Group case: every same-syndrome product must land in an admissible class.
/// The admissible set must be closed under XOR.
inline Verdict check_group_qet(const BucketSet& buckets, const AdmissibleSet& m, std::size_t threads = 1) {
  if (!m.is_group()) throw std::invalid_argument("check_group_qet: admissible set is not a group");
  return detail::run_check(buckets, m, detail::group_bucket, threads);
}

template <class Range>
Verdict check_group_qet(const StabilizerCode& c, const AdmissibleSet& m, const Range& errors, std::size_t threads = 1) {
  BucketSet b(c);
  b.add_all(errors);
  return check_group_qet(b, m, threads);
}

/// General case: per syndrome, some m* must keep m* XOR class(E_1·E_j)
/// admissible for every member j.
inline Verdict check_general_qet(const BucketSet& buckets, const AdmissibleSet& m, std::size_t threads = 1) {
  return detail::run_check(buckets, m, detail::general_bucket, threads);
}

template <class Range>
Verdict check_general_qet(const StabilizerCode& c, const AdmissibleSet& m, const Range& errors,
                          std::size_t threads = 1) {
  BucketSet b(c);
  b.add_all(errors);
  return check_general_qet(b, m, threads);
}

/// Every same-syndrome pair product is admissible.
inline bool strong_conditions_hold(const BucketSet& buckets, const AdmissibleSet& m) {
  for (const auto& b : buckets.buckets()) {
    std::vector<LogicalClass> distinct = b.relative;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < distinct.size(); ++i)
      for (std::size_t j = i + 1; j < distinct.size(); ++j)
        if (!m.contains(distinct[i] ^ distinct[j])) return false;
  }
  return true;
}

template <class Range>
bool strong_conditions_hold(const StabilizerCode& c, const AdmissibleSet& m, const Range& errors) {
  BucketSet b(c);
  b.add_all(errors);
  return strong_conditions_hold(b, m);
}

// ---------------------------------------------------------------------------
// Logical relabelling.

/// Symplectic 2k x 2k transforms as row words (bit t = coordinate t); rows
/// 0..k-1 are X̄', rows k..2k-1 are Z̄'.
using SymplecticRows = std::vector<std::uint64_t>;

namespace detail {

inline bool form_bits(std::uint64_t u, std::uint64_t v, std::size_t k) {
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t a = (u & mask) & (v >> k);
  std::uint64_t b = (u >> k) & (v & mask);
  return std::popcount(a ^ b) & 1;
}

// Fills rows in the order X̄'_1, Z̄'_1, X̄'_2, ... with each row scanning values
// upward. fn returns false to stop; returns false if stopped.
template <class Fn>
bool enumerate_symplectic_from(std::size_t k, SymplecticRows& rows, std::size_t pos, Fn& fn) {
  if (pos == 2 * k) return fn(static_cast<const SymplecticRows&>(rows));
  std::size_t pair = pos / 2;
  bool is_z = pos % 2;
  std::size_t row = is_z ? k + pair : pair;
  std::uint64_t limit = std::uint64_t{1} << (2 * k);
  for (std::uint64_t v = 1; v < limit; ++v) {
    bool ok = true;
    for (std::size_t p = 0; p < pos && ok; ++p) {
      std::size_t prow = (p % 2) ? k + p / 2 : p / 2;
      bool expect = is_z && p == pos - 1;
      ok = form_bits(rows[prow], v, k) == expect;
    }
    if (!ok) continue;
    rows[row] = v;
    if (!enumerate_symplectic_from(k, rows, pos + 1, fn)) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every element of Sp(2k, F2) in canonical order; fn returns false to stop.
template <class Fn>
void for_each_symplectic(std::size_t k, Fn fn) {
  if (k == 0 || 2 * k > 16) throw std::invalid_argument("for_each_symplectic: unsupported k");
  SymplecticRows rows(2 * k, 0);
  detail::enumerate_symplectic_from(k, rows, 0, fn);
}

inline std::uint64_t symplectic_group_order(std::size_t k) {
  std::uint64_t order = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::uint64_t q = std::uint64_t{1} << (2 * i);
    order *= (std::uint64_t{1} << (2 * i - 1)) * (q - 1);
  }
  return order;
}

inline BitMatrix symplectic_matrix(const SymplecticRows& rows, std::size_t k) {
  BitMatrix m(2 * k);
  for (auto r : rows) m.append_row(AdmissibleSet::class_from_int(k, r).bits);
  return m;
}

struct RelabelResult {
  BitMatrix transform;
  StabilizerCode code;
  Verdict verdict;
};

/// Looks for a logical basis in which `pattern` is admissible for `errors`.
/// The identity transform is tried first, then Sp(2k, F2) in canonical order.
template <class Range>
std::optional<RelabelResult> relabel_search(const StabilizerCode& c, const AdmissibleSet& pattern,
                                            const Range& errors, std::size_t threads = 1) {
  const std::size_t k = c.k;
  if (k == 0 || k > 3) throw std::invalid_argument("relabel_search: exhaustive search needs 1 <= k <= 3");
  if (pattern.k() != k) throw std::invalid_argument("relabel_search: pattern has the wrong logical qubit count");
  BucketSet buckets(c);
  buckets.add_all(errors);

  const std::size_t universe = std::size_t{1} << (2 * k);
  std::vector<std::uint64_t> pattern_ints;
  for (const auto& m : pattern.classes()) pattern_ints.push_back(AdmissibleSet::class_to_int(m));
  std::vector<std::vector<std::uint64_t>> rels;
  for (const auto& b : buckets.buckets()) {
    std::vector<std::uint64_t> d;
    for (const auto& r : b.relative) d.push_back(AdmissibleSet::class_to_int(r));
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    rels.push_back(std::move(d));
  }

  auto passes = [&](const SymplecticRows& rows) {
    std::vector<char> admissible(universe, 0);
    for (auto p : pattern_ints) {
      std::uint64_t img = 0;
      for (std::size_t t = 0; t < 2 * k; ++t)
        if ((p >> t) & 1u) img ^= rows[t];
      admissible[img] = 1;
    }
    std::vector<char> cand(universe);
    for (const auto& d : rels) {
      for (std::size_t v = 0; v < universe; ++v) cand[v] = admissible[v];
      bool any = true;
      for (auto r : d) {
        any = false;
        for (std::size_t v = 0; v < universe; ++v) {
          cand[v] = cand[v] && admissible[v ^ r];
          any = any || cand[v];
        }
        if (!any) break;
      }
      if (!any) return false;
    }
    return true;
  };

  auto finish = [&](const SymplecticRows& rows) {
    BitMatrix t = symplectic_matrix(rows, k);
    StabilizerCode relabelled = relabel(c, t);
    Verdict v = check_general_qet(relabelled, pattern, errors, threads);
    if (!v.pass) throw std::logic_error("relabel_search: verdict disagrees with the fast check");
    return RelabelResult{t, std::move(relabelled), std::move(v)};
  };

  SymplecticRows identity(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) identity[i] = std::uint64_t{1} << i;
  if (passes(identity)) return finish(identity);

  // Split by the first row; the lowest first row with a hit wins.
  const std::size_t tasks = universe - 1;
  std::vector<std::optional<SymplecticRows>> found(tasks);
  std::atomic<std::size_t> best{tasks};
  parallel_for(tasks, threads, [&](std::size_t task) {
    if (task > best.load()) return;
    SymplecticRows rows(2 * k, 0);
    rows[0] = task + 1;
    std::size_t visited = 0;
    auto fn = [&](const SymplecticRows& r) {
      if ((++visited & 0xfff) == 0 && task > best.load()) return false;
      if (!passes(r)) return true;
      found[task] = r;
      return false;
    };
    detail::enumerate_symplectic_from(k, rows, 1, fn);
    if (found[task]) {
      std::size_t cur = best.load();
      while (task < cur && !best.compare_exchange_weak(cur, task)) {
      }
    }
  });
  for (const auto& f : found)
    if (f) return finish(*f);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Effective distance.

/// d_eff = 2w+1 for the largest w <= cap such that every error of weight <= w
/// passes the general check. Exact when some weight <= cap fails; otherwise
/// a lower bound 2*cap+1. The witness is the failing pair's product.
inline DistanceResult effective_distance(const StabilizerCode& c, const AdmissibleSet& m, std::size_t cap,
                                         std::size_t threads = 1) {
  if (cap > c.n) throw std::invalid_argument("effective_distance: cap exceeds n");
  BucketSet buckets(c);
  buckets.add(PauliOp::identity(c.n));
  DistanceResult res;
  res.cap = cap;
  for (std::size_t w = 1; w <= cap; ++w) {
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    do {
      std::vector<std::uint8_t> digits(w, 0);
      while (true) {
        PauliOp p(c.n);
        for (std::size_t i = 0; i < w; ++i) p.set(support[i], kNonIdentityLetters[digits[i]]);
        buckets.add(p);
        std::size_t i = w;
        while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
    } while (next_combination(support, c.n));
    Verdict v = check_general_qet(buckets, m, threads);
    if (!v.pass) {
      res.value = 2 * w - 1;
      res.witness = v.witness->first * v.witness->second;
      return res;
    }
  }
  res.kind = DistanceResult::Kind::kLowerBound;
  res.value = 2 * cap + 1;
  return res;
}

/// Minimum weight of an N(S) element whose class is not admissible.
inline DistanceResult deff_lower_bound(const StabilizerCode& c, const AdmissibleSet& m, std::size_t cap,
                                       std::size_t threads = 1) {
  if (m.k() != c.k) throw std::invalid_argument("deff_lower_bound: admissible set has the wrong logical qubit count");
  if (m.is_full()) {
    DistanceResult r;
    r.kind = DistanceResult::Kind::kUnbounded;
    r.cap = cap;
    return r;
  }
  return min_weight_search(c, cap, [&](const LogicalClass& cls) { return !m.contains(cls); }, Purity::kAny, threads);
}

// ---------------------------------------------------------------------------
// Recovery.

struct RecoveryComponent {
  LogicalClass choice;  // m*: π(E_1)
  PauliOp correction;   // rep(m*)·E_1
  double weight = 0;
};

struct RecoveryEntry {
  BitVec syndrome;
  PauliOp reference;
  std::vector<RecoveryComponent> components;
};

struct RecoveryTable {
  std::size_t n = 0;
  std::size_t k = 0;
  AdmissibleSet admissible;
  std::vector<RecoveryEntry> entries;
  std::unordered_map<BitVec, std::size_t, BitVecHash> by_syndrome;
  std::unordered_set<PauliOp, PauliHash> support;

  const RecoveryEntry* find(const BitVec& s) const {
    auto it = by_syndrome.find(s);
    return it == by_syndrome.end() ? nullptr : &entries[it->second];
  }
  bool covers(const PauliOp& e) const { return support.count(e) != 0; }
};

using MixtureWeights = std::unordered_map<BitVec, std::vector<double>, BitVecHash>;

enum class MixturePolicy {
  kPreferIdentity,  ///< plain E_1 correction whenever m* = 0 is available, else uniform
  kUniform,         ///< uniform over every admissible m*
};

/// Builds corrections from a passing verdict. Syndromes missing from
/// `weights` get their mixture from `policy`.
inline RecoveryTable build_recovery(const StabilizerCode& c, const AdmissibleSet& m, const Verdict& verdict,
                                    const MixtureWeights& weights = {},
                                    MixturePolicy policy = MixturePolicy::kPreferIdentity) {
  if (!verdict.pass) throw std::invalid_argument("build_recovery: verdict did not pass");
  RecoveryTable t;
  t.n = c.n;
  t.k = c.k;
  t.admissible = m;
  for (const auto& bm : verdict.maps) {
    RecoveryEntry e;
    e.syndrome = bm.syndrome;
    e.reference = bm.reference;
    std::vector<double> w;
    if (auto it = weights.find(bm.syndrome); it != weights.end()) {
      w = it->second;
      if (w.size() != bm.choices.size())
        throw std::invalid_argument("build_recovery: mixture length does not match the admissible choices");
      double sum = 0;
      for (double x : w) {
        if (!(x >= 0)) throw std::invalid_argument("build_recovery: negative mixture weight");
        sum += x;
      }
      if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("build_recovery: mixture does not sum to 1");
    } else {
      auto zero = std::find_if(bm.choices.begin(), bm.choices.end(), [](const LogicalClass& x) { return x.is_zero(); });
      if (policy == MixturePolicy::kPreferIdentity && zero != bm.choices.end()) {
        w.assign(bm.choices.size(), 0.0);
        w[static_cast<std::size_t>(zero - bm.choices.begin())] = 1.0;
      } else {
        w.assign(bm.choices.size(), 1.0 / static_cast<double>(bm.choices.size()));
      }
    }
    for (std::size_t i = 0; i < bm.choices.size(); ++i)
      e.components.push_back(RecoveryComponent{bm.choices[i], logical_representative(c, bm.choices[i]) * bm.reference, w[i]});
    for (const auto& mem : bm.members) t.support.insert(mem);
    t.by_syndrome.emplace(e.syndrome, t.entries.size());
    t.entries.push_back(std::move(e));
  }
  return t;
}

}  // namespace qet
