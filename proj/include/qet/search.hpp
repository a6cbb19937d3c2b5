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
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qet/parallel.hpp"
#include "qet/stabilizer.hpp"
#include "qet/verify.hpp"

namespace qet {

/// Free parameters of a standard-form check matrix
///   [ I A1 A2 | B 0 C ]
///   [ 0 0  0  | D I E ]
/// with r = rank of the X part and s = n-k-r. D and the strict lower
/// triangle of B are fixed by commutation; the upper triangle of B
/// (diagonal included) is free.
struct StandardFormShape {
  std::size_t n = 0, k = 0, r = 0;

  std::size_t s() const { return n - k - r; }
  std::size_t num_bits() const { return r * s() + 2 * r * k + s() * k + r * (r + 1) / 2; }
};

/// Builds the generators for one parameter assignment (bits in the order
/// A1, A2, C, E, upper triangle of B, each row-major).
inline std::vector<PauliOp> standard_form_generators(const StandardFormShape& sh, const BitVec& bits) {
  if (bits.size() != sh.num_bits()) throw std::invalid_argument("standard_form_generators: wrong parameter count");
  const std::size_t n = sh.n, k = sh.k, r = sh.r, s = sh.s();
  std::size_t pos = 0;
  auto take = [&](std::size_t rows, std::size_t cols) {
    std::vector<BitVec> m(rows, BitVec(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i].set(j, bits.get(pos++));
    return m;
  };
  auto a1 = take(r, s), a2 = take(r, k), cm = take(r, k), e = take(s, k);
  std::vector<BitVec> b(r, BitVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) b[i].set(j, bits.get(pos++));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) b[j].set(i, b[i].get(j) ^ dot(a2[i], cm[j]) ^ dot(cm[i], a2[j]));

  std::vector<PauliOp> gens;
  for (std::size_t i = 0; i < r; ++i) {
    BitVec x(n), z(n);
    x.set(i);
    for (std::size_t j = 0; j < s; ++j) x.set(r + j, a1[i].get(j));
    for (std::size_t j = 0; j < k; ++j) {
      x.set(r + s + j, a2[i].get(j));
      z.set(r + s + j, cm[i].get(j));
    }
    for (std::size_t j = 0; j < r; ++j) z.set(j, b[i].get(j));
    gens.emplace_back(x, z);
  }
  for (std::size_t l = 0; l < s; ++l) {
    BitVec x(n), z(n);
    // D[l][i] = A1[i][l] + A2_i·E_l
    for (std::size_t i = 0; i < r; ++i) z.set(i, a1[i].get(l) ^ dot(a2[i], e[l]));
    z.set(r + l);
    for (std::size_t j = 0; j < k; ++j) z.set(r + s + j, e[l].get(j));
    gens.emplace_back(x, z);
  }
  return gens;
}

struct SearchSpec {
  enum class Mode { kRandom, kExhaustive };

  std::size_t n = 0, k = 0;
  AdmissibleSet pattern;
  std::size_t error_weight = 1;
  bool require_detection = true;  ///< every weight-1 Pauli has a nonzero syndrome
  Mode mode = Mode::kRandom;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;  ///< random: samples; exhaustive: max parameter indices examined
  std::size_t max_results = 1;   ///< stop after this many hits (0 = unlimited)
  std::size_t threads = 1;
  std::string checkpoint_path;  ///< exhaustive only; resumes when the file exists
  std::function<void(std::uint64_t done, std::uint64_t total, std::size_t found)> progress;
};

struct SearchHit {
  std::uint64_t index = 0;  ///< sample number (random) or parameter index (exhaustive)
  StabilizerCode code;
  BitMatrix transform;
  Verdict verdict;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::uint64_t examined = 0;
  std::uint64_t detected = 0;  ///< samples passing the weight-1 detection filter
  std::uint64_t total = 0;     ///< size of the exhaustive space (0 in random mode)
  bool complete = false;       ///< exhaustive space fully covered
};

namespace detail {

struct ParameterSpace {
  std::vector<StandardFormShape> shapes;
  std::vector<std::uint64_t> offsets;  // prefix sums of 2^bits
  std::uint64_t total = 0;

  ParameterSpace(std::size_t n, std::size_t k) {
    if (k >= n) throw std::invalid_argument("search: need k < n");
    for (std::size_t r = 0; r <= n - k; ++r) {
      StandardFormShape sh{n, k, r};
      offsets.push_back(total);
      shapes.push_back(sh);
      if (sh.num_bits() >= 62 || total > (std::uint64_t{1} << 62))
        total = ~std::uint64_t{0};
      else
        total += std::uint64_t{1} << sh.num_bits();
    }
  }

  std::pair<StandardFormShape, BitVec> decode(std::uint64_t index) const {
    std::size_t b = shapes.size() - 1;
    while (offsets[b] > index) --b;
    std::uint64_t v = index - offsets[b];
    BitVec bits(shapes[b].num_bits());
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, (v >> i) & 1u);
    return {shapes[b], bits};
  }

  std::pair<StandardFormShape, BitVec> sample(std::mt19937_64& rng) const {
    // Uniform over all parameter tuples: pick a shape with weight 2^bits.
    std::vector<double> w;
    std::size_t maxb = 0;
    for (const auto& sh : shapes) maxb = std::max(maxb, sh.num_bits());
    for (const auto& sh : shapes) w.push_back(std::ldexp(1.0, static_cast<int>(sh.num_bits()) - static_cast<int>(maxb)));
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    const auto& sh = shapes[pick(rng)];
    BitVec bits(sh.num_bits());
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng() & 1u);
    return {sh, bits};
  }
};

inline bool detects_weight_one(const StabilizerCode& c) {
  for (std::size_t q = 0; q < c.n; ++q)
    for (Letter l : kNonIdentityLetters)
      if (syndrome(c, PauliOp::single(c.n, q, l)).none()) return false;
  return true;
}

inline std::optional<SearchHit> evaluate(const SearchSpec& spec, const std::vector<PauliOp>& errors,
                                         const StandardFormShape& sh, const BitVec& bits, std::uint64_t index,
                                         bool& detected) {
  StabilizerCode c = standard_form(standard_form_generators(sh, bits), spec.n);
  detected = !spec.require_detection || detects_weight_one(c);
  if (!detected) return std::nullopt;
  auto found = relabel_search(c, spec.pattern, errors, 1);
  if (!found) return std::nullopt;
  return SearchHit{index, std::move(found->code), std::move(found->transform), std::move(found->verdict)};
}

}  // namespace detail

/// Searches standard-form codes for ones that detect every weight-1 error and
/// admit a logical basis in which `pattern` passes the general check for all
/// errors up to `error_weight`. Hits come back in index order; the outcome
/// does not depend on the thread count.
inline SearchResult run_search(const SearchSpec& spec) {
  if (spec.k == 0 || spec.k > 3) throw std::invalid_argument("run_search: need 1 <= k <= 3");
  if (spec.pattern.k() != spec.k) throw std::invalid_argument("run_search: pattern has the wrong logical qubit count");
  detail::ParameterSpace space(spec.n, spec.k);
  const auto errors = errors_up_to_weight(spec.n, spec.error_weight);
  SearchResult res;
  const bool exhaustive = spec.mode == SearchSpec::Mode::kExhaustive;
  if (exhaustive) {
    if (spec.n > 12) throw std::invalid_argument("run_search: exhaustive mode needs n <= 12");
    if (space.total == ~std::uint64_t{0}) throw std::invalid_argument("run_search: parameter space too large");
    res.total = space.total;
  }

  std::uint64_t start = 0;
  std::vector<std::uint64_t> previous_hits;
  if (exhaustive && !spec.checkpoint_path.empty()) {
    std::ifstream in(spec.checkpoint_path);
    std::string key;
    std::uint64_t v;
    while (in >> key >> v) {
      if (key == "next") start = v;
      else if (key == "found") previous_hits.push_back(v);
      else if (key == "detected") res.detected = v;
    }
    for (auto idx : previous_hits) {
      auto [sh, bits] = space.decode(idx);
      bool det = false;
      if (auto hit = detail::evaluate(spec, errors, sh, bits, idx, det)) res.hits.push_back(std::move(*hit));
    }
    res.examined = start;
  }

  const std::uint64_t end = exhaustive ? std::min(space.total, start + spec.budget) : spec.budget;
  const std::uint64_t chunk = 1 << 12;
  for (std::uint64_t lo = start; lo < end; lo += chunk) {
    std::uint64_t hi = std::min(end, lo + chunk);
    std::vector<std::optional<SearchHit>> hits(hi - lo);
    std::vector<char> det(hi - lo, 0);
    parallel_for(hi - lo, spec.threads, [&](std::size_t i) {
      std::uint64_t idx = lo + i;
      std::pair<StandardFormShape, BitVec> params;
      if (exhaustive) {
        params = space.decode(idx);
      } else {
        std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(idx)));
        params = space.sample(rng);
      }
      bool d = false;
      hits[i] = detail::evaluate(spec, errors, params.first, params.second, idx, d);
      det[i] = d;
    });
    std::uint64_t processed = hi - lo;
    for (std::uint64_t i = 0; i < hi - lo; ++i) {
      res.detected += det[i] ? 1 : 0;
      if (hits[i]) {
        res.hits.push_back(std::move(*hits[i]));
        if (spec.max_results && res.hits.size() >= spec.max_results) {
          processed = i + 1;
          break;
        }
      }
    }
    res.examined = lo + processed;
    if (exhaustive && !spec.checkpoint_path.empty()) {
      std::ofstream out(spec.checkpoint_path, std::ios::trunc);
      out << "next " << res.examined << "\n";
      out << "detected " << res.detected << "\n";
      for (const auto& h : res.hits) out << "found " << h.index << "\n";
    }
    if (spec.progress) spec.progress(res.examined, exhaustive ? space.total : spec.budget, res.hits.size());
    if (spec.max_results && res.hits.size() >= spec.max_results) break;
  }
  res.complete = exhaustive && res.examined >= space.total;
  return res;
}

}  // namespace qet
