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
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "qet/parallel.hpp"
#include "qet/stabilizer.hpp"
#include "qet/verify.hpp"

namespace qet {

/// Pauli channel. Explicit lists leave the remaining probability on the
/// identity; the depolarizing model applies X, Y or Z (p/3 each) to every
/// qubit independently.
struct ChannelModel {
  struct Explicit {
    std::vector<std::pair<PauliOp, double>> terms;
  };
  struct Depolarizing {
    double p = 0;
  };
  std::variant<Explicit, Depolarizing> kind;

  static ChannelModel explicit_list(std::vector<std::pair<PauliOp, double>> terms) {
    double sum = 0;
    for (const auto& [e, p] : terms) {
      if (!(p >= 0)) throw std::invalid_argument("ChannelModel: negative probability");
      sum += p;
    }
    if (sum > 1 + 1e-12) throw std::invalid_argument("ChannelModel: probabilities sum above 1");
    return ChannelModel{Explicit{std::move(terms)}};
  }
  static ChannelModel depolarizing(double p) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("ChannelModel: rate must lie in [0, 1]");
    return ChannelModel{Depolarizing{p}};
  }
  /// Exactly one of the 3n single-qubit errors, uniformly.
  static ChannelModel uniform_single(std::size_t n) {
    std::vector<std::pair<PauliOp, double>> t;
    for (std::size_t q = 0; q < n; ++q)
      for (Letter l : kNonIdentityLetters) t.emplace_back(PauliOp::single(n, q, l), 1.0 / static_cast<double>(3 * n));
    return explicit_list(std::move(t));
  }
  static ChannelModel identity() { return ChannelModel{Explicit{}}; }
};

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t admissible = 0;
  std::uint64_t violations = 0;  ///< covered samples whose residual was not admissible
  std::uint64_t uncovered = 0;   ///< samples outside the verified error set
  std::map<LogicalClass, std::uint64_t> class_counts;  ///< residual classes of covered samples
  std::map<BitVec, std::uint64_t> syndrome_counts;     ///< all samples

  double admissibility_rate() const {
    std::uint64_t covered = trials - uncovered;
    return covered ? static_cast<double>(admissible) / static_cast<double>(covered) : 1.0;
  }

  void merge(const TrialReport& o) {
    trials += o.trials;
    admissible += o.admissible;
    violations += o.violations;
    uncovered += o.uncovered;
    for (const auto& [k, v] : o.class_counts) class_counts[k] += v;
    for (const auto& [k, v] : o.syndrome_counts) syndrome_counts[k] += v;
  }
};

namespace detail {

class ErrorSampler {
 public:
  ErrorSampler(const ChannelModel& m, std::size_t n) : model_(&m), n_(n) {
    if (auto* e = std::get_if<ChannelModel::Explicit>(&m.kind)) {
      double acc = 0;
      for (const auto& [op, p] : e->terms) {
        if (op.num_qubits() != n) throw std::invalid_argument("channel term acts on the wrong number of qubits");
        acc += p;
        cumulative_.push_back(acc);
      }
    }
  }

  PauliOp sample(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (auto* e = std::get_if<ChannelModel::Explicit>(&model_->kind)) {
      double r = u(rng);
      auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
      if (it == cumulative_.end()) return PauliOp::identity(n_);
      return e->terms[static_cast<std::size_t>(it - cumulative_.begin())].first;
    }
    double p = std::get<ChannelModel::Depolarizing>(model_->kind).p;
    PauliOp out(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      double r = u(rng);
      if (r < p) out.set(q, kNonIdentityLetters[std::min<std::size_t>(2, static_cast<std::size_t>(3 * r / p))]);
    }
    return out;
  }

 private:
  const ChannelModel* model_;
  std::size_t n_;
  std::vector<double> cumulative_;
};

}  // namespace detail

/// Samples errors, applies the table's correction (drawing a mixture
/// component) and tallies the residual classes. Trials run in fixed-size
/// chunks with per-chunk seeds, so results do not depend on `threads`.
inline TrialReport run_trials(const StabilizerCode& c, const RecoveryTable& table, const ChannelModel& model,
                              std::uint64_t trials, std::uint64_t seed, std::size_t threads = 1) {
  if (table.n != c.n || table.k != c.k) throw std::invalid_argument("run_trials: table was built for another code");
  detail::ErrorSampler sampler(model, c.n);
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<TrialReport> parts(chunks);
  parallel_for(chunks, threads, [&](std::size_t ci) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(ci)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto& rep = parts[ci];
    std::uint64_t count = std::min(kChunk, trials - ci * kChunk);
    for (std::uint64_t t = 0; t < count; ++t) {
      PauliOp e = sampler.sample(rng);
      BitVec s = syndrome(c, e);
      ++rep.trials;
      ++rep.syndrome_counts[s];
      const RecoveryEntry* entry = table.covers(e) ? table.find(s) : nullptr;
      if (!entry) {
        ++rep.uncovered;
        continue;
      }
      double r = u(rng), acc = 0;
      const RecoveryComponent* comp = &entry->components.back();
      for (const auto& cand : entry->components) {
        acc += cand.weight;
        if (r < acc) {
          comp = &cand;
          break;
        }
      }
      PauliOp residual = comp->correction * e;
      if (syndrome(c, residual).any()) {
        ++rep.violations;
        continue;
      }
      LogicalClass cls = raw_class(c, residual);
      ++rep.class_counts[cls];
      if (table.admissible.contains(cls))
        ++rep.admissible;
      else
        ++rep.violations;
    }
  });
  TrialReport out;
  out.seed = seed;
  for (const auto& p : parts) out.merge(p);
  return out;
}

/// Exact residual-class distribution for an explicit channel whose support
/// the table covers.
inline std::map<LogicalClass, double> exact_class_distribution(const StabilizerCode& c, const RecoveryTable& table,
                                                               const ChannelModel& model) {
  const auto* e = std::get_if<ChannelModel::Explicit>(&model.kind);
  if (!e) throw std::invalid_argument("exact_class_distribution: needs an explicit channel");
  std::map<LogicalClass, double> dist;
  double total = 0;
  auto add = [&](const PauliOp& op, double p) {
    const RecoveryEntry* entry = table.covers(op) ? table.find(syndrome(c, op)) : nullptr;
    if (!entry) throw std::invalid_argument("exact_class_distribution: " + render(op) + " is not covered");
    for (const auto& comp : entry->components) dist[raw_class(c, comp.correction * op)] += p * comp.weight;
    total += p;
  };
  for (const auto& [op, p] : e->terms) add(op, p);
  if (total < 1) add(PauliOp::identity(c.n), 1 - total);
  return dist;
}

/// Total-variation distance between the empirical tallies and a distribution.
inline double total_variation(const TrialReport& r, const std::map<LogicalClass, double>& exact) {
  std::uint64_t covered = r.trials - r.uncovered;
  if (covered == 0) return 0;
  std::map<LogicalClass, double> diff = exact;
  for (const auto& [k, v] : r.class_counts) diff[k] -= static_cast<double>(v) / static_cast<double>(covered);
  double tv = 0;
  for (const auto& [k, v] : diff) tv += std::abs(v);
  return tv / 2;
}

}  // namespace qet
