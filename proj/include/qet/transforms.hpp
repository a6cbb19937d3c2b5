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

#include <stdexcept>
#include <vector>

#include "qet/stabilizer.hpp"
#include "qet/verify.hpp"

namespace qet {

struct ConcatenatedCode {
  StabilizerCode outer;
  StabilizerCode inner;
  /// Generators: every block's inner generators, then the lifted outer
  /// generators. Logical basis: the lifted outer basis.
  StabilizerCode result;

  /// Lifted classes keep their meaning, so admissible sets carry over as is.
  AdmissibleSet lift(const AdmissibleSet& m) const {
    if (m.k() != outer.k) throw std::invalid_argument("ConcatenatedCode::lift: wrong logical qubit count");
    return m;
  }
};

/// Replaces each letter of an outer operator with the inner logical operator
/// on the matching block of inner.n qubits.
inline PauliOp lift_operator(const PauliOp& p, const StabilizerCode& inner) {
  const std::size_t n2 = inner.n;
  PauliOp out(p.num_qubits() * n2);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    Letter l = p.at(q);
    if (l == Letter::I) continue;
    PauliOp block(n2);
    if (l == Letter::X || l == Letter::Y) block *= inner.logical_x[0];
    if (l == Letter::Z || l == Letter::Y) block *= inner.logical_z[0];
    for (std::size_t i = 0; i < n2; ++i)
      if (block.at(i) != Letter::I) out.set(q * n2 + i, block.at(i));
  }
  return out;
}

inline ConcatenatedCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner) {
  if (inner.k != 1) throw std::invalid_argument("concatenate: inner code must encode one qubit");
  for (const auto* c : {&outer, &inner}) {
    auto d = validate_code(*c);
    if (!d.ok()) throw std::invalid_argument("concatenate: invalid input code:\n" + d.summary());
  }
  const std::size_t n1 = outer.n, n2 = inner.n, n = n1 * n2;
  ConcatenatedCode cc{outer, inner, {}};
  auto& r = cc.result;
  r.n = n;
  r.k = outer.k;
  for (std::size_t b = 0; b < n1; ++b)
    for (const auto& g : inner.generators) {
      PauliOp p(n);
      for (std::size_t i = 0; i < n2; ++i)
        if (g.at(i) != Letter::I) p.set(b * n2 + i, g.at(i));
      r.generators.push_back(p);
    }
  for (const auto& g : outer.generators) r.generators.push_back(lift_operator(g, inner));
  for (const auto& x : outer.logical_x) r.logical_x.push_back(lift_operator(x, inner));
  for (const auto& z : outer.logical_z) r.logical_z.push_back(lift_operator(z, inner));
  auto d = validate_code(r);
  if (!d.ok()) throw std::logic_error("concatenate: result failed validation:\n" + d.summary());
  return cc;
}

}  // namespace qet
