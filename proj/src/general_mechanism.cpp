// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iex/general_mechanism.hpp"

#include <cstdint>

namespace iex {

void SubgroupValueFn::validate() const {
  if (n < 0 || n > 16) {
    throw Error(ErrorKind::kCapacity, "value table: player count out of range");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw_structural("value table must have exactly 2^n entries");
  }
  if (!table.empty() && table[0] != 0) {
    throw_structural("value table: V(empty) must be 0");
  }
  // Monotonicity: V(S \ {i}) <= V(S) for every S and i suffices.
  for (std::uint32_t s = 1; s < table.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t bit = 1u << i;
      if ((s & bit) && table[s & ~bit] > table[s]) {
        throw_structural("value table is not monotone");
      }
    }
  }
}

Rational phi(const SubgroupValueFn& v, std::uint32_t coalition, int player) {
  const std::uint32_t bit = 1u << player;
  if (!(coalition & bit)) {
    throw_structural("phi: player is not in the coalition");
  }
  const std::uint32_t others = coalition & ~bit;
  const Rational v_single = v.value(bit);

  // Enumerate every T containing the player: T = {player} | (R subset of
  // the other coalition members).
  bool first = true;
  Rational best;
  std::uint32_t r = 0;
  do {
    const std::uint32_t t = r | bit;
    const Rational own_gain = v.value(t) - v_single;
    const Rational marginal = v.value(t) - v.value(t & ~bit);
    const Rational term = own_gain < marginal ? own_gain : marginal;
    if (first || term > best) best = term;
    first = false;
    r = (r - others) & others;  // next subset of `others`
  } while (r != 0);
  return best;
}

BenefitVector general_mechanism(const SubgroupValueFn& v,
                                const std::vector<bool>& cooperate) {
  if (cooperate.size() != static_cast<std::size_t>(v.n)) {
    throw_structural("general_mechanism: cooperation flags mismatch");
  }
  std::uint32_t coalition = 0;
  for (int i = 0; i < v.n; ++i) {
    if (cooperate[i]) coalition |= 1u << i;
  }
  BenefitVector out(v.n, Rational(0));
  for (int i = 0; i < v.n; ++i) {
    if (cooperate[i]) out[i] = phi(v, coalition, i);
  }
  return out;
}

SubgroupValueFn make_coverage_value(const SetInstance& inst) {
  const std::size_t n = inst.players();
  if (n > 16) {
    throw Error(ErrorKind::kCapacity, "coverage value: too many players");
  }
  SubgroupValueFn v;
  v.n = static_cast<int>(n);
  v.table.resize(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < v.table.size(); ++s) {
    Mask u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (1u << i)) u |= inst.true_sets[i];
    }
    v.table[s] = set_size(u);
  }
  return v;
}

Allocation coverage_allocate(const SetInstance& inst,
                             const PhiVector& benefits,
                             std::uint32_t cooperating) {
  const std::size_t n = inst.players();
  if (benefits.size() != n) {
    throw_structural("coverage_allocate: benefit vector mismatch");
  }
  Mask pool = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cooperating & (1u << i)) pool |= inst.true_sets[i];
  }
  Allocation alloc;
  alloc.outputs = inst.true_sets;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cooperating & (1u << i))) continue;
    const Rational& b = benefits[i];
    if (denominator(b) != 1 || b < 0 ||
        b > set_size(pool & ~inst.true_sets[i])) {
      throw_structural("coverage_allocate: infeasible benefit for player " +
                       std::to_string(i + 1));
    }
    const long long count = static_cast<long long>(numerator(b));
    alloc.outputs[i] |= pi_prefix(pool & ~inst.true_sets[i], count);
  }
  return alloc;
}

}  // namespace iex
