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

#ifndef IEX_CORE_HPP
#define IEX_CORE_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "iex/error.hpp"
#include "iex/rational.hpp"

namespace iex {

// Element sets are bitmasks over the universe. Bit index = rank of the
// element in the universe listing, which is also the fixed total order pi.
// Every "select arbitrary elements" step in a mechanism takes the
// lowest-index bits first (a pi-prefix), so runs are fully deterministic.
using Mask = std::uint64_t;

constexpr std::size_t kMaxUniverse = 64;

inline int set_size(Mask m) { return std::popcount(m); }

// The lowest `count` set bits of `pool` (the pi-prefix of the pool).
// Throws if the pool has fewer than `count` elements.
Mask pi_prefix(Mask pool, long long count);

struct Universe {
  std::vector<std::string> elements;  // listing order is pi

  std::size_t size() const { return elements.size(); }
  Mask full() const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Mask m) const;
  void validate() const;  // distinct names, size within capacity
};

struct SetInstance {
  Universe universe;
  std::vector<Mask> true_sets;

  std::size_t players() const { return true_sets.size(); }
  void validate() const;  // each set within the universe
};

// Reported sets, one per player. x_i must be a subset of S_i; the
// all-or-nothing restriction additionally requires x_i in {empty, S_i}.
struct StrategyProfile {
  std::vector<Mask> reports;

  static StrategyProfile truthful(const SetInstance& inst) {
    return StrategyProfile{inst.true_sets};
  }
  bool all_or_nothing(const SetInstance& inst) const;
  void validate(const SetInstance& inst) const;
};

struct Allocation {
  std::vector<Mask> outputs;
};

using BenefitVector = std::vector<Rational>;
using UtilityVector = std::vector<Rational>;

// v_i = |y_i \ x_i|: new elements relative to the report.
BenefitVector information_benefit(const SetInstance& inst,
                                  const StrategyProfile& profile,
                                  const Allocation& alloc);

// u_i = v_i - max_{j != i} v_j. For a single player, u_1 = v_1
// (the max over an empty set is taken as 0).
UtilityVector utility_vector(const BenefitVector& v);

// Sum of benefits.
Rational social_welfare(const BenefitVector& v);

}  // namespace iex

#endif  // IEX_CORE_HPP
