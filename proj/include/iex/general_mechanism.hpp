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

#ifndef IEX_GENERAL_MECHANISM_HPP
#define IEX_GENERAL_MECHANISM_HPP

#include <cstdint>
#include <vector>

#include "iex/core.hpp"
#include "iex/rational.hpp"

namespace iex {

// Monotone coalition value, tabulated over all 2^n subsets of players.
// Index = player-index bitmask; table[0] must be 0.
struct SubgroupValueFn {
  int n = 0;
  std::vector<Rational> table;

  const Rational& value(std::uint32_t subset) const { return table[subset]; }
  std::uint32_t all_players() const {
    return static_cast<std::uint32_t>((1u << n) - 1);
  }
  // Checks completeness, V(empty) = 0 and monotonicity.
  void validate() const;
};

using PhiVector = std::vector<Rational>;

// Rewardable contribution of player i within coalition S:
//   phi_i(S) = max_{T subset of S, i in T}
//                  min{ V(T) - V({i}), V(T) - V(T \ {i}) }.
Rational phi(const SubgroupValueFn& v, std::uint32_t coalition, int player);

// Benefits of the general mechanism: phi_i(S) for cooperating players,
// 0 for everyone else.
BenefitVector general_mechanism(const SubgroupValueFn& v,
                                const std::vector<bool>& cooperate);

// Coverage instantiation V(S) = |union of x_i over i in S|.
// Capacity-limited by the 2^n table.
SubgroupValueFn make_coverage_value(const SetInstance& inst);

// Realizes integral coverage benefits as element sets:
// y_i = x_i plus the pi-first benefit_i elements outside x_i.
// Non-cooperators keep their own set.
Allocation coverage_allocate(const SetInstance& inst,
                             const PhiVector& benefits,
                             std::uint32_t cooperating);

}  // namespace iex

#endif  // IEX_GENERAL_MECHANISM_HPP
