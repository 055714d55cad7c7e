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

#ifndef IEX_SET_UNION_HPP
#define IEX_SET_UNION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "iex/core.hpp"

namespace iex {

// Two-party exchange. With labels chosen so the smaller report plays the
// role of player 1 (ties broken by position), the larger player receives
// x1 | x2 and the smaller receives x1 plus the first |x1 \ x2| elements of
// x2 \ x1 under pi. Both benefits equal min(|x1 \ x2|, |x2 \ x1|).
std::array<Mask, 2> two_party(Mask x1, Mask x2);

// Fair exchange among three pairwise-disjoint sets: everyone shares its
// first m = min(|x1|,|x2|,|x3|) elements with both others; exhausted
// players drop out and the survivors finish with two_party on residuals.
std::array<Mask, 3> three_party_disjoint(Mask x1, Mask x2, Mask x3);

// Three-party set union: strips the common intersection, trades the
// pairwise intersections down to one empty pair, then dispatches on the
// sizes of x2/x3 relative to x1 and finishes recursively.
std::array<Mask, 3> three_party(Mask x1, Mask x2, Mask x3);

// Tops up every player below the maximum benefit with fresh elements
// (pi-first from the pooled reports) until v_j = min(max_i v_i, pool cap),
// which is exactly the Pareto-optimality characterization.
Allocation pareto_repair(const SetInstance& inst,
                         const StrategyProfile& profile,
                         const Allocation& alloc);

struct ComputeVTrace {
  long long value = 0;
  // V of every evaluated sub-coalition, keyed by player-index bitmask.
  std::map<std::uint32_t, long long> subset_values;
  // d_k = |z_{-k} \ x_k| for the full coalition.
  std::vector<long long> deficits;
};

// The recursive uniform-benefit level:
//   V = min{ min_k (d_k + V_{-k}), max_k d_k },  V = 0 for n <= 1,
// memoized over all sub-coalitions of size >= 2.
ComputeVTrace compute_v(const std::vector<Mask>& reports);

// Multiparty all-or-nothing set union. Nonparticipants get their (empty)
// report back; participant i gets v_i = min(V, |union \ x_i|) fresh
// elements, pi-first. The source listing writes max in place of min, but
// feasibility and the stability proof both require min.
Allocation multiparty_aon(const SetInstance& inst,
                          const StrategyProfile& profile);
Allocation multiparty_aon(const SetInstance& inst,
                          const StrategyProfile& profile,
                          ComputeVTrace* trace);

}  // namespace iex

#endif  // IEX_SET_UNION_HPP
