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

#ifndef IEX_VERIFIER_HPP
#define IEX_VERIFIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iex/average_point.hpp"
#include "iex/core.hpp"
#include "iex/general_mechanism.hpp"
#include "iex/interval_search.hpp"
#include "iex/set_union.hpp"

namespace iex {

// Brute-force, exhaustive-at-desk-scale property checkers. Every checker
// is deterministic and a failing report carries a counterexample that
// replays to the same verdict.

struct PropertyReport {
  std::string property;
  bool pass = true;
  bool skipped = false;  // capacity refusal; not a failure unless strict
  long long instances_checked = 0;
  std::optional<std::string> counterexample;
  std::string note;
};

using SetMechanism =
    std::function<Allocation(const SetInstance&, const StrategyProfile&)>;
using IntervalMechanism = std::function<IntervalOutcome(
    const IntervalInstance&, const std::vector<bool>&)>;
using AverageMechanism = std::function<AverageOutcome(
    const PointInstance&, const std::vector<bool>&, int p)>;

// Canonical wrappers for the real mechanisms.
SetMechanism mech_two_party();
SetMechanism mech_three_party(bool with_repair = false);
SetMechanism mech_multiparty_aon(bool with_repair = false);

// Deliberately broken mechanisms: negative controls for the checkers.
SetMechanism broken_set_favor_first();   // hands the pooled union to player 1
SetMechanism broken_set_reverse_pi();    // awards player 1 from the pi-suffix
SetMechanism broken_set_stingy();        // halves player 1's award
IntervalMechanism broken_interval_one_sided();  // only j's interval shrinks
AverageMechanism broken_average_skewed();       // double-weights the first
std::function<long long(const std::vector<Mask>&)> broken_compute_v();

// Benefits measured against the true sets (what a deviating player
// actually learns); used by every deviation comparison.
BenefitVector true_benefits(const SetInstance& inst, const Allocation& alloc);

// Weak dominance of participation over all 2^(n-1) all-or-nothing
// profiles of the other players. The PointInstance overload instead
// checks single deviations from full participation: the average
// mechanism only makes full participation an equilibrium (a lone rival
// far from the true average can make joining costly).
PropertyReport check_truthful_aon(const SetMechanism& mech,
                                  const SetInstance& inst);
PropertyReport check_truthful_aon(const IntervalInstance& inst,
                                  const IntervalMechanism& mech = nullptr);
PropertyReport check_truthful_aon(const PointInstance& inst, int p = 2,
                                  const AverageMechanism& mech = nullptr);
PropertyReport check_truthful_aon(const SubgroupValueFn& v);

// Every subset-hiding deviation of a single player, others truthful.
PropertyReport check_truthful_subsets(const SetMechanism& mech,
                                      const SetInstance& inst,
                                      int max_universe = 6);

// (a) structural characterization of benefits and (b) when small enough,
// a brute-force search over all feasible, weakly-larger benefit vectors
// for a utility-Pareto improvement (outcomes can only add information).
PropertyReport check_pareto(const SetInstance& inst,
                            const StrategyProfile& profile,
                            const Allocation& alloc);

// Independent "largest stable V" oracle, compared against a closed-form
// ComputeV implementation (the real one by default).
long long stable_v_oracle(const std::vector<Mask>& reports);
PropertyReport check_welfare_optimal_v(
    const std::vector<Mask>& reports,
    const std::function<long long(const std::vector<Mask>&)>& compute =
        nullptr);

// Equal-sized truthful reports must earn equal benefits.
PropertyReport check_symmetry(const SetMechanism& mech,
                              const SetInstance& inst);
PropertyReport check_symmetry(const IntervalInstance& inst,
                              const IntervalMechanism& mech = nullptr);

// x_k subset of x_i implies y_k subset of y_i.
PropertyReport check_strong_dominance(const SetInstance& inst,
                                      const SetMechanism& mech = nullptr);

// phi_i(S) >= phi_j(S) - phi_j(S \ {i}) over all coalitions and ordered
// pairs. Accepts unvalidated tables so negative controls can exercise it.
PropertyReport check_phi_inequality(const SubgroupValueFn& v);

// Single-deviator benefit deltas: Delta v_d <= Delta v_i for every
// remaining participant (square loss, exact rationals).
PropertyReport check_average_delta(const PointInstance& inst,
                                   const AverageMechanism& mech = nullptr);

}  // namespace iex

#endif  // IEX_VERIFIER_HPP
