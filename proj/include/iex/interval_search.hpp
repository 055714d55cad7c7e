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

#ifndef IEX_INTERVAL_SEARCH_HPP
#define IEX_INTERVAL_SEARCH_HPP

#include <functional>
#include <optional>
#include <vector>

#include "iex/core.hpp"
#include "iex/rational.hpp"

namespace iex {

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

struct IntervalInstance {
  Rational target;                  // the promised common point t
  std::vector<Interval> intervals;  // one per player, each must contain t

  std::size_t players() const { return intervals.size(); }
  void validate() const;
};

// Strictly decreasing value of knowing an interval of a given length.
// The default instantiation is v(len) = -len, which keeps every
// equal-benefit computation closed-form and rational.
using IntervalValueFn = std::function<Rational(const Rational& length)>;

Rational linear_interval_value(const Rational& length);

// v of an interval at target t: v(hi - lo) when t lies inside, bottom
// otherwise.
ExtValue interval_value(const Interval& iv, const Rational& t,
                        const IntervalValueFn& value = linear_interval_value);

struct IntervalOutcome {
  // nullopt = the full real line (what a nonparticipant ends up with).
  std::vector<std::optional<Interval>> outputs;
  BenefitVector benefits;  // participants: v(y)-v(x); nonparticipants: 0
};

// One-dimensional search (interval intersection). The participant with
// the largest left endpoint and the one with the smallest right endpoint
// shrink each other's interval by the same amount
// g = min(beta_j - beta_k, alpha_j - alpha_k); everyone else keeps their
// report. Participants reporting an interval identical to j's (or k's)
// receive j's (or k's) output.
IntervalOutcome one_dim_search(const IntervalInstance& inst,
                               const std::vector<bool>& participate,
                               const IntervalValueFn& value =
                                   linear_interval_value);

}  // namespace iex

#endif  // IEX_INTERVAL_SEARCH_HPP
