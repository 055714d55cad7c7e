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

#include "iex/interval_search.hpp"

#include <algorithm>

#include "iex/error.hpp"

namespace iex {

Rational linear_interval_value(const Rational& length) { return -length; }

void IntervalInstance::validate() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (iv.lo > iv.hi) {
      throw_structural("interval " + std::to_string(i + 1) + " is empty");
    }
    if (!iv.contains(target)) {
      throw_structural("interval " + std::to_string(i + 1) +
                       " does not contain the target point");
    }
  }
}

ExtValue interval_value(const Interval& iv, const Rational& t,
                        const IntervalValueFn& value) {
  if (!iv.contains(t)) return std::nullopt;
  return value(iv.length());
}

IntervalOutcome one_dim_search(const IntervalInstance& inst,
                               const std::vector<bool>& participate,
                               const IntervalValueFn& value) {
  const std::size_t n = inst.players();
  if (participate.size() != n) {
    throw_structural("one_dim_search: participation flags mismatch");
  }
  inst.validate();

  IntervalOutcome out;
  out.outputs.assign(n, std::nullopt);
  out.benefits.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (participate[i]) out.outputs[i] = inst.intervals[i];
  }

  // j: maximal left endpoint (ties: smaller right endpoint, then index);
  // k: minimal right endpoint (ties: larger left endpoint, then index).
  int j = -1, k = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!participate[i]) continue;
    const auto& iv = inst.intervals[i];
    if (j < 0 || iv.lo > inst.intervals[j].lo ||
        (iv.lo == inst.intervals[j].lo && iv.hi < inst.intervals[j].hi)) {
      j = static_cast<int>(i);
    }
    if (k < 0 || iv.hi < inst.intervals[k].hi ||
        (iv.hi == inst.intervals[k].hi && iv.lo > inst.intervals[k].lo)) {
      k = static_cast<int>(i);
    }
  }
  if (j < 0 || j == k) return out;

  const Interval& xj = inst.intervals[j];
  const Interval& xk = inst.intervals[k];
  const Rational g = std::min(xj.hi - xk.hi, xj.lo - xk.lo);
  const Interval yj{xj.lo, xj.hi - g};
  const Interval yk{xk.lo + g, xk.hi};

  for (std::size_t i = 0; i < n; ++i) {
    if (!participate[i]) continue;
    // Identical reports receive identical outputs.
    const Interval& xi = inst.intervals[i];
    const Interval yi = xi == xj ? yj : (xi == xk ? yk : xi);
    out.outputs[i] = yi;
    out.benefits[i] = value(yi.length()) - value(xi.length());
  }
  return out;
}

}  // namespace iex
