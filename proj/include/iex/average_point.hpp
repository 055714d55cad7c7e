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

#ifndef IEX_AVERAGE_POINT_HPP
#define IEX_AVERAGE_POINT_HPP

#include <optional>
#include <vector>

#include "iex/core.hpp"
#include "iex/rational.hpp"

namespace iex {

struct PointInstance {
  std::vector<Rational> points;  // one-dimensional, exact rationals

  std::size_t players() const { return points.size(); }
  Rational true_average() const;
};

// v(y) = -|y - a_bar|^p for p in {1, 2}; bottom for the nonparticipation
// output. Other exponents are rejected: they would force inexact
// arithmetic.
ExtValue point_value(const ExtValue& y, const Rational& a_bar, int p);

struct AverageOutcome {
  // nullopt = bottom (what a nonparticipant receives).
  std::vector<ExtValue> outputs;
  BenefitVector benefits;
};

// Sends the average of the reported points to every participant and
// bottom to nonparticipants. Benefits are v(y_i) - v(a_i) for
// participants and 0 otherwise, with v evaluated against the true
// average of all points.
AverageOutcome average_mechanism(const PointInstance& inst,
                                 const std::vector<bool>& participate,
                                 int p = 2);

}  // namespace iex

#endif  // IEX_AVERAGE_POINT_HPP
