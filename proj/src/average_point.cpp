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

#include "iex/average_point.hpp"

#include "iex/error.hpp"

namespace iex {

Rational PointInstance::true_average() const {
  if (points.empty()) {
    throw_structural("point instance has no players");
  }
  Rational sum = 0;
  for (const auto& a : points) sum += a;
  return sum / Rational(points.size());
}

ExtValue point_value(const ExtValue& y, const Rational& a_bar, int p) {
  if (p != 1 && p != 2) {
    throw Error(ErrorKind::kConfig, "point_value: only p in {1,2} supported");
  }
  if (!y) return std::nullopt;
  Rational d = *y - a_bar;
  if (d < 0) d = -d;
  return p == 1 ? Rational(-d) : Rational(-(d * d));
}

AverageOutcome average_mechanism(const PointInstance& inst,
                                 const std::vector<bool>& participate,
                                 int p) {
  const std::size_t n = inst.players();
  if (participate.size() != n) {
    throw_structural("average_mechanism: participation flags mismatch");
  }
  const Rational a_bar = inst.true_average();

  Rational sum = 0;
  long long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (participate[i]) {
      sum += inst.points[i];
      ++count;
    }
  }
  const ExtValue reported_avg =
      count > 0 ? ExtValue(sum / Rational(count)) : std::nullopt;

  AverageOutcome out;
  out.outputs.assign(n, std::nullopt);
  out.benefits.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!participate[i]) continue;
    out.outputs[i] = reported_avg;
    // v depends on the true average; both values are finite here since a
    // participant's own point and the reported average are real points.
    out.benefits[i] = *point_value(reported_avg, a_bar, p) -
                      *point_value(inst.points[i], a_bar, p);
  }
  return out;
}

}  // namespace iex
