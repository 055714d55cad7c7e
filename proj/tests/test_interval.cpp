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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iex/interval_search.hpp"

using namespace iex;

namespace {

Interval iv(long long lo, long long hi) {
  return Interval{Rational(lo), Rational(hi)};
}

}  // namespace

TEST_CASE("interval_value: linear instantiation") {
  CHECK(*interval_value(iv(0, 10), Rational(5)) == Rational(-10));
  CHECK(*interval_value(Interval{Rational(4), Rational(5)}, Rational(9, 2)) ==
        Rational(-1));
  CHECK_FALSE(interval_value(iv(0, 1), Rational(2)).has_value());
}

TEST_CASE("instance validation: every interval must contain t") {
  IntervalInstance bad{Rational(9, 2), {iv(0, 10), iv(5, 7)}};
  CHECK_THROWS_AS(bad.validate(), Error);
  IntervalInstance inverted{Rational(0), {Interval{Rational(1), Rational(0)}}};
  CHECK_THROWS_AS(inverted.validate(), Error);
}

TEST_CASE("one_dim_search: worked trace [0,10],[2,5],[4,9] at t=9/2") {
  IntervalInstance inst{Rational(9, 2), {iv(0, 10), iv(2, 5), iv(4, 9)}};
  const auto out = one_dim_search(inst, {true, true, true});
  // j = 3 (largest left endpoint), k = 2 (smallest right), g = min(4,2) = 2.
  CHECK(*out.outputs[0] == iv(0, 10));
  CHECK(*out.outputs[1] == iv(4, 5));
  CHECK(*out.outputs[2] == iv(4, 7));
  CHECK(out.benefits == BenefitVector{0, 2, 2});
}

TEST_CASE("one_dim_search: identical intervals trade nothing") {
  IntervalInstance inst{Rational(1), {iv(0, 2), iv(0, 2), iv(0, 2)}};
  const auto out = one_dim_search(inst, {true, true, true});
  for (int i = 0; i < 3; ++i) CHECK(*out.outputs[i] == iv(0, 2));
  CHECK(out.benefits == BenefitVector{0, 0, 0});
}

TEST_CASE("one_dim_search: nested intervals select j = k, no exchange") {
  IntervalInstance inst{Rational(7, 2), {iv(0, 10), iv(3, 4)}};
  const auto out = one_dim_search(inst, {true, true});
  CHECK(*out.outputs[0] == iv(0, 10));
  CHECK(*out.outputs[1] == iv(3, 4));
  CHECK(out.benefits == BenefitVector{0, 0});
}

TEST_CASE("one_dim_search: nonparticipants get the full line and 0") {
  IntervalInstance inst{Rational(1), {iv(0, 4), iv(-2, 2), iv(0, 2)}};
  const auto out = one_dim_search(inst, {true, false, true});
  CHECK_FALSE(out.outputs[1].has_value());
  CHECK(out.benefits[1] == 0);
  // among {1,3}: j = 1 or 3? alpha: 0 vs 0 tie -> smaller beta wins: player 3.
  // beta: 4 vs 2 -> k would also be player 3 -> j == k, no exchange.
  CHECK(*out.outputs[0] == iv(0, 4));
  CHECK(*out.outputs[2] == iv(0, 2));
}

TEST_CASE("one_dim_search: ties with j receive j's output") {
  IntervalInstance inst{Rational(2),
                        {iv(1, 5), iv(1, 5), iv(0, 3)}};
  const auto out = one_dim_search(inst, {true, true, true});
  // j is the [1,5] pair (alpha max), k = [0,3]; g = min(5-3, 1-0) = 1.
  CHECK(*out.outputs[0] == iv(1, 4));
  CHECK(*out.outputs[1] == iv(1, 4));
  CHECK(*out.outputs[2] == iv(1, 3));
  CHECK(out.benefits == BenefitVector{1, 1, 1});
}

TEST_CASE("one_dim_search invariants on random instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Rational t(static_cast<long long>(rng() % 21) - 10, 2);
    IntervalInstance inst{t, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const Rational left(1 + static_cast<long long>(rng() % 12), 4);
      const Rational right(1 + static_cast<long long>(rng() % 12), 4);
      inst.intervals.push_back({t - left, t + right});
    }
    const auto out = one_dim_search(inst, std::vector<bool>(n, true));
    int improved = 0;
    Rational g;
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(out.outputs[i].has_value());
      const Interval& y = *out.outputs[i];
      CHECK(y.contains(t));                       // target kept
      CHECK(inst.intervals[i].lo <= y.lo);        // intervals only shrink
      CHECK(y.hi <= inst.intervals[i].hi);
      CHECK(out.benefits[i] >= 0);
      if (out.benefits[i] > 0) {
        ++improved;
        if (improved == 1) g = out.benefits[i];
        CHECK(out.benefits[i] == g);  // all improvements are equal
      }
    }
    CHECK(improved != 1);  // trades happen in pairs (or groups of ties)
  }
}
