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

#ifndef IEX_SCENARIO_HPP
#define IEX_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iex/average_point.hpp"
#include "iex/core.hpp"
#include "iex/general_mechanism.hpp"
#include "iex/interval_search.hpp"

namespace iex {

enum class ScenarioKind { kSetUnion, kInterval, kAverage, kGeneral };

std::string kind_name(ScenarioKind kind);
ScenarioKind kind_from_name(const std::string& name);

// A parsed scenario document. Rationals travel as "p/q" strings; the
// universe listing order is the element order pi.
struct Scenario {
  ScenarioKind kind = ScenarioKind::kSetUnion;

  // set-union and coverage-general
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> sets;
  std::optional<std::vector<std::vector<std::string>>> reports;

  // AON participation / cooperation flags (optional; default: everyone in)
  std::optional<std::vector<bool>> participate;

  // interval
  Rational target;
  std::vector<Interval> intervals;

  // average
  std::vector<Rational> points;
  int p = 2;

  // general
  int players = 0;
  bool coverage = true;                // else explicit table below
  std::vector<Rational> value_table;   // 2^players entries, mask-indexed

  std::uint64_t seed = 0;

  bool operator==(const Scenario& other) const;
};

// Parsing validates every instance invariant of the target module
// (subset containment, interval containment of t, table monotonicity...).
// Throws iex::Error(kParse / kStructural) with a diagnostic.
Scenario parse_scenario(const std::string& text);

// Canonical emission: parse(emit(s)) == s and emit is byte-stable.
std::string emit_scenario(const Scenario& s);

// Deterministic seeded generators. `value_kind` applies to kGeneral
// ("coverage" or "table"). Emitted documents re-parse to valid instances.
Scenario gen_scenario(ScenarioKind kind, int players, int universe_size,
                      const std::string& value_kind, std::uint64_t seed);

// Instance extraction (validates as it converts).
SetInstance to_set_instance(const Scenario& s);
StrategyProfile to_strategy_profile(const Scenario& s,
                                    const SetInstance& inst);
IntervalInstance to_interval_instance(const Scenario& s);
PointInstance to_point_instance(const Scenario& s);
SubgroupValueFn to_value_fn(const Scenario& s);
std::vector<bool> participation_flags(const Scenario& s, std::size_t n);

}  // namespace iex

#endif  // IEX_SCENARIO_HPP
