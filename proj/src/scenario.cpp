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

#include "iex/scenario.hpp"

#include <random>

#include <json.hpp>

namespace iex {

using nlohmann::json;

std::string kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSetUnion: return "set-union";
    case ScenarioKind::kInterval: return "interval";
    case ScenarioKind::kAverage: return "average";
    case ScenarioKind::kGeneral: return "general";
  }
  throw Error(ErrorKind::kConfig, "unknown scenario kind");
}

ScenarioKind kind_from_name(const std::string& name) {
  if (name == "set-union") return ScenarioKind::kSetUnion;
  if (name == "interval") return ScenarioKind::kInterval;
  if (name == "average") return ScenarioKind::kAverage;
  if (name == "general") return ScenarioKind::kGeneral;
  throw Error(ErrorKind::kParse, "unknown problem kind '" + name + "'");
}

bool Scenario::operator==(const Scenario& other) const {
  return kind == other.kind && universe == other.universe &&
         sets == other.sets && reports == other.reports &&
         participate == other.participate && target == other.target &&
         intervals == other.intervals && points == other.points &&
         p == other.p && players == other.players &&
         coverage == other.coverage && value_table == other.value_table &&
         seed == other.seed;
}

namespace {

std::vector<Rational> parse_rational_array(const json& arr,
                                           const std::string& field) {
  if (!arr.is_array()) {
    throw Error(ErrorKind::kParse, "'" + field + "' must be an array");
  }
  std::vector<Rational> out;
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw Error(ErrorKind::kParse,
                  "'" + field + "' entries must be rational strings");
    }
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

std::vector<std::vector<std::string>> parse_string_matrix(
    const json& arr, const std::string& field) {
  if (!arr.is_array()) {
    throw Error(ErrorKind::kParse, "'" + field + "' must be an array");
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& row : arr) {
    if (!row.is_array()) {
      throw Error(ErrorKind::kParse,
                  "'" + field + "' entries must be arrays of element names");
    }
    out.push_back(row.get<std::vector<std::string>>());
  }
  return out;
}

void validate_scenario(const Scenario& s) {
  switch (s.kind) {
    case ScenarioKind::kSetUnion: {
      if (s.sets.empty()) throw_structural("empty player list");
      const SetInstance inst = to_set_instance(s);
      to_strategy_profile(s, inst);
      break;
    }
    case ScenarioKind::kInterval: {
      if (s.intervals.empty()) throw_structural("empty player list");
      const IntervalInstance inst = to_interval_instance(s);
      inst.validate();
      participation_flags(s, inst.players());
      break;
    }
    case ScenarioKind::kAverage: {
      if (s.points.empty()) throw_structural("empty player list");
      if (s.p != 1 && s.p != 2) {
        throw Error(ErrorKind::kConfig, "exponent p must be 1 or 2");
      }
      participation_flags(s, s.points.size());
      break;
    }
    case ScenarioKind::kGeneral: {
      if (s.players <= 0) throw_structural("empty player list");
      to_value_fn(s).validate();
      participation_flags(s, s.players);
      break;
    }
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") ||
      !doc["kind"].is_string()) {
    throw Error(ErrorKind::kParse, "scenario must be an object with 'kind'");
  }

  Scenario s;
  try {
    s.kind = kind_from_name(doc["kind"].get<std::string>());
    s.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("participate")) {
      s.participate = doc["participate"].get<std::vector<bool>>();
    }
    switch (s.kind) {
      case ScenarioKind::kSetUnion:
        s.universe = doc.at("universe").get<std::vector<std::string>>();
        s.sets = parse_string_matrix(doc.at("sets"), "sets");
        if (doc.contains("reports")) {
          s.reports = parse_string_matrix(doc["reports"], "reports");
        }
        break;
      case ScenarioKind::kInterval: {
        s.target = parse_rational(doc.at("target").get<std::string>());
        for (const auto& pair : doc.at("intervals")) {
          if (!pair.is_array() || pair.size() != 2) {
            throw Error(ErrorKind::kParse,
                        "intervals must be [lo, hi] string pairs");
          }
          s.intervals.push_back(
              {parse_rational(pair[0].get<std::string>()),
               parse_rational(pair[1].get<std::string>())});
        }
        break;
      }
      case ScenarioKind::kAverage:
        s.points = parse_rational_array(doc.at("points"), "points");
        s.p = doc.value("p", 2);
        break;
      case ScenarioKind::kGeneral: {
        s.players = doc.at("players").get<int>();
        const auto& value = doc.at("value");
        if (value.is_string() && value.get<std::string>() == "coverage") {
          s.coverage = true;
          s.universe = doc.at("universe").get<std::vector<std::string>>();
          s.sets = parse_string_matrix(doc.at("sets"), "sets");
        } else if (value.is_object() && value.contains("table")) {
          s.coverage = false;
          s.value_table = parse_rational_array(value["table"], "table");
        } else {
          throw Error(ErrorKind::kParse,
                      "'value' must be \"coverage\" or {\"table\": [...]}");
        }
        break;
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  validate_scenario(s);
  return s;
}

std::string emit_scenario(const Scenario& s) {
  json doc;
  doc["kind"] = kind_name(s.kind);
  doc["seed"] = s.seed;
  if (s.participate) doc["participate"] = *s.participate;
  switch (s.kind) {
    case ScenarioKind::kSetUnion:
      doc["universe"] = s.universe;
      doc["sets"] = s.sets;
      if (s.reports) doc["reports"] = *s.reports;
      break;
    case ScenarioKind::kInterval: {
      doc["target"] = format_rational(s.target);
      json arr = json::array();
      for (const auto& iv : s.intervals) {
        arr.push_back({format_rational(iv.lo), format_rational(iv.hi)});
      }
      doc["intervals"] = arr;
      break;
    }
    case ScenarioKind::kAverage: {
      json arr = json::array();
      for (const auto& a : s.points) arr.push_back(format_rational(a));
      doc["points"] = arr;
      doc["p"] = s.p;
      break;
    }
    case ScenarioKind::kGeneral:
      doc["players"] = s.players;
      if (s.coverage) {
        doc["value"] = "coverage";
        doc["universe"] = s.universe;
        doc["sets"] = s.sets;
      } else {
        json arr = json::array();
        for (const auto& v : s.value_table) {
          arr.push_back(format_rational(v));
        }
        doc["value"] = json{{"table", arr}};
      }
      break;
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Instance extraction

SetInstance to_set_instance(const Scenario& s) {
  SetInstance inst;
  inst.universe.elements = s.universe;
  inst.universe.validate();
  for (const auto& names : s.sets) {
    inst.true_sets.push_back(inst.universe.mask_of(names));
  }
  inst.validate();
  return inst;
}

StrategyProfile to_strategy_profile(const Scenario& s,
                                    const SetInstance& inst) {
  StrategyProfile prof;
  if (s.reports) {
    for (const auto& names : *s.reports) {
      prof.reports.push_back(inst.universe.mask_of(names));
    }
  } else {
    const auto flags = participation_flags(s, inst.players());
    for (std::size_t i = 0; i < inst.players(); ++i) {
      prof.reports.push_back(flags[i] ? inst.true_sets[i] : Mask{0});
    }
  }
  prof.validate(inst);
  return prof;
}

IntervalInstance to_interval_instance(const Scenario& s) {
  IntervalInstance inst{s.target, s.intervals};
  inst.validate();
  return inst;
}

PointInstance to_point_instance(const Scenario& s) {
  return PointInstance{s.points};
}

SubgroupValueFn to_value_fn(const Scenario& s) {
  if (s.coverage) {
    Scenario set_view = s;
    set_view.kind = ScenarioKind::kSetUnion;
    const SetInstance inst = to_set_instance(set_view);
    if (static_cast<int>(inst.players()) != s.players) {
      throw_structural("'players' does not match the number of sets");
    }
    return make_coverage_value(inst);
  }
  SubgroupValueFn v;
  v.n = s.players;
  v.table = s.value_table;
  v.validate();
  return v;
}

std::vector<bool> participation_flags(const Scenario& s, std::size_t n) {
  if (!s.participate) return std::vector<bool>(n, true);
  if (s.participate->size() != n) {
    throw_structural("'participate' length does not match the player count");
  }
  return *s.participate;
}

// ---------------------------------------------------------------------------
// Seeded generation

namespace {

// Portable draw: mt19937_64 output is fully specified by the standard;
// plain modulo keeps the stream identical across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

std::vector<std::string> default_universe(int universe_size) {
  std::vector<std::string> u;
  for (int i = 1; i <= universe_size; ++i) {
    u.push_back("e" + std::to_string(i));
  }
  return u;
}

void gen_sets(Scenario& s, std::mt19937_64& rng, int players,
              int universe_size) {
  s.universe = default_universe(universe_size);
  s.sets.assign(players, {});
  for (int i = 0; i < players; ++i) {
    for (int e = 0; e < universe_size; ++e) {
      if (rng() & 1) s.sets[i].push_back(s.universe[e]);
    }
  }
}

}  // namespace

Scenario gen_scenario(ScenarioKind kind, int players, int universe_size,
                      const std::string& value_kind, std::uint64_t seed) {
  if (players < 1 || players > 8 || universe_size < 0 ||
      universe_size > 32) {
    throw Error(ErrorKind::kCapacity, "generator size out of range");
  }
  std::mt19937_64 rng(seed);
  Scenario s;
  s.kind = kind;
  s.seed = seed;
  switch (kind) {
    case ScenarioKind::kSetUnion:
      gen_sets(s, rng, players, universe_size);
      break;
    case ScenarioKind::kInterval: {
      const Rational t =
          Rational(static_cast<long long>(draw(rng, 41)) - 20, 4);
      s.target = t;
      for (int i = 0; i < players; ++i) {
        const Rational left(static_cast<long long>(draw(rng, 16)) + 1, 4);
        const Rational right(static_cast<long long>(draw(rng, 16)) + 1, 4);
        s.intervals.push_back({t - left, t + right});
      }
      break;
    }
    case ScenarioKind::kAverage:
      for (int i = 0; i < players; ++i) {
        const long long den = 1ll << draw(rng, 3);
        s.points.push_back(
            Rational(static_cast<long long>(draw(rng, 41)) - 20, den));
      }
      s.p = 2;
      break;
    case ScenarioKind::kGeneral: {
      s.players = players;
      if (value_kind.empty() || value_kind == "coverage") {
        s.coverage = true;
        gen_sets(s, rng, players, universe_size);
      } else if (value_kind == "table") {
        // Totally monotone by construction: V(S) = sum of nonnegative
        // weights over the nonempty subsets of S.
        s.coverage = false;
        const std::uint32_t all = (1u << players) - 1;
        std::vector<Rational> weights(all + 1, Rational(0));
        for (std::uint32_t t = 1; t <= all; ++t) {
          weights[t] = static_cast<long long>(draw(rng, 4));
        }
        s.value_table.assign(all + 1, Rational(0));
        for (std::uint32_t sub = 1; sub <= all; ++sub) {
          for (std::uint32_t t = sub; t != 0; t = (t - 1) & sub) {
            s.value_table[sub] += weights[t];
          }
        }
      } else {
        throw Error(ErrorKind::kConfig,
                    "value kind must be 'coverage' or 'table'");
      }
      break;
    }
  }
  validate_scenario(s);
  return s;
}

}  // namespace iex
