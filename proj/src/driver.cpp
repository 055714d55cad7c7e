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

#include "iex/driver.hpp"

#include <algorithm>

#include <json.hpp>

namespace iex {

using nlohmann::json;

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> props = {
      "truthful-aon",   "truthful-subsets", "pareto",
      "welfare-v",      "symmetry",         "strong-dominance",
      "phi-inequality", "average-delta"};
  return props;
}

namespace {

std::vector<std::string> applicable_properties(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSetUnion:
      return {"truthful-aon", "truthful-subsets", "pareto",
              "welfare-v",    "symmetry",         "strong-dominance"};
    case ScenarioKind::kInterval:
      return {"truthful-aon", "symmetry"};
    case ScenarioKind::kAverage:
      return {"truthful-aon", "average-delta"};
    case ScenarioKind::kGeneral:
      return {"truthful-aon", "phi-inequality"};
  }
  return {};
}

// The natural mechanism: the all-or-nothing one whenever the profile is
// in its domain, otherwise the subset-capable two/three-party exchange.
std::string default_set_mechanism(const Scenario& s) {
  const SetInstance inst = to_set_instance(s);
  if (to_strategy_profile(s, inst).all_or_nothing(inst)) {
    return "multiparty-aon";
  }
  if (inst.players() == 2) return "two-party";
  if (inst.players() == 3) return "three-party";
  throw Error(ErrorKind::kConfig,
              "no subset-report mechanism for more than 3 players");
}

// Resolves a mechanism name for a scenario kind. Broken variants exist
// so the verifier's checkers can be shown to catch real violations.
struct Resolved {
  std::string name;
  SetMechanism set;
  IntervalMechanism interval;
  AverageMechanism average;
  std::function<long long(const std::vector<Mask>&)> compute = nullptr;
};

Resolved resolve_mechanism(const Scenario& s, const std::string& requested) {
  Resolved r;
  switch (s.kind) {
    case ScenarioKind::kSetUnion: {
      r.name = requested.empty() ? default_set_mechanism(s) : requested;
      if (r.name == "two-party") {
        r.set = mech_two_party();
      } else if (r.name == "three-party") {
        r.set = mech_three_party(false);
      } else if (r.name == "three-party-repaired") {
        r.set = mech_three_party(true);
      } else if (r.name == "multiparty-aon") {
        r.set = mech_multiparty_aon(false);
      } else if (r.name == "multiparty-aon-repaired") {
        r.set = mech_multiparty_aon(true);
      } else if (r.name == "broken-favor-first") {
        r.set = broken_set_favor_first();
      } else if (r.name == "broken-reverse-pi") {
        r.set = broken_set_reverse_pi();
      } else if (r.name == "broken-stingy") {
        r.set = broken_set_stingy();
      } else if (r.name == "broken-compute-v") {
        // Only perturbs the welfare-v check; runs use the default.
        r.set = resolve_mechanism(s, "").set;
        r.compute = broken_compute_v();
      } else {
        throw Error(ErrorKind::kConfig,
                    "unknown set-union mechanism '" + r.name + "'");
      }
      break;
    }
    case ScenarioKind::kInterval:
      r.name = requested.empty() ? "interval" : requested;
      if (r.name == "interval") {
        r.interval = [](const IntervalInstance& inst,
                        const std::vector<bool>& part) {
          return one_dim_search(inst, part);
        };
      } else if (r.name == "broken-interval") {
        r.interval = broken_interval_one_sided();
      } else {
        throw Error(ErrorKind::kConfig,
                    "unknown interval mechanism '" + r.name + "'");
      }
      break;
    case ScenarioKind::kAverage:
      r.name = requested.empty() ? "average" : requested;
      if (r.name == "average") {
        r.average = [](const PointInstance& inst,
                       const std::vector<bool>& part, int p) {
          return average_mechanism(inst, part, p);
        };
      } else if (r.name == "broken-average") {
        r.average = broken_average_skewed();
      } else {
        throw Error(ErrorKind::kConfig,
                    "unknown average mechanism '" + r.name + "'");
      }
      break;
    case ScenarioKind::kGeneral:
      r.name = requested.empty() ? "general" : requested;
      if (r.name != "general") {
        throw Error(ErrorKind::kConfig,
                    "unknown general mechanism '" + r.name + "'");
      }
      break;
  }
  return r;
}

json rationals_json(const BenefitVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(format_rational(x));
  return arr;
}

void attach_payoffs(json& doc, const BenefitVector& benefits) {
  doc["benefits"] = rationals_json(benefits);
  doc["utilities"] = rationals_json(utility_vector(benefits));
  doc["welfare"] = format_rational(social_welfare(benefits));
}

json property_json(const PropertyReport& rep) {
  json doc;
  doc["property"] = rep.property;
  doc["pass"] = rep.pass;
  doc["skipped"] = rep.skipped;
  doc["instances_checked"] = rep.instances_checked;
  if (rep.counterexample) doc["counterexample"] = *rep.counterexample;
  if (!rep.note.empty()) doc["note"] = rep.note;
  return doc;
}

std::vector<Mask> nonempty_reports(const StrategyProfile& prof) {
  std::vector<Mask> out;
  for (Mask m : prof.reports) {
    if (m != 0) out.push_back(m);
  }
  return out;
}

// One property on one scenario. Unknown names were rejected upstream;
// a property that does not apply to this scenario kind is reported as
// skipped rather than silently dropped.
PropertyReport check_property(const Scenario& s, const std::string& prop,
                              const Resolved& mech) {
  const auto applicable = applicable_properties(s.kind);
  if (std::find(applicable.begin(), applicable.end(), prop) ==
      applicable.end()) {
    PropertyReport rep{prop};
    rep.skipped = true;
    rep.note = "not applicable to kind '" + kind_name(s.kind) + "'";
    return rep;
  }

  switch (s.kind) {
    case ScenarioKind::kSetUnion: {
      const SetInstance inst = to_set_instance(s);
      if (prop == "truthful-aon") return check_truthful_aon(mech.set, inst);
      if (prop == "truthful-subsets") {
        const bool subset_capable =
            mech.name == "two-party" || mech.name == "three-party" ||
            mech.name == "three-party-repaired" ||
            mech.name == "broken-favor-first";
        if (!subset_capable) {
          PropertyReport rep{prop};
          rep.skipped = true;
          rep.note = "subset strategies are outside the all-or-nothing "
                     "mechanism's domain";
          return rep;
        }
        return check_truthful_subsets(mech.set, inst);
      }
      if (prop == "pareto") {
        const StrategyProfile prof = to_strategy_profile(s, inst);
        return check_pareto(inst, prof, mech.set(inst, prof));
      }
      if (prop == "welfare-v") {
        const StrategyProfile prof = to_strategy_profile(s, inst);
        return check_welfare_optimal_v(nonempty_reports(prof), mech.compute);
      }
      if (prop == "symmetry") return check_symmetry(mech.set, inst);
      return check_strong_dominance(inst, mech.set);
    }
    case ScenarioKind::kInterval: {
      const IntervalInstance inst = to_interval_instance(s);
      if (prop == "truthful-aon") return check_truthful_aon(inst, mech.interval);
      return check_symmetry(inst, mech.interval);
    }
    case ScenarioKind::kAverage: {
      const PointInstance inst = to_point_instance(s);
      if (prop == "truthful-aon") {
        return check_truthful_aon(inst, s.p, mech.average);
      }
      return check_average_delta(inst, mech.average);
    }
    case ScenarioKind::kGeneral: {
      const SubgroupValueFn v = to_value_fn(s);
      if (prop == "truthful-aon") return check_truthful_aon(v);
      return check_phi_inequality(v);
    }
  }
  throw Error(ErrorKind::kConfig, "unreachable property dispatch");
}

std::vector<std::string> select_properties(const Scenario& s,
                                           const VerifyOptions& opts) {
  if (opts.properties.empty()) return applicable_properties(s.kind);
  const auto& known = known_properties();
  for (const auto& p : opts.properties) {
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      throw Error(ErrorKind::kConfig, "unknown property '" + p + "'");
    }
  }
  return opts.properties;
}

}  // namespace

std::string run_report(const Scenario& s, const std::string& mechanism,
                       bool with_pareto_repair) {
  Resolved mech = resolve_mechanism(s, mechanism);
  json doc;
  doc["kind"] = kind_name(s.kind);
  doc["mechanism"] = mech.name;

  switch (s.kind) {
    case ScenarioKind::kSetUnion: {
      const SetInstance inst = to_set_instance(s);
      const StrategyProfile prof = to_strategy_profile(s, inst);
      Allocation alloc;
      if (mech.name == "multiparty-aon" ||
          mech.name == "multiparty-aon-repaired") {
        ComputeVTrace trace;
        alloc = multiparty_aon(inst, prof, &trace);
        if (mech.name == "multiparty-aon-repaired") {
          alloc = pareto_repair(inst, prof, alloc);
        }
        doc["compute_v"] = {{"value", trace.value},
                            {"deficits", trace.deficits}};
      } else {
        alloc = mech.set(inst, prof);
      }
      if (with_pareto_repair) alloc = pareto_repair(inst, prof, alloc);
      doc["pareto_repair"] = with_pareto_repair ||
                             mech.name == "three-party-repaired" ||
                             mech.name == "multiparty-aon-repaired";
      json outputs = json::array();
      for (Mask y : alloc.outputs) {
        outputs.push_back(inst.universe.names_of(y));
      }
      doc["outputs"] = outputs;
      attach_payoffs(doc, information_benefit(inst, prof, alloc));
      break;
    }
    case ScenarioKind::kInterval: {
      const IntervalInstance inst = to_interval_instance(s);
      const auto part = participation_flags(s, inst.players());
      const IntervalOutcome out = mech.interval(inst, part);
      json outputs = json::array();
      for (const auto& iv : out.outputs) {
        if (iv) {
          outputs.push_back(
              {format_rational(iv->lo), format_rational(iv->hi)});
        } else {
          outputs.push_back(nullptr);
        }
      }
      doc["outputs"] = outputs;
      attach_payoffs(doc, out.benefits);
      break;
    }
    case ScenarioKind::kAverage: {
      const PointInstance inst = to_point_instance(s);
      const auto part = participation_flags(s, inst.players());
      const AverageOutcome out = mech.average(inst, part, s.p);
      json outputs = json::array();
      for (const auto& y : out.outputs) {
        if (y) {
          outputs.push_back(format_rational(*y));
        } else {
          outputs.push_back(nullptr);
        }
      }
      doc["outputs"] = outputs;
      attach_payoffs(doc, out.benefits);
      break;
    }
    case ScenarioKind::kGeneral: {
      const SubgroupValueFn v = to_value_fn(s);
      const auto cooperate = participation_flags(s, s.players);
      const BenefitVector benefits = general_mechanism(v, cooperate);
      if (s.coverage) {
        Scenario set_view = s;
        set_view.kind = ScenarioKind::kSetUnion;
        const SetInstance inst = to_set_instance(set_view);
        std::uint32_t coalition = 0;
        for (int i = 0; i < s.players; ++i) {
          if (cooperate[i]) coalition |= 1u << i;
        }
        const Allocation alloc =
            coverage_allocate(inst, benefits, coalition);
        json outputs = json::array();
        for (Mask y : alloc.outputs) {
          outputs.push_back(inst.universe.names_of(y));
        }
        doc["outputs"] = outputs;
      }
      attach_payoffs(doc, benefits);
      break;
    }
  }
  return doc.dump(2) + "\n";
}

VerifyResult verify_scenario(const Scenario& s, const VerifyOptions& opts) {
  const Resolved mech = resolve_mechanism(s, opts.mechanism);
  const auto props = select_properties(s, opts);

  VerifyResult result;
  json doc;
  doc["kind"] = kind_name(s.kind);
  doc["mechanism"] = mech.name;
  doc["strict"] = opts.strict;
  json reports = json::array();
  for (const auto& prop : props) {
    const PropertyReport rep = check_property(s, prop, mech);
    if (!rep.pass) result.all_pass = false;
    if (rep.skipped) result.any_skipped = true;
    reports.push_back(property_json(rep));
  }
  if (opts.strict && result.any_skipped) result.all_pass = false;
  doc["properties"] = reports;
  doc["all_pass"] = result.all_pass;
  result.report_json = doc.dump(2) + "\n";
  return result;
}

VerifyResult verify_sweep(ScenarioKind kind, const VerifyOptions& opts) {
  if (opts.count <= 0) {
    throw Error(ErrorKind::kConfig, "sweep count must be positive");
  }

  VerifyResult result;
  json doc;
  doc["kind"] = kind_name(kind);
  doc["count"] = opts.count;
  doc["seed"] = opts.seed;
  doc["players"] = opts.players;
  doc["universe"] = opts.universe_size;
  doc["strict"] = opts.strict;

  json totals = json::object();
  json failures = json::array();
  std::string props_resolved_mech;
  for (int c = 0; c < opts.count; ++c) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(c);
    const Scenario s =
        gen_scenario(kind, opts.players, opts.universe_size, "", seed);
    const Resolved mech = resolve_mechanism(s, opts.mechanism);
    props_resolved_mech = mech.name;
    for (const auto& prop : select_properties(s, opts)) {
      const PropertyReport rep = check_property(s, prop, mech);
      json& t = totals[prop];
      if (t.is_null()) t = json::object();
      t["instances_checked"] =
          t.value("instances_checked", 0ll) + rep.instances_checked;
      t["scenarios_skipped"] =
          t.value("scenarios_skipped", 0ll) + (rep.skipped ? 1 : 0);
      t["pass"] = t.value("pass", true) && rep.pass;
      if (!rep.pass) {
        result.all_pass = false;
        if (failures.size() < 10) {
          json f;
          f["seed"] = seed;
          f["property"] = prop;
          if (rep.counterexample) f["counterexample"] = *rep.counterexample;
          failures.push_back(f);
        }
      }
      if (rep.skipped) result.any_skipped = true;
    }
  }
  if (opts.strict && result.any_skipped) result.all_pass = false;
  doc["mechanism"] = props_resolved_mech;
  doc["properties"] = totals;
  doc["failures"] = failures;
  doc["all_pass"] = result.all_pass;
  result.report_json = doc.dump(2) + "\n";
  return result;
}

}  // namespace iex
