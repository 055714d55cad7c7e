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

// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact (rational or integer); there are no tolerances.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iex/driver.hpp"
#include "iex/scenario.hpp"
#include "iex/verifier.hpp"

using namespace iex;

namespace {

Universe named(int n) {
  Universe u;
  for (int i = 1; i <= n; ++i) u.elements.push_back("e" + std::to_string(i));
  return u;
}

Mask full_mask(int u) { return u == 0 ? 0 : ((Mask{1} << u) - 1); }

Mask rand_mask(std::mt19937_64& rng, int u, bool nonempty) {
  Mask m = rng() & full_mask(u);
  if (nonempty && m == 0 && u > 0) m = Mask{1} << (rng() % u);
  return m;
}

// A random mask over [0, u) with exactly `target` bits set.
Mask rand_mask_of_size(std::mt19937_64& rng, int u, int target) {
  Mask m = rng() & full_mask(u);
  while (set_size(m) > target) m &= m - 1;
  for (int b = 0; b < u && set_size(m) < target; ++b) m |= Mask{1} << b;
  return m;
}

SubgroupValueFn random_monotone_table(std::mt19937_64& rng, int n) {
  // V(S) = sum of nonnegative weights over nonempty subsets of S.
  const std::uint32_t all = (1u << n) - 1;
  std::vector<Rational> w(all + 1, Rational(0));
  for (std::uint32_t t = 1; t <= all; ++t) w[t] = rng() % 4;
  SubgroupValueFn v;
  v.n = n;
  v.table.assign(all + 1, Rational(0));
  for (std::uint32_t s = 1; s <= all; ++s) {
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) v.table[s] += w[t];
  }
  return v;
}

// Independent second enumeration of the rewardable contribution: walks the
// coalitions T with i in T in DESCENDING numeric order of T \ {i}, where
// the production code ascends. Used only to cross-check phi.
Rational phi_alt(const SubgroupValueFn& v, std::uint32_t coalition,
                 int player) {
  const std::uint32_t me = 1u << player;
  const std::uint32_t others = coalition & ~me;
  bool first = true;
  Rational best;
  for (std::uint32_t r = others;; r = (r - 1) & others) {
    const std::uint32_t t = r | me;
    const Rational a = v.value(t) - v.value(me);
    const Rational b = v.value(t) - v.value(t & ~me);
    const Rational cand = std::min(a, b);
    if (first || cand > best) {
      best = cand;
      first = false;
    }
    if (r == 0) break;
  }
  return best;
}

bool require(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

bool require_pass(const PropertyReport& rep, const std::string& what,
                  std::string& detail) {
  if (!rep.pass && detail.empty()) {
    detail = what;
    if (rep.counterexample) detail += "; counterexample: " + *rep.counterexample;
  }
  return rep.pass;
}

bool require_fail(const PropertyReport& rep, const std::string& what,
                  std::string& detail) {
  if ((rep.pass || !rep.counterexample || rep.counterexample->empty()) &&
      detail.empty()) {
    detail = what + " (expected a failure with a counterexample)";
  }
  return !rep.pass && rep.counterexample && !rep.counterexample->empty();
}

// --- criterion 1: two-party equality, exhaustive |U| = 6 --------------------

bool criterion1(std::string& detail) {
  const int u = 6;
  const Mask all = full_mask(u);
  for (Mask x1 = 0; x1 <= all; ++x1) {
    for (Mask x2 = 0; x2 <= all; ++x2) {
      const auto y = two_party(x1, x2);
      const long long want =
          std::min(set_size(x1 & ~x2), set_size(x2 & ~x1));
      if (set_size(y[0] & ~x1) != want || set_size(y[1] & ~x2) != want ||
          (y[0] & x1) != x1 || (y[1] & x2) != x2) {
        std::ostringstream os;
        os << "x1=" << x1 << " x2=" << x2 << " expected v=" << want;
        detail = os.str();
        return false;
      }
    }
  }
  return true;
}

// --- criterion 2: three-party truthfulness, exhaustive |U| <= 5 -------------

bool criterion2(std::string& detail) {
  const SetMechanism mechs[] = {mech_three_party(false),
                                mech_three_party(true)};
  const char* labels[] = {"three-party", "three-party-repaired"};
  for (int u = 0; u <= 5; ++u) {
    const Universe uni = named(u);
    const Mask all = full_mask(u);
    for (Mask x1 = 0; x1 <= all; ++x1) {
      for (Mask x2 = 0; x2 <= all; ++x2) {
        for (Mask x3 = 0; x3 <= all; ++x3) {
          const SetInstance inst{uni, {x1, x2, x3}};
          for (int m = 0; m < 2; ++m) {
            std::ostringstream at;
            at << labels[m] << " |U|=" << u << " x=(" << x1 << "," << x2
               << "," << x3 << ")";
            if (!require_pass(check_truthful_aon(mechs[m], inst),
                              "truthful-aon: " + at.str(), detail) ||
                !require_pass(check_truthful_subsets(mechs[m], inst),
                              "truthful-subsets: " + at.str(), detail)) {
              return false;
            }
          }
          if (u == 0) break;
        }
        if (u == 0) break;
      }
      if (u == 0) break;
    }
  }
  return true;
}

// --- criterion 3: Lemma-2 benefit characterization, 500 seeded --------------

bool criterion3(std::string& detail) {
  std::mt19937_64 rng(0xC3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int u = 4 + static_cast<int>(rng() % 7);  // 4..10
    SetInstance inst{named(u), {}};
    for (int i = 0; i < n; ++i) {
      inst.true_sets.push_back(rand_mask(rng, u, true));
    }
    const StrategyProfile prof = StrategyProfile::truthful(inst);
    const Allocation alloc = multiparty_aon(inst, prof);
    const BenefitVector v = information_benefit(inst, prof, alloc);
    Mask pool = 0;
    for (const Mask x : inst.true_sets) pool |= x;
    std::size_t arg = 0;
    for (std::size_t j = 1; j < v.size(); ++j) {
      if (v[j] > v[arg]) arg = j;
    }
    Rational second(0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != arg && v[j] > second) second = v[j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == arg) continue;
      const Rational cap(set_size(pool & ~inst.true_sets[j]));
      const Rational want = std::min(second, cap);
      if (v[j] != want) {
        std::ostringstream os;
        os << "trial " << trial << " player " << (j + 1)
           << ": v=" << format_rational(v[j])
           << " expected min(V,cap)=" << format_rational(want);
        detail = os.str();
        return false;
      }
    }
    if (!require_pass(check_pareto(inst, prof, alloc),
                      "pareto check on trial " + std::to_string(trial),
                      detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 4: ComputeV vs brute-force stable-V oracle -------------------

bool criterion4(std::string& detail) {
  std::mt19937_64 rng(0xC4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    const int u = 3 + static_cast<int>(rng() % 6);  // 3..8
    std::vector<Mask> reports;
    for (int i = 0; i < n; ++i) reports.push_back(rand_mask(rng, u, false));
    const PropertyReport rep = check_welfare_optimal_v(reports);
    if (!require(!rep.skipped, "oracle unexpectedly skipped", detail) ||
        !require_pass(rep, "seeded trial " + std::to_string(trial), detail)) {
      return false;
    }
  }
  for (int u = 0; u <= 5; ++u) {
    const Mask all = full_mask(u);
    for (Mask x1 = 0; x1 <= all; ++x1) {
      for (Mask x2 = 0; x2 <= all; ++x2) {
        for (Mask x3 = 0; x3 <= all; ++x3) {
          const std::vector<Mask> reports{x1, x2, x3};
          if (compute_v(reports).value != stable_v_oracle(reports)) {
            std::ostringstream os;
            os << "exhaustive |U|=" << u << " x=(" << x1 << "," << x2 << ","
               << x3 << "): closed-form " << compute_v(reports).value
               << " != oracle " << stable_v_oracle(reports);
            detail = os.str();
            return false;
          }
          if (u == 0) break;
        }
        if (u == 0) break;
      }
      if (u == 0) break;
    }
  }
  return true;
}

// --- criterion 5: multiparty AON truthfulness, 500 seeded -------------------

bool criterion5(std::string& detail) {
  std::mt19937_64 rng(0xC5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    const int u = 2 + static_cast<int>(rng() % 7);  // 2..8
    SetInstance inst{named(u), {}};
    for (int i = 0; i < n; ++i) {
      inst.true_sets.push_back(rand_mask(rng, u, true));
    }
    if (!require_pass(check_truthful_aon(mech_multiparty_aon(), inst),
                      "trial " + std::to_string(trial), detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 6: symmetry and strong dominance, 500 seeded -----------------

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(0xC6);
  for (int trial = 0; trial < 500; ++trial) {
    const bool forced = trial < 150;
    const int n = forced ? 3 + static_cast<int>(rng() % 3)
                         : 2 + static_cast<int>(rng() % 4);
    const int u = 4 + static_cast<int>(rng() % 5);  // 4..8
    SetInstance inst{named(u), {}};
    for (int i = 0; i < n; ++i) {
      inst.true_sets.push_back(rand_mask(rng, u, true));
    }
    if (forced) {
      // player 1 contained in player 2, player 3 sized like player 2.
      inst.true_sets[1] |= inst.true_sets[0];
      inst.true_sets[2] =
          rand_mask_of_size(rng, u, set_size(inst.true_sets[1]));
    }
    const std::string at = "trial " + std::to_string(trial);
    if (!require_pass(check_symmetry(mech_multiparty_aon(), inst),
                      "symmetry: " + at, detail) ||
        !require_pass(check_strong_dominance(inst),
                      "strong-dominance: " + at, detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 7: interval mechanism, 300 seeded ----------------------------

bool criterion7(std::string& detail) {
  std::mt19937_64 rng(0xC7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 5;  // 2..6
    const Rational t(static_cast<long long>(rng() % 41) - 20, 4);
    IntervalInstance inst{t, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const Rational left(1 + static_cast<long long>(rng() % 16), 4);
      const Rational right(1 + static_cast<long long>(rng() % 16), 4);
      inst.intervals.push_back({t - left, t + right});
    }
    const auto out = one_dim_search(inst, std::vector<bool>(n, true));
    int improved = 0;
    Rational g(0);
    for (std::size_t i = 0; i < n; ++i) {
      const Interval& y = *out.outputs[i];
      if (!require(y.contains(t) && inst.intervals[i].lo <= y.lo &&
                       y.hi <= inst.intervals[i].hi,
                   "trial " + std::to_string(trial) +
                       ": output escapes the report or drops t",
                   detail)) {
        return false;
      }
      if (out.benefits[i] > 0) {
        if (improved == 0) g = out.benefits[i];
        ++improved;
        if (!require(out.benefits[i] == g,
                     "trial " + std::to_string(trial) +
                         ": unequal positive benefits",
                     detail)) {
          return false;
        }
      }
    }
    if (!require(improved != 1,
                 "trial " + std::to_string(trial) + ": a lone beneficiary",
                 detail)) {
      return false;
    }
    // When the extreme players are unique and distinct, the common gain
    // must equal min(beta_j - beta_k, alpha_j - alpha_k) > 0 exactly.
    std::size_t j = 0, k = 0;
    int jc = 0, kc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (inst.intervals[i].lo > inst.intervals[j].lo) j = i, jc = 1;
      else if (inst.intervals[i].lo == inst.intervals[j].lo) ++jc;
      if (inst.intervals[i].hi < inst.intervals[k].hi) k = i, kc = 1;
      else if (inst.intervals[i].hi == inst.intervals[k].hi) ++kc;
    }
    if (jc == 1 && kc == 1 && j != k) {
      const Rational want =
          std::min(inst.intervals[j].hi - inst.intervals[k].hi,
                   inst.intervals[j].lo - inst.intervals[k].lo);
      if (!require(want > 0 && out.benefits[j] == want &&
                       out.benefits[k] == want,
                   "trial " + std::to_string(trial) +
                       ": gain differs from min(beta_j-beta_k, "
                       "alpha_j-alpha_k)",
                   detail)) {
        return false;
      }
    }
    if (!require_pass(check_truthful_aon(inst),
                      "truthful-aon: trial " + std::to_string(trial),
                      detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 8: average point, worked instance + 500 seeded ---------------

bool criterion8(std::string& detail) {
  PointInstance worked{{Rational(0), Rational(1), Rational(2)}};
  const auto out = average_mechanism(worked, {true, true, true});
  if (!require(out.benefits == BenefitVector{1, 0, 1} &&
                   utility_vector(out.benefits) == UtilityVector{0, -1, 0},
               "worked instance (0,1,2) mismatch", detail)) {
    return false;
  }
  std::mt19937_64 rng(0xC8);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 5;  // 2..6
    PointInstance pts;
    for (std::size_t i = 0; i < n; ++i) {
      const long long den = 1ll << (rng() % 3);
      pts.points.push_back(
          Rational(static_cast<long long>(rng() % 41) - 20, den));
    }
    const std::string at = "trial " + std::to_string(trial);
    if (!require_pass(check_average_delta(pts), "average-delta: " + at,
                      detail) ||
        !require_pass(check_truthful_aon(pts, 2), "truthful-aon: " + at,
                      detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 9: rewardable contribution, dual enumeration + inequality ----

bool criterion9(std::string& detail) {
  std::mt19937_64 rng(0xC9);
  // Dual enumeration on random monotone tables for every n <= 5.
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      const SubgroupValueFn v = random_monotone_table(rng, n);
      const std::uint32_t all = v.all_players();
      for (std::uint32_t s = 1; s <= all; ++s) {
        for (int i = 0; i < n; ++i) {
          if (!(s & (1u << i))) continue;
          if (phi(v, s, i) != phi_alt(v, s, i)) {
            std::ostringstream os;
            os << "phi enumerations disagree: n=" << n << " S=" << s
               << " i=" << (i + 1);
            detail = os.str();
            return false;
          }
        }
      }
    }
  }
  // Inequality + Theorem-9 dominance on 200 monotone and 200 coverage tables.
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    SubgroupValueFn v;
    if (trial < 200) {
      v = random_monotone_table(rng, n);
    } else {
      const int u = 3 + static_cast<int>(rng() % 5);
      SetInstance inst{named(u), {}};
      for (int i = 0; i < n; ++i) {
        inst.true_sets.push_back(rand_mask(rng, u, true));
      }
      v = make_coverage_value(inst);
    }
    const std::string at = "trial " + std::to_string(trial);
    if (!require_pass(check_phi_inequality(v), "phi-inequality: " + at,
                      detail) ||
        !require_pass(check_truthful_aon(v), "truthful-aon: " + at,
                      detail)) {
      return false;
    }
  }
  return true;
}

// --- criterion 10: determinism and parse/emit round trips -------------------

bool criterion10(std::string& detail) {
  const ScenarioKind kinds[] = {ScenarioKind::kSetUnion,
                                ScenarioKind::kInterval,
                                ScenarioKind::kAverage, ScenarioKind::kGeneral};
  for (const ScenarioKind kind : kinds) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int players = 2 + static_cast<int>(seed % 3);
      const int universe = 4 + static_cast<int>(seed % 4);
      const std::string value =
          kind == ScenarioKind::kGeneral
              ? (seed % 2 == 0 ? "coverage" : "table")
              : "";
      const Scenario s = gen_scenario(kind, players, universe, value, seed);
      const std::string at =
          kind_name(kind) + " seed " + std::to_string(seed);
      if (!require(gen_scenario(kind, players, universe, value, seed) == s,
                   "generation not deterministic: " + at, detail) ||
          !require(parse_scenario(emit_scenario(s)) == s,
                   "parse(emit(s)) != s: " + at, detail) ||
          !require(emit_scenario(s) == emit_scenario(s),
                   "emission not byte-stable: " + at, detail) ||
          !require(run_report(s, "", false) == run_report(s, "", false),
                   "run report not byte-identical: " + at, detail)) {
        return false;
      }
      const VerifyResult a = verify_scenario(s, VerifyOptions{});
      const VerifyResult b = verify_scenario(s, VerifyOptions{});
      if (!require(a.report_json == b.report_json,
                   "verify report not byte-identical: " + at, detail)) {
        return false;
      }
    }
  }
  return true;
}

// --- criterion 11: every checker fails its negative control -----------------

bool criterion11(std::string& detail) {
  const SetInstance disjoint{named(3), {0b001, 0b010, 0b100}};
  const SetInstance compute_v_inst{named(6), {0b000001, 0b000110, 0b111000}};
  const StrategyProfile prof = StrategyProfile::truthful(compute_v_inst);
  const IntervalInstance iv{
      Rational(3), {{Rational(0), Rational(4)}, {Rational(2), Rational(6)}}};
  const PointInstance pts{{Rational(0), Rational(1), Rational(2)}};
  SubgroupValueFn bad_table{3, std::vector<Rational>(8, Rational(0))};
  bad_table.table[0b001] = 10;
  bad_table.table[0b111] = 8;

  return require_fail(check_truthful_aon(broken_set_favor_first(), disjoint),
                      "truthful-aon vs favor-first", detail) &&
         require_fail(
             check_truthful_subsets(broken_set_favor_first(),
                                    SetInstance{named(2), {0b01, 0b10}}),
             "truthful-subsets vs favor-first", detail) &&
         require_fail(check_pareto(compute_v_inst, prof,
                                   broken_set_stingy()(compute_v_inst, prof)),
                      "pareto vs stingy", detail) &&
         require_fail(check_welfare_optimal_v(compute_v_inst.true_sets,
                                              broken_compute_v()),
                      "welfare-v vs max-only ComputeV", detail) &&
         require_fail(check_symmetry(broken_set_favor_first(), disjoint),
                      "symmetry vs favor-first", detail) &&
         require_fail(
             check_strong_dominance(
                 SetInstance{named(6), {0b000001, 0b000011, 0b111100}},
                 broken_set_reverse_pi()),
             "strong-dominance vs reverse-order award", detail) &&
         require_fail(check_truthful_aon(iv, broken_interval_one_sided()),
                      "truthful-aon vs one-sided interval", detail) &&
         require_fail(check_average_delta(pts, broken_average_skewed()),
                      "average-delta vs skewed average", detail) &&
         require_fail(check_truthful_aon(pts, 2, broken_average_skewed()),
                      "truthful-aon vs skewed average", detail) &&
         require_fail(check_phi_inequality(bad_table),
                      "phi-inequality vs non-monotone table", detail);
}

struct Criterion {
  int id;
  const char* what;
  double budget_seconds;  // 0 = no stated bound
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-party equal benefits, exhaustive |U|=6", 5, criterion1},
      {2, "three-party truthfulness (plain and repaired), exhaustive |U|<=5",
       600, criterion2},
      {3, "benefit characterization v_j = min(V, cap_j), 500 seeded", 0,
       criterion3},
      {4, "ComputeV equals the stable-V oracle, seeded + exhaustive n=3", 300,
       criterion4},
      {5, "multiparty AON truthfulness, 500 seeded", 0, criterion5},
      {6, "symmetry and strong dominance, 500 seeded (150 forced)", 0,
       criterion6},
      {7, "interval search: equal gains, containment, truthfulness", 0,
       criterion7},
      {8, "average point: worked instance, delta inequality, dominance", 0,
       criterion8},
      {9, "rewardable contribution: dual enumeration and inequality", 600,
       criterion9},
      {10, "determinism and parse/emit round trips, 100 per kind", 0,
       criterion10},
      {11, "negative controls: every checker fails its broken mechanism", 0,
       criterion11},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      detail = "exceeded the runtime budget";
    }
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL")
              << " — " << c.what << " (" << secs << "s)";
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}
