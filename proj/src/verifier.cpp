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

#include "iex/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace iex {

namespace {

std::string mask_str(const SetInstance& inst, Mask m) {
  std::string s = "{";
  bool first = true;
  for (const auto& name : inst.universe.names_of(m)) {
    if (!first) s += ",";
    s += name;
    first = false;
  }
  return s + "}";
}

std::string sets_str(const SetInstance& inst, const std::vector<Mask>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += mask_str(inst, xs[i]);
  }
  return s + ")";
}

std::string rat_vec_str(const BenefitVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(v[i]);
  }
  return s + ")";
}

// Utility of one player given a benefit vector.
Rational utility_of(const BenefitVector& v, std::size_t i) {
  return utility_vector(v)[i];
}

}  // namespace

BenefitVector true_benefits(const SetInstance& inst, const Allocation& alloc) {
  BenefitVector v(inst.players());
  for (std::size_t i = 0; i < inst.players(); ++i) {
    v[i] = set_size(alloc.outputs[i] & ~inst.true_sets[i]);
  }
  return v;
}

SetMechanism mech_two_party() {
  return [](const SetInstance& inst, const StrategyProfile& p) {
    if (inst.players() != 2) {
      throw_structural("two-party mechanism needs exactly 2 players");
    }
    const auto y = two_party(p.reports[0], p.reports[1]);
    return Allocation{{y[0], y[1]}};
  };
}

SetMechanism mech_three_party(bool with_repair) {
  return [with_repair](const SetInstance& inst, const StrategyProfile& p) {
    if (inst.players() != 3) {
      throw_structural("three-party mechanism needs exactly 3 players");
    }
    const auto y = three_party(p.reports[0], p.reports[1], p.reports[2]);
    Allocation alloc{{y[0], y[1], y[2]}};
    return with_repair ? pareto_repair(inst, p, alloc) : alloc;
  };
}

SetMechanism mech_multiparty_aon(bool with_repair) {
  return [with_repair](const SetInstance& inst, const StrategyProfile& p) {
    Allocation alloc = multiparty_aon(inst, p);
    return with_repair ? pareto_repair(inst, p, alloc) : alloc;
  };
}

SetMechanism broken_set_favor_first() {
  return [](const SetInstance&, const StrategyProfile& p) {
    Mask pool = 0;
    for (const Mask x : p.reports) pool |= x;
    Allocation alloc{p.reports};
    if (!alloc.outputs.empty()) alloc.outputs[0] = pool;
    return alloc;
  };
}

SetMechanism broken_set_reverse_pi() {
  return [](const SetInstance& inst, const StrategyProfile& p) {
    Allocation alloc = multiparty_aon(inst, p);
    // Re-award player 1 from the top of the order instead of the bottom.
    if (!p.reports.empty() && p.reports[0] != 0) {
      Mask pool = 0;
      for (const Mask x : p.reports) pool |= x;
      long long v0 = set_size(alloc.outputs[0] & ~p.reports[0]);
      Mask fresh = pool & ~p.reports[0];
      Mask award = 0;
      while (v0-- > 0) {
        const int top = 63 - std::countl_zero(fresh);
        const Mask bit = Mask{1} << top;
        award |= bit;
        fresh ^= bit;
      }
      alloc.outputs[0] = p.reports[0] | award;
    }
    return alloc;
  };
}

SetMechanism broken_set_stingy() {
  return [](const SetInstance& inst, const StrategyProfile& p) {
    Allocation alloc = multiparty_aon(inst, p);
    // Withhold half of player 1's award (the pi-last elements of it),
    // leaving it strictly below min(second-max benefit, pool cap).
    if (!p.reports.empty()) {
      Mask award = alloc.outputs[0] & ~p.reports[0];
      const long long keep = set_size(award) / 2;
      alloc.outputs[0] = p.reports[0] | pi_prefix(award, keep);
    }
    return alloc;
  };
}

IntervalMechanism broken_interval_one_sided() {
  return [](const IntervalInstance& inst, const std::vector<bool>& flags) {
    IntervalOutcome out = one_dim_search(inst, flags);
    // Undo k's improvement: whoever got their left endpoint raised keeps
    // the original report.
    for (std::size_t i = 0; i < inst.players(); ++i) {
      if (!flags[i] || !out.outputs[i]) continue;
      if (out.outputs[i]->lo != inst.intervals[i].lo) {
        out.outputs[i] = inst.intervals[i];
        out.benefits[i] = 0;
      }
    }
    return out;
  };
}

AverageMechanism broken_average_skewed() {
  return [](const PointInstance& inst, const std::vector<bool>& flags,
            int p) {
    const Rational a_bar = inst.true_average();
    Rational sum = 0;
    long long count = 0;
    bool first_seen = false;
    for (std::size_t i = 0; i < inst.players(); ++i) {
      if (!flags[i]) continue;
      sum += inst.points[i];
      ++count;
      if (!first_seen) {  // first participant weighted twice
        sum += inst.points[i];
        ++count;
        first_seen = true;
      }
    }
    AverageOutcome out;
    out.outputs.assign(inst.players(), std::nullopt);
    out.benefits.assign(inst.players(), Rational(0));
    if (count == 0) return out;
    const ExtValue avg = ExtValue(sum / Rational(count));
    for (std::size_t i = 0; i < inst.players(); ++i) {
      if (!flags[i]) continue;
      out.outputs[i] = avg;
      out.benefits[i] = *point_value(avg, a_bar, p) -
                        *point_value(inst.points[i], a_bar, p);
    }
    return out;
  };
}

std::function<long long(const std::vector<Mask>&)> broken_compute_v() {
  return [](const std::vector<Mask>& reports) -> long long {
    long long max_d = 0;
    for (std::size_t k = 0; k < reports.size(); ++k) {
      Mask z = 0;
      for (std::size_t j = 0; j < reports.size(); ++j) {
        if (j != k) z |= reports[j];
      }
      max_d = std::max<long long>(max_d, set_size(z & ~reports[k]));
    }
    return max_d;
  };
}

// ---------------------------------------------------------------------------
// Truthfulness checkers

PropertyReport check_truthful_aon(const SetMechanism& mech,
                                  const SetInstance& inst) {
  PropertyReport rep{"truthful-aon"};
  const std::size_t n = inst.players();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t combos = std::uint64_t{1} << (n - 1);
    for (std::uint64_t c = 0; c < combos; ++c) {
      StrategyProfile prof{std::vector<Mask>(n, 0)};
      std::uint64_t bits = c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (bits & 1) prof.reports[j] = inst.true_sets[j];
        bits >>= 1;
      }
      prof.reports[i] = inst.true_sets[i];
      const Rational u_in =
          utility_of(true_benefits(inst, mech(inst, prof)), i);
      prof.reports[i] = 0;
      const Rational u_out =
          utility_of(true_benefits(inst, mech(inst, prof)), i);
      ++rep.instances_checked;
      if (u_in < u_out) {
        rep.pass = false;
        std::ostringstream os;
        os << "sets=" << sets_str(inst, inst.true_sets) << " player="
           << i + 1 << " others-profile=" << c
           << " u(participate)=" << format_rational(u_in)
           << " u(drop)=" << format_rational(u_out);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_truthful_aon(const IntervalInstance& inst,
                                  const IntervalMechanism& mech_in) {
  PropertyReport rep{"truthful-aon"};
  const IntervalMechanism mech =
      mech_in ? mech_in
              : [](const IntervalInstance& in, const std::vector<bool>& f) {
                  return one_dim_search(in, f);
                };
  const std::size_t n = inst.players();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t combos = std::uint64_t{1} << (n - 1);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::vector<bool> flags(n, false);
      std::uint64_t bits = c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (bits & 1) flags[j] = true;
        bits >>= 1;
      }
      flags[i] = true;
      const Rational u_in = utility_of(mech(inst, flags).benefits, i);
      flags[i] = false;
      const Rational u_out = utility_of(mech(inst, flags).benefits, i);
      ++rep.instances_checked;
      if (u_in < u_out) {
        rep.pass = false;
        std::ostringstream os;
        os << "interval instance, player=" << i + 1 << " others-profile="
           << c << " u(participate)=" << format_rational(u_in)
           << " u(drop)=" << format_rational(u_out);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_truthful_aon(const PointInstance& inst, int p,
                                  const AverageMechanism& mech_in) {
  PropertyReport rep{"truthful-aon"};
  const AverageMechanism mech =
      mech_in ? mech_in
              : [](const PointInstance& in, const std::vector<bool>& f,
                   int pp) { return average_mechanism(in, f, pp); };
  const std::size_t n = inst.players();
  // The average mechanism guarantees that full participation is an
  // equilibrium: no player gains by dropping out when everyone else is
  // in. Dominance over arbitrary rival profiles does NOT hold for this
  // mechanism (a lone rival far from the true average can make joining
  // costly), so only single deviations from full participation are
  // checked here.
  rep.note = "single deviations from full participation";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> flags(n, true);
    const Rational u_in = utility_of(mech(inst, flags, p).benefits, i);
    flags[i] = false;
    const Rational u_out = utility_of(mech(inst, flags, p).benefits, i);
    ++rep.instances_checked;
    if (u_in < u_out) {
      rep.pass = false;
      std::ostringstream os;
      os << "points=" << rat_vec_str(inst.points) << " player=" << i + 1
         << " u(participate)=" << format_rational(u_in)
         << " u(drop)=" << format_rational(u_out);
      rep.counterexample = os.str();
      return rep;
    }
  }
  return rep;
}

PropertyReport check_truthful_aon(const SubgroupValueFn& v) {
  PropertyReport rep{"truthful-aon"};
  const int n = v.n;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t combos = 1u << (n - 1);
    for (std::uint32_t c = 0; c < combos; ++c) {
      std::vector<bool> flags(n, false);
      std::uint32_t bits = c;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (bits & 1) flags[j] = true;
        bits >>= 1;
      }
      flags[i] = true;
      const Rational u_in = utility_of(general_mechanism(v, flags), i);
      flags[i] = false;
      const Rational u_out = utility_of(general_mechanism(v, flags), i);
      ++rep.instances_checked;
      if (u_in < u_out) {
        rep.pass = false;
        std::ostringstream os;
        os << "value table, player=" << i + 1 << " others-profile=" << c
           << " u(cooperate)=" << format_rational(u_in)
           << " u(defect)=" << format_rational(u_out);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_truthful_subsets(const SetMechanism& mech,
                                      const SetInstance& inst,
                                      int max_universe) {
  PropertyReport rep{"truthful-subsets"};
  if (inst.universe.size() > static_cast<std::size_t>(max_universe)) {
    rep.skipped = true;
    rep.note = "universe exceeds the exhaustive-enumeration cap";
    return rep;
  }
  const std::size_t n = inst.players();
  for (std::size_t i = 0; i < n; ++i) {
    StrategyProfile prof = StrategyProfile::truthful(inst);
    const Rational u_truthful =
        utility_of(true_benefits(inst, mech(inst, prof)), i);
    const Mask full = inst.true_sets[i];
    // All proper subsets of the true set.
    for (Mask sub = (full - 1) & full;; sub = (sub - 1) & full) {
      prof.reports[i] = sub;
      const Rational u_dev =
          utility_of(true_benefits(inst, mech(inst, prof)), i);
      ++rep.instances_checked;
      if (u_dev > u_truthful) {
        rep.pass = false;
        std::ostringstream os;
        os << "sets=" << sets_str(inst, inst.true_sets) << " player="
           << i + 1 << " hides-to=" << mask_str(inst, sub)
           << " u(truthful)=" << format_rational(u_truthful)
           << " u(hide)=" << format_rational(u_dev);
        rep.counterexample = os.str();
        return rep;
      }
      if (sub == 0) break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pareto efficiency

PropertyReport check_pareto(const SetInstance& inst,
                            const StrategyProfile& profile,
                            const Allocation& alloc) {
  PropertyReport rep{"pareto"};
  const std::size_t n = inst.players();
  const BenefitVector v = information_benefit(inst, profile, alloc);

  // Only reporting players take part in the exchange; Lemma-2 style
  // characterization applies to them.
  std::vector<std::size_t> part;
  Mask pool = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (profile.reports[i] != 0) {
      part.push_back(i);
      pool |= profile.reports[i];
    }
  }
  if (part.empty()) {
    rep.instances_checked = 1;
    return rep;
  }

  // (a) structural: every non-argmax participant is topped up to
  // min(second-max, pool cap).
  std::size_t argmax = part[0];
  for (const std::size_t i : part) {
    if (v[i] > v[argmax]) argmax = i;
  }
  Rational second(0);
  for (const std::size_t j : part) {
    if (j != argmax && v[j] > second) second = v[j];
  }
  for (const std::size_t j : part) {
    if (j == argmax) continue;
    const Rational cap = set_size(pool & ~profile.reports[j]);
    const Rational want = second < cap ? second : cap;
    ++rep.instances_checked;
    if (v[j] != want) {
      rep.pass = false;
      std::ostringstream os;
      os << "reports=" << sets_str(inst, profile.reports) << " benefits="
         << rat_vec_str(v) << " player=" << j + 1 << " expected v="
         << format_rational(want);
      rep.counterexample = os.str();
      return rep;
    }
  }

  // (b) brute-force oracle over feasible benefit vectors, when small.
  std::vector<long long> caps(part.size());
  bool oracle_ok = part.size() <= 3;
  for (std::size_t idx = 0; idx < part.size(); ++idx) {
    caps[idx] = set_size(pool & ~profile.reports[part[idx]]);
    if (caps[idx] > 6) oracle_ok = false;
  }
  if (!oracle_ok) {
    rep.note = "pareto oracle skipped (capacity); structural check only";
    return rep;
  }

  const UtilityVector u = utility_vector(v);
  // An alternative outcome can only extend what players already received
  // (the mediator adds elements, it cannot take delivered ones back), so
  // candidate benefits range over [v_i, cap_i] per participant. Without
  // that floor the no-trade outcome would vacuously "dominate" any
  // allocation with a negative envy utility.
  std::vector<long long> floors(part.size());
  for (std::size_t idx = 0; idx < part.size(); ++idx) {
    floors[idx] = numerator(v[part[idx]]).convert_to<long long>();
  }
  std::vector<long long> trial = floors;
  while (true) {
    BenefitVector cand(n, Rational(0));
    for (std::size_t idx = 0; idx < part.size(); ++idx) {
      cand[part[idx]] = trial[idx];
    }
    const UtilityVector cu = utility_vector(cand);
    bool weakly_better = true, strictly = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (cu[i] < u[i]) {
        weakly_better = false;
        break;
      }
      if (cu[i] > u[i]) strictly = true;
    }
    ++rep.instances_checked;
    if (weakly_better && strictly) {
      rep.pass = false;
      std::ostringstream os;
      os << "reports=" << sets_str(inst, profile.reports) << " benefits="
         << rat_vec_str(v) << " dominated by " << rat_vec_str(cand);
      rep.counterexample = os.str();
      return rep;
    }
    // next vector
    std::size_t idx = 0;
    while (idx < trial.size() && trial[idx] == caps[idx]) {
      trial[idx] = floors[idx];
      ++idx;
    }
    if (idx == trial.size()) break;
    ++trial[idx];
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Welfare-optimal V oracle

namespace {

long long stable_v_rec(const std::vector<Mask>& x, std::uint32_t members,
                       std::map<std::uint32_t, long long>& memo) {
  if (const auto it = memo.find(members); it != memo.end()) return it->second;
  long long result = 0;
  if (std::popcount(members) > 1) {
    std::vector<long long> d, sub;
    long long max_d = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::uint32_t bit = 1u << k;
      if (!(members & bit)) continue;
      Mask z = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != k && (members & (1u << j))) z |= x[j];
      }
      d.push_back(set_size(z & ~x[k]));
      sub.push_back(stable_v_rec(x, members & ~bit, memo));
      max_d = std::max(max_d, d.back());
    }
    // Largest uniform level no player would rather walk away from.
    for (long long cand = max_d; cand >= 0; --cand) {
      bool stable = true;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (std::min(cand, d[k]) < cand - sub[k]) {
          stable = false;
          break;
        }
      }
      if (stable) {
        result = cand;
        break;
      }
    }
  }
  memo.emplace(members, result);
  return result;
}

}  // namespace

long long stable_v_oracle(const std::vector<Mask>& reports) {
  std::map<std::uint32_t, long long> memo;
  const std::uint32_t all =
      reports.empty() ? 0u : ((1u << reports.size()) - 1);
  return stable_v_rec(reports, all, memo);
}

PropertyReport check_welfare_optimal_v(
    const std::vector<Mask>& reports,
    const std::function<long long(const std::vector<Mask>&)>& compute) {
  PropertyReport rep{"welfare-v"};
  Mask pool = 0;
  for (const Mask x : reports) pool |= x;
  if (reports.size() > 4 || set_size(pool) > 8) {
    rep.skipped = true;
    rep.note = "instance exceeds the oracle capacity (n<=4, |U|<=8)";
    return rep;
  }
  const long long closed =
      compute ? compute(reports) : compute_v(reports).value;
  const long long oracle = stable_v_oracle(reports);
  rep.instances_checked = 1;
  if (closed != oracle) {
    rep.pass = false;
    std::ostringstream os;
    os << "computed V=" << closed << " oracle V=" << oracle;
    rep.counterexample = os.str();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fairness

PropertyReport check_symmetry(const SetMechanism& mech,
                              const SetInstance& inst) {
  PropertyReport rep{"symmetry"};
  const StrategyProfile prof = StrategyProfile::truthful(inst);
  const BenefitVector v =
      information_benefit(inst, prof, mech(inst, prof));
  for (std::size_t i = 0; i < inst.players(); ++i) {
    for (std::size_t j = i + 1; j < inst.players(); ++j) {
      if (set_size(inst.true_sets[i]) != set_size(inst.true_sets[j])) {
        continue;
      }
      ++rep.instances_checked;
      if (v[i] != v[j]) {
        rep.pass = false;
        std::ostringstream os;
        os << "sets=" << sets_str(inst, inst.true_sets) << " |x_" << i + 1
           << "|=|x_" << j + 1 << "| but benefits " << format_rational(v[i])
           << " != " << format_rational(v[j]);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_symmetry(const IntervalInstance& inst,
                              const IntervalMechanism& mech_in) {
  PropertyReport rep{"symmetry"};
  const IntervalMechanism mech =
      mech_in ? mech_in
              : [](const IntervalInstance& in, const std::vector<bool>& f) {
                  return one_dim_search(in, f);
                };
  const auto out = mech(inst, std::vector<bool>(inst.players(), true));
  for (std::size_t i = 0; i < inst.players(); ++i) {
    for (std::size_t j = i + 1; j < inst.players(); ++j) {
      if (!(inst.intervals[i] == inst.intervals[j])) continue;
      ++rep.instances_checked;
      const bool same = out.outputs[i].has_value() ==
                            out.outputs[j].has_value() &&
                        (!out.outputs[i] || *out.outputs[i] == *out.outputs[j]);
      if (!same || out.benefits[i] != out.benefits[j]) {
        rep.pass = false;
        std::ostringstream os;
        os << "players " << i + 1 << " and " << j + 1
           << " report identical intervals but receive different outputs";
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_strong_dominance(const SetInstance& inst,
                                      const SetMechanism& mech_in) {
  PropertyReport rep{"strong-dominance"};
  const SetMechanism mech = mech_in ? mech_in : mech_multiparty_aon();
  const StrategyProfile prof = StrategyProfile::truthful(inst);
  const Allocation alloc = mech(inst, prof);
  for (std::size_t k = 0; k < inst.players(); ++k) {
    for (std::size_t i = 0; i < inst.players(); ++i) {
      if (i == k) continue;
      if (prof.reports[k] & ~prof.reports[i]) continue;  // not a subset
      ++rep.instances_checked;
      if (alloc.outputs[k] & ~alloc.outputs[i]) {
        rep.pass = false;
        std::ostringstream os;
        os << "sets=" << sets_str(inst, inst.true_sets) << " x_" << k + 1
           << " subset of x_" << i + 1 << " but y_" << k + 1 << "="
           << mask_str(inst, alloc.outputs[k]) << " not within y_" << i + 1
           << "=" << mask_str(inst, alloc.outputs[i]);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_phi_inequality(const SubgroupValueFn& v) {
  PropertyReport rep{"phi-inequality"};
  if (v.n > 5) {
    rep.skipped = true;
    rep.note = "player count exceeds the exhaustive cap (n<=5)";
    return rep;
  }
  const std::uint32_t all = v.all_players();
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) < 2) continue;
    for (int i = 0; i < v.n; ++i) {
      if (!(s & (1u << i))) continue;
      for (int j = 0; j < v.n; ++j) {
        if (j == i || !(s & (1u << j))) continue;
        ++rep.instances_checked;
        const Rational lhs = phi(v, s, i);
        const Rational rhs = phi(v, s, j) - phi(v, s & ~(1u << i), j);
        if (lhs < rhs) {
          rep.pass = false;
          std::ostringstream os;
          os << "S=" << s << " i=" << i + 1 << " j=" << j + 1
             << " phi_i(S)=" << format_rational(lhs)
             << " < phi_j(S)-phi_j(S\\{i})=" << format_rational(rhs);
          rep.counterexample = os.str();
          return rep;
        }
      }
    }
  }
  return rep;
}

PropertyReport check_average_delta(const PointInstance& inst,
                                   const AverageMechanism& mech_in) {
  PropertyReport rep{"average-delta"};
  const AverageMechanism mech =
      mech_in ? mech_in
              : [](const PointInstance& in, const std::vector<bool>& f,
                   int pp) { return average_mechanism(in, f, pp); };
  const std::size_t n = inst.players();
  const std::vector<bool> everyone(n, true);
  const BenefitVector base = mech(inst, everyone, 2).benefits;
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<bool> flags = everyone;
    flags[d] = false;
    const BenefitVector after = mech(inst, flags, 2).benefits;
    const Rational delta_d = after[d] - base[d];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == d) continue;
      ++rep.instances_checked;
      const Rational delta_i = after[i] - base[i];
      if (delta_d > delta_i) {
        rep.pass = false;
        std::ostringstream os;
        os << "points=" << rat_vec_str(inst.points) << " deviator=" << d + 1
           << " delta_d=" << format_rational(delta_d) << " > delta_" << i + 1
           << "=" << format_rational(delta_i);
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace iex
