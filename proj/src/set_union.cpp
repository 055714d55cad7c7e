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

#include "iex/set_union.hpp"

#include <algorithm>
#include <cstdint>

namespace iex {

std::array<Mask, 2> two_party(Mask x1, Mask x2) {
  // Smaller report plays the role of player 1; ties keep positional order.
  const bool swapped = set_size(x2) < set_size(x1);
  const Mask small = swapped ? x2 : x1;
  const Mask large = swapped ? x1 : x2;
  const Mask gain = pi_prefix(large & ~small, set_size(small & ~large));
  const Mask y_small = small | gain;
  const Mask y_large = small | large;
  if (swapped) return {y_large, y_small};
  return {y_small, y_large};
}

std::array<Mask, 3> three_party_disjoint(Mask x1, Mask x2, Mask x3) {
  if ((x1 & x2) || (x2 & x3) || (x1 & x3)) {
    throw_structural("three_party_disjoint: inputs overlap");
  }
  std::array<Mask, 3> x{x1, x2, x3};
  const int m = std::min({set_size(x1), set_size(x2), set_size(x3)});

  Mask shared = 0;
  std::array<Mask, 3> residual{};
  for (int i = 0; i < 3; ++i) {
    const Mask contrib = pi_prefix(x[i], m);
    shared |= contrib;
    residual[i] = x[i] & ~contrib;
  }
  std::array<Mask, 3> y;
  for (int i = 0; i < 3; ++i) y[i] = x[i] | shared;

  // Exhausted players drop out; two survivors trade their residuals.
  std::array<int, 3> alive{};
  int n_alive = 0;
  for (int i = 0; i < 3; ++i) {
    if (residual[i] != 0) alive[n_alive++] = i;
  }
  if (n_alive == 2) {
    const auto r = two_party(residual[alive[0]], residual[alive[1]]);
    y[alive[0]] |= r[0];
    y[alive[1]] |= r[1];
  }
  return y;
}

std::array<Mask, 3> three_party(Mask in1, Mask in2, Mask in3) {
  std::array<Mask, 3> x{in1, in2, in3};
  std::array<Mask, 3> y{in1, in2, in3};

  // Common elements do not affect the exchange.
  const Mask z0 = in1 & in2 & in3;
  for (auto& xi : x) xi &= ~z0;

  // inter[i] = size of the intersection of the two players other than i.
  long long inter[3] = {set_size(x[1] & x[2]), set_size(x[0] & x[2]),
                        set_size(x[0] & x[1])};

  // Relabel so the minimal pairwise intersection sits between players 2
  // and 3 (it is emptied by the s-exchange) and |x2| >= |x3|; ties go to
  // the smallest original index.
  int one = 0;
  for (int i = 1; i < 3; ++i) {
    if (inter[i] < inter[one]) one = i;
  }
  int a = (one + 1) % 3, b = (one + 2) % 3;
  if (a > b) std::swap(a, b);
  const int two = set_size(x[b]) > set_size(x[a]) ? b : a;
  const int three = two == a ? b : a;

  // Trade s elements around the pairwise intersections.
  const long long s = inter[one];
  const Mask z1 = x[two] & x[three];
  const Mask z2 = pi_prefix(x[three] & x[one], s);
  const Mask z3 = pi_prefix(x[one] & x[two], s);
  y[one] |= z1;
  y[two] |= z2;
  y[three] |= z3;
  const Mask zall = z1 | z2 | z3;
  for (auto& xi : x) xi &= ~zall;

  const Mask x2p = x[two] & x[one];    // x2'
  const Mask x2pp = x[two] & ~x[one];  // x2''
  const Mask x3p = x[three] & x[one];  // x3'
  const Mask x3pp = x[three] & ~x[one];

  const long long n2p = set_size(x2p), n2pp = set_size(x2pp);
  const long long n3p = set_size(x3p), n3pp = set_size(x3pp);

  if (n2p >= n3pp && n2pp >= n3p) {
    // Case 1: player 3 trades away everything, then 1 and 2 finish.
    const Mask z = pi_prefix(x2p, n3pp);
    const Mask w = pi_prefix(x2pp, n3p);
    y[two] |= x[three];
    y[three] |= z | w;
    y[one] |= w | x3pp;
    const auto r = two_party(x[one] & ~x3p, x[two] & ~w);
    y[one] |= r[0];
    y[two] |= r[1];
  } else if (n3pp >= n2p && n2pp >= n3p) {
    // Case 2: cross-trades leave only exclusive elements.
    const Mask w = pi_prefix(x2pp, n3p);
    const Mask z = pi_prefix(x3pp, n2p);
    y[two] |= x3p | z;
    y[three] |= x2p | w;
    y[one] |= z | w;
    const auto r = three_party_disjoint(x[one] & ~(x2p | x3p), x2pp & ~w,
                                        x3pp & ~z);
    y[one] |= r[0];
    y[two] |= r[1];
    y[three] |= r[2];
  } else {
    // Case 3 (|x3''| < |x2'| holds here, else |x2| >= |x3| would fail):
    // player 1 collects both exclusive pools, then 2 and 3 finish.
    const Mask w = pi_prefix(x2p, n3pp);
    const Mask z = pi_prefix(x3p, n2pp);
    y[two] |= x3pp | z;
    y[three] |= x2pp | w;
    y[one] |= x2pp | x3pp;
    const auto r = two_party(x2p & ~w, x3p & ~z);
    y[two] |= r[0];
    y[three] |= r[1];
  }
  return y;
}

Allocation pareto_repair(const SetInstance& inst,
                         const StrategyProfile& profile,
                         const Allocation& alloc) {
  const std::size_t n = inst.players();
  if (profile.reports.size() != n || alloc.outputs.size() != n) {
    throw_structural("pareto_repair: dimension mismatch");
  }
  Mask pool = 0;
  for (const Mask x : profile.reports) pool |= x;

  long long v_star = 0;
  std::vector<long long> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = set_size(alloc.outputs[i] & ~profile.reports[i]);
    v_star = std::max(v_star, v[i]);
  }

  Allocation repaired = alloc;
  for (std::size_t j = 0; j < n; ++j) {
    // Only reporting players take part in the exchange; topping up a
    // nonparticipant would hand out elements for free and destroy the
    // incentive to participate.
    if (profile.reports[j] == 0) continue;
    const long long cap = set_size(pool & ~profile.reports[j]);
    const long long target = std::min(v_star, cap);
    if (v[j] < target) {
      repaired.outputs[j] |=
          pi_prefix(pool & ~repaired.outputs[j], target - v[j]);
    }
  }
  return repaired;
}

namespace {

long long compute_v_rec(const std::vector<Mask>& x, std::uint32_t members,
                        std::map<std::uint32_t, long long>& values) {
  if (const auto it = values.find(members); it != values.end()) {
    return it->second;
  }
  long long v = 0;
  if (std::popcount(members) > 1) {
    long long min_sum = -1, max_deficit = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const std::uint32_t bit = 1u << k;
      if (!(members & bit)) continue;
      Mask z = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != k && (members & (1u << j))) z |= x[j];
      }
      const long long d = set_size(z & ~x[k]);
      const long long sub = compute_v_rec(x, members & ~bit, values);
      max_deficit = std::max(max_deficit, d);
      if (min_sum < 0 || d + sub < min_sum) min_sum = d + sub;
    }
    v = std::min(min_sum, max_deficit);
  }
  values.emplace(members, v);
  return v;
}

}  // namespace

ComputeVTrace compute_v(const std::vector<Mask>& reports) {
  if (reports.size() > 16) {
    throw Error(ErrorKind::kCapacity, "compute_v: too many players");
  }
  ComputeVTrace trace;
  const std::uint32_t all =
      reports.empty() ? 0u : ((1u << reports.size()) - 1);
  trace.value = compute_v_rec(reports, all, trace.subset_values);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    Mask z = 0;
    for (std::size_t j = 0; j < reports.size(); ++j) {
      if (j != k) z |= reports[j];
    }
    trace.deficits.push_back(set_size(z & ~reports[k]));
  }
  return trace;
}

Allocation multiparty_aon(const SetInstance& inst,
                          const StrategyProfile& profile) {
  return multiparty_aon(inst, profile, nullptr);
}

Allocation multiparty_aon(const SetInstance& inst,
                          const StrategyProfile& profile,
                          ComputeVTrace* trace) {
  if (!profile.all_or_nothing(inst)) {
    throw_structural("multiparty_aon requires an all-or-nothing profile");
  }
  const std::size_t n = inst.players();

  std::vector<std::size_t> participants;
  std::vector<Mask> px;
  Mask pool = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (profile.reports[i] != 0) {
      participants.push_back(i);
      px.push_back(profile.reports[i]);
      pool |= profile.reports[i];
    }
  }

  const ComputeVTrace t = compute_v(px);
  if (trace) *trace = t;

  Allocation alloc;
  alloc.outputs = profile.reports;  // nonparticipants keep their report
  for (std::size_t idx = 0; idx < participants.size(); ++idx) {
    const std::size_t i = participants[idx];
    const Mask mine = profile.reports[i];
    const long long cap = set_size(pool & ~mine);
    const long long v_i = std::min(t.value, cap);
    alloc.outputs[i] = mine | pi_prefix(pool & ~mine, v_i);
  }
  return alloc;
}

}  // namespace iex
