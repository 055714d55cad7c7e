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

#include "iex/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "iex/rational.hpp"

namespace iex {

Rational parse_rational(const std::string& text) {
  auto bad = [&] {
    throw Error(ErrorKind::kParse, "bad rational literal: '" + text + "'");
  };
  const auto is_integer = [](const std::string& s) {
    std::size_t i = !s.empty() && s[0] == '-' ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_integer(text)) bad();
      return Rational(boost::multiprecision::cpp_int(text));
    }
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    if (!is_integer(num_text) || !is_integer(den_text)) bad();
    boost::multiprecision::cpp_int num(num_text);
    boost::multiprecision::cpp_int den(den_text);
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

Mask pi_prefix(Mask pool, long long count) {
  if (count < 0 || count > set_size(pool)) {
    throw_structural("pi_prefix: pool smaller than requested count");
  }
  Mask out = 0;
  while (count-- > 0) {
    const Mask low = pool & (~pool + 1);
    out |= low;
    pool ^= low;
  }
  return out;
}

Mask Universe::full() const {
  if (elements.empty()) return 0;
  return elements.size() == kMaxUniverse
             ? ~Mask{0}
             : (Mask{1} << elements.size()) - 1;
}

Mask Universe::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& name : names) {
    const auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) {
      throw_structural("element '" + name + "' is not in the universe");
    }
    const Mask bit = Mask{1} << (it - elements.begin());
    if (m & bit) {
      throw_structural("duplicate element '" + name + "' in a set listing");
    }
    m |= bit;
  }
  return m;
}

std::vector<std::string> Universe::names_of(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (m & (Mask{1} << i)) out.push_back(elements[i]);
  }
  return out;
}

void Universe::validate() const {
  if (elements.size() > kMaxUniverse) {
    throw Error(ErrorKind::kCapacity, "universe exceeds capacity");
  }
  std::unordered_set<std::string> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw_structural("empty element identifier");
    if (!seen.insert(e).second) {
      throw_structural("duplicate universe element '" + e + "'");
    }
  }
}

void SetInstance::validate() const {
  universe.validate();
  const Mask full = universe.full();
  for (const Mask s : true_sets) {
    if (s & ~full) throw_structural("player set outside the universe");
  }
}

bool StrategyProfile::all_or_nothing(const SetInstance& inst) const {
  if (reports.size() != inst.true_sets.size()) return false;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i] != 0 && reports[i] != inst.true_sets[i]) return false;
  }
  return true;
}

void StrategyProfile::validate(const SetInstance& inst) const {
  if (reports.size() != inst.true_sets.size()) {
    throw_structural("profile size does not match the instance");
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i] & ~inst.true_sets[i]) {
      throw_structural("player " + std::to_string(i + 1) +
                       " reports elements outside its true set");
    }
  }
}

BenefitVector information_benefit(const SetInstance& inst,
                                  const StrategyProfile& profile,
                                  const Allocation& alloc) {
  const std::size_t n = inst.players();
  if (profile.reports.size() != n || alloc.outputs.size() != n) {
    throw_structural("instance/profile/allocation dimension mismatch");
  }
  BenefitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = set_size(alloc.outputs[i] & ~profile.reports[i]);
  }
  return v;
}

UtilityVector utility_vector(const BenefitVector& v) {
  const std::size_t n = v.size();
  UtilityVector u(n);
  if (n == 1) {
    u[0] = v[0];
    return u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational best;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (first || v[j] > best) best = v[j];
      first = false;
    }
    u[i] = v[i] - best;
  }
  return u;
}

Rational social_welfare(const BenefitVector& v) {
  Rational sum = 0;
  for (const auto& b : v) sum += b;
  return sum;
}

}  // namespace iex
