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

#include "iex/general_mechanism.hpp"

using namespace iex;

namespace {

// x1={a,b}, x2={b,c}, x3={c} over a<b<c.
SetInstance coverage3() {
  return SetInstance{Universe{{"a", "b", "c"}}, {0b011, 0b110, 0b100}};
}

SubgroupValueFn random_monotone(std::mt19937_64& rng, int n) {
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

}  // namespace

TEST_CASE("make_coverage_value tabulates unions") {
  SetInstance inst{Universe{{"a", "b", "c"}}, {0b011, 0b110}};
  const SubgroupValueFn v = make_coverage_value(inst);
  CHECK(v.table == std::vector<Rational>{0, 2, 2, 3});
  v.validate();
  const SubgroupValueFn v3 = make_coverage_value(coverage3());
  CHECK(v3.table == std::vector<Rational>{0, 2, 2, 3, 1, 3, 2, 3});
}

TEST_CASE("value table validation") {
  SubgroupValueFn bad_size{2, {0, 1, 2}};
  CHECK_THROWS_AS(bad_size.validate(), Error);
  SubgroupValueFn bad_empty{1, {1, 2}};
  CHECK_THROWS_AS(bad_empty.validate(), Error);
  SubgroupValueFn non_monotone{2, {0, 3, 1, 2}};
  CHECK_THROWS_AS(non_monotone.validate(), Error);
}

TEST_CASE("phi: two-party coverage gives the exclusive trade") {
  SetInstance inst{Universe{{"a", "b", "c"}}, {0b011, 0b110}};
  const SubgroupValueFn v = make_coverage_value(inst);
  CHECK(phi(v, 0b11, 0) == 1);
  CHECK(phi(v, 0b11, 1) == 1);
}

TEST_CASE("phi: three-player coverage example") {
  const SubgroupValueFn v = make_coverage_value(coverage3());
  CHECK(phi(v, 0b111, 0) == 1);
  CHECK(phi(v, 0b111, 1) == 1);
  CHECK(phi(v, 0b111, 2) == 1);
  CHECK(phi(v, 0b110, 1) == 0);  // phi_2({2,3})
  CHECK(phi(v, 0b110, 2) == 0);  // phi_3({2,3})
  CHECK(phi(v, 0b001, 0) == 0);  // singleton coalition
  CHECK_THROWS_AS(phi(v, 0b110, 0), Error);  // player outside coalition
}

TEST_CASE("general_mechanism benefits") {
  const SubgroupValueFn v = make_coverage_value(coverage3());
  CHECK(general_mechanism(v, {true, true, true}) == BenefitVector{1, 1, 1});
  CHECK(general_mechanism(v, {false, true, true}) == BenefitVector{0, 0, 0});
  CHECK(general_mechanism(v, {false, false, false}) ==
        BenefitVector{0, 0, 0});
}

TEST_CASE("coverage_allocate realizes integral benefits pi-first") {
  SetInstance inst{Universe{{"a", "b", "c"}}, {0b011, 0b110}};
  const Allocation alloc = coverage_allocate(inst, {1, 1}, 0b11);
  CHECK(alloc.outputs[0] == 0b111);
  CHECK(alloc.outputs[1] == 0b111);
  const Allocation partial = coverage_allocate(inst, {0, 0}, 0b01);
  CHECK(partial.outputs[0] == 0b011);
  CHECK_THROWS_AS(coverage_allocate(inst, {5, 0}, 0b11), Error);
  CHECK_THROWS_AS(coverage_allocate(inst, {Rational(1, 2), 0}, 0b11), Error);
}

TEST_CASE("phi is nonnegative and bounded by the own-contribution max") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const SubgroupValueFn v = random_monotone(rng, n);
    v.validate();
    const std::uint32_t all = v.all_players();
    for (std::uint32_t s = 1; s <= all; ++s) {
      for (int i = 0; i < n; ++i) {
        if (!(s & (1u << i))) continue;
        const Rational p = phi(v, s, i);
        CHECK(p >= 0);
        Rational bound(0);
        const std::uint32_t others = s & ~(1u << i);
        std::uint32_t r = 0;
        do {
          const std::uint32_t sub = r | (1u << i);
          const Rational margin = v.value(sub) - v.value(sub & ~(1u << i));
          if (margin > bound) bound = margin;
          r = (r - others) & others;
        } while (r != 0);
        CHECK(p <= bound);
      }
    }
  }
}
