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

#include <algorithm>
#include <random>

#include "iex/core.hpp"

using namespace iex;

namespace {

Universe abc() { return Universe{{"a", "b", "c", "d"}}; }

}  // namespace

TEST_CASE("rational parse/format round trip") {
  CHECK(format_rational(parse_rational("3/4")) == "3/4");
  CHECK(format_rational(parse_rational("-3/4")) == "-3/4");
  CHECK(format_rational(parse_rational("6/8")) == "3/4");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK(format_rational(parse_rational("-10/5")) == "-2");
  CHECK(parse_rational("1/2") + parse_rational("1/3") == Rational(5, 6));
}

TEST_CASE("rational parse rejects junk") {
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("ext_less orders bottom below everything") {
  CHECK(ext_less(std::nullopt, ExtValue(Rational(-100))));
  CHECK_FALSE(ext_less(ExtValue(Rational(-100)), std::nullopt));
  CHECK_FALSE(ext_less(std::nullopt, std::nullopt));
  CHECK(ext_less(ExtValue(Rational(1, 2)), ExtValue(Rational(2, 3))));
}

TEST_CASE("pi_prefix takes the lowest bits") {
  CHECK(pi_prefix(0b110110, 0) == 0);
  CHECK(pi_prefix(0b110110, 2) == 0b000110);
  CHECK(pi_prefix(0b110110, 4) == 0b110110);
  CHECK_THROWS_AS(pi_prefix(0b11, 3), Error);
  CHECK_THROWS_AS(pi_prefix(0b11, -1), Error);
}

TEST_CASE("universe mask/name round trip follows listing order") {
  const Universe u = abc();
  CHECK(u.mask_of({"a", "c"}) == 0b101);
  CHECK(u.mask_of({"c", "a"}) == 0b101);
  CHECK(u.names_of(0b101) == std::vector<std::string>{"a", "c"});
  CHECK(u.full() == 0b1111);
  CHECK_THROWS_AS(u.mask_of({"z"}), Error);
  CHECK_THROWS_AS(u.mask_of({"a", "a"}), Error);
}

TEST_CASE("universe validation") {
  const Universe dup{{"a", "a"}};
  CHECK_THROWS_AS(dup.validate(), Error);
  const Universe blank{{""}};
  CHECK_THROWS_AS(blank.validate(), Error);
  Universe big;
  big.elements.resize(65);
  for (std::size_t i = 0; i < big.elements.size(); ++i) {
    big.elements[i] = "e" + std::to_string(i);
  }
  CHECK_THROWS_AS(big.validate(), Error);
}

TEST_CASE("profile validation and all-or-nothing detection") {
  SetInstance inst{abc(), {0b011, 0b110}};
  StrategyProfile truthful = StrategyProfile::truthful(inst);
  CHECK(truthful.all_or_nothing(inst));
  StrategyProfile drop{{0b000, 0b110}};
  CHECK(drop.all_or_nothing(inst));
  StrategyProfile hide{{0b001, 0b110}};
  CHECK_FALSE(hide.all_or_nothing(inst));
  hide.validate(inst);  // subset reports are valid strategies
  StrategyProfile forged{{0b111, 0b110}};
  CHECK_THROWS_AS(forged.validate(inst), Error);
}

TEST_CASE("information benefit counts new elements relative to the report") {
  SetInstance inst{abc(), {0b0001, 0b0110}};
  StrategyProfile prof{{0b0001, 0b0110}};
  Allocation alloc{{0b0111, 0b0110}};
  const BenefitVector v = information_benefit(inst, prof, alloc);
  CHECK(v == BenefitVector{2, 0});
  CHECK_THROWS_AS(information_benefit(inst, StrategyProfile{{0b1}}, alloc),
                  Error);
}

TEST_CASE("utility vector matches the envy definition") {
  CHECK(utility_vector({4, 4, 3}) == UtilityVector{0, 0, -1});
  CHECK(utility_vector({2, 2, 2}) == UtilityVector{0, 0, 0});
  CHECK(utility_vector({1, 0, 1}) == UtilityVector{0, -1, 0});
  CHECK(utility_vector({5}) == UtilityVector{5});  // n = 1 convention
}

TEST_CASE("social welfare sums benefits") {
  CHECK(social_welfare({4, 4, 3}) == 11);
  CHECK(social_welfare({}) == 0);
  CHECK(social_welfare({2, 2, 2}) == 6);
}

TEST_CASE("sum of utilities is never positive (random vectors)") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 5;
    BenefitVector v(n);
    for (auto& b : v) b = Rational(rng() % 17, 1 + rng() % 4);
    Rational sum = 0;
    for (const auto& u : utility_vector(v)) sum += u;
    CHECK(sum <= 0);
  }
}

TEST_CASE("utility vector is permutation-equivariant") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 5;
    BenefitVector v(n);
    for (auto& b : v) b = Rational(rng() % 9);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    BenefitVector pv(n);
    for (std::size_t i = 0; i < n; ++i) pv[i] = v[perm[i]];
    const UtilityVector u = utility_vector(v);
    const UtilityVector pu = utility_vector(pv);
    for (std::size_t i = 0; i < n; ++i) CHECK(pu[i] == u[perm[i]]);
  }
}
