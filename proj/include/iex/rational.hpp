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

#ifndef IEX_RATIONAL_HPP
#define IEX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace iex {

// All mechanism arithmetic is exact. No floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Extended value: nullopt stands for the bottom element, ordered below
// every rational (used for "no information" / out-of-range values).
using ExtValue = std::optional<Rational>;

// Parses "p", "-p" or "p/q". Throws iex::Error(kParse) on bad input.
Rational parse_rational(const std::string& text);

// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

inline bool ext_less(const ExtValue& a, const ExtValue& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

}  // namespace iex

#endif  // IEX_RATIONAL_HPP
