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

#ifndef IEX_DRIVER_HPP
#define IEX_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iex/scenario.hpp"
#include "iex/verifier.hpp"

namespace iex {

// Orchestration behind the C API and the CLI: mechanism dispatch,
// property sweeps, JSON report assembly. Reports are byte-stable for
// identical inputs.

struct VerifyOptions {
  std::vector<std::string> properties;  // empty = all applicable
  std::string mechanism;                // empty = the natural one
  bool strict = false;                  // skipped counts as failure
  int count = 0;                        // sweep size (generator mode)
  std::uint64_t seed = 0;
  int players = 3;
  int universe_size = 6;
};

struct VerifyResult {
  bool all_pass = true;
  bool any_skipped = false;
  std::string report_json;
};

// Known property names, for validation and "all".
const std::vector<std::string>& known_properties();

// Executes a mechanism on a scenario and renders the run report.
std::string run_report(const Scenario& s, const std::string& mechanism,
                       bool with_pareto_repair);

// Runs the selected checkers on one scenario.
VerifyResult verify_scenario(const Scenario& s, const VerifyOptions& opts);

// Generates `count` seeded scenarios of the given kind and checks them.
VerifyResult verify_sweep(ScenarioKind kind, const VerifyOptions& opts);

}  // namespace iex

#endif  // IEX_DRIVER_HPP
