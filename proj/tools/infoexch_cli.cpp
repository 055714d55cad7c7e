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

// Command-line front end. Talks to the library exclusively through the
// C API in infoexch.h. Exit codes: 0 = success / all properties hold,
// 1 = a verified property was violated, 2 = usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "infoexch.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { iex_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ScenarioDeleter {
  void operator()(iex_scenario* s) const { iex_scenario_free(s); }
};
using OwnedScenario = std::unique_ptr<iex_scenario, ScenarioDeleter>;

int emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitPass;
}

bool read_input(const std::string& path, std::string* text) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    *text = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *text = buf.str();
  return true;
}

int map_status(int status, const char* err) {
  if (status == IEX_OK) return kExitPass;
  if (status == IEX_FAIL) return kExitViolation;
  std::cerr << "error: " << err << "\n";
  return kExitUsage;
}

OwnedScenario load_scenario(const std::string& path) {
  std::string text;
  if (!read_input(path, &text)) return nullptr;
  char err[512] = {0};
  OwnedScenario s(iex_scenario_parse(text.c_str(), err, sizeof err));
  if (!s) std::cerr << "error: " << err << "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mechanisms for mutually beneficial information "
               "exchange, with property verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(iex_version()));

  // gen
  std::string gen_kind = "set-union";
  int gen_players = 3;
  int gen_universe = 6;
  std::string gen_value = "coverage";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a scenario document");
  gen->add_option("--kind", gen_kind,
                  "set-union | interval | average | general");
  gen->add_option("--players", gen_players, "number of players");
  gen->add_option("--universe", gen_universe,
                  "universe size (set-union / coverage)");
  gen->add_option("--value", gen_value,
                  "general kind only: coverage | table");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // run
  std::string run_scenario;
  std::string run_mechanism;
  bool run_repair = false;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run a mechanism on a scenario");
  run->add_option("--scenario", run_scenario, "scenario file ('-' = stdin)")
      ->required();
  run->add_option("--mechanism", run_mechanism,
                  "mechanism name (default: inferred from the scenario)");
  run->add_flag("--pareto-repair", run_repair,
                "apply the benefit-equalizing repair pass");
  run->add_option("--out", run_out, "output file (default stdout)");

  // verify
  std::string ver_scenario;
  std::string ver_kind;
  std::string ver_properties = "all";
  std::string ver_mechanism;
  int ver_count = 0;
  std::uint64_t ver_seed = 0;
  int ver_players = 3;
  int ver_universe = 6;
  bool ver_strict = false;
  std::string ver_out;
  auto* verify =
      app.add_subcommand("verify", "Check mechanism properties");
  auto* opt_scenario = verify->add_option(
      "--scenario", ver_scenario, "scenario file ('-' = stdin)");
  auto* opt_kind = verify->add_option(
      "--kind", ver_kind, "sweep mode: generate-and-check this kind");
  verify->add_option("--properties", ver_properties,
                     "comma-separated property names, or 'all'");
  verify->add_option("--mechanism", ver_mechanism,
                     "mechanism under test (broken-* = negative control)");
  verify->add_option("--count", ver_count, "sweep mode: instance count");
  verify->add_option("--seed", ver_seed, "sweep mode: base seed");
  verify->add_option("--players", ver_players, "sweep mode: players");
  verify->add_option("--universe", ver_universe, "sweep mode: universe size");
  verify->add_flag("--strict", ver_strict,
                   "treat capacity skips as failures");
  verify->add_option("--out", ver_out, "output file (default stdout)");
  opt_scenario->excludes(opt_kind);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  char err[512] = {0};

  if (gen->parsed()) {
    char* doc = nullptr;
    const int status =
        iex_gen(gen_kind.c_str(), gen_players, gen_universe,
                gen_value.c_str(), gen_seed, &doc, err, sizeof err);
    OwnedString owned(doc);
    if (status != IEX_OK) return map_status(status, err);
    return emit_output(doc, gen_out);
  }

  if (run->parsed()) {
    OwnedScenario s = load_scenario(run_scenario);
    if (!s) return kExitUsage;
    char* report = nullptr;
    const int status = iex_run(
        s.get(), run_mechanism.empty() ? nullptr : run_mechanism.c_str(),
        run_repair ? 1 : 0, &report, err, sizeof err);
    OwnedString owned(report);
    if (status != IEX_OK) return map_status(status, err);
    return emit_output(report, run_out);
  }

  // verify
  char* report = nullptr;
  int status;
  if (!ver_scenario.empty()) {
    OwnedScenario s = load_scenario(ver_scenario);
    if (!s) return kExitUsage;
    status = iex_verify_scenario(
        s.get(), ver_properties.c_str(),
        ver_mechanism.empty() ? nullptr : ver_mechanism.c_str(),
        ver_strict ? 1 : 0, &report, err, sizeof err);
  } else if (!ver_kind.empty()) {
    status = iex_verify_sweep(
        ver_kind.c_str(), ver_properties.c_str(), ver_count, ver_seed,
        ver_players, ver_universe,
        ver_mechanism.empty() ? nullptr : ver_mechanism.c_str(),
        ver_strict ? 1 : 0, &report, err, sizeof err);
  } else {
    std::cerr << "error: verify needs --scenario or --kind\n";
    return kExitUsage;
  }
  OwnedString owned(report);
  if (report) {
    const int out_status = emit_output(report, ver_out);
    if (out_status != kExitPass) return out_status;
  }
  return map_status(status, err);
}
