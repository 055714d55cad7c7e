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

#include "infoexch.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "iex/driver.hpp"

struct iex_scenario {
  iex::Scenario s;
};

namespace {

void write_err(char* err, size_t err_cap, const std::string& msg) {
  if (!err || err_cap == 0) return;
  const size_t n = std::min(err_cap - 1, msg.size());
  std::memcpy(err, msg.data(), n);
  err[n] = '\0';
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int status_of(const iex::Error& e) {
  switch (e.kind()) {
    case iex::ErrorKind::kCapacity: return IEX_ERR_CAPACITY;
    case iex::ErrorKind::kParse:
    case iex::ErrorKind::kStructural:
    case iex::ErrorKind::kConfig: return IEX_ERR_INPUT;
  }
  return IEX_ERR_INTERNAL;
}

// Runs `fn`, mapping exceptions to status codes and the error buffer.
template <typename Fn>
int guarded(char* err, size_t err_cap, Fn&& fn) {
  try {
    return fn();
  } catch (const iex::Error& e) {
    write_err(err, err_cap, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    write_err(err, err_cap, e.what());
    return IEX_ERR_INTERNAL;
  } catch (...) {
    write_err(err, err_cap, "unknown error");
    return IEX_ERR_INTERNAL;
  }
}

std::vector<std::string> split_properties(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string text(csv);
  if (text == "all" || text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const size_t end = comma == std::string::npos ? text.size() : comma;
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* iex_version(void) { return "1.0.0"; }

iex_scenario* iex_scenario_parse(const char* text, char* err,
                                 size_t err_cap) {
  if (!text) {
    write_err(err, err_cap, "text must not be NULL");
    return nullptr;
  }
  iex_scenario* handle = nullptr;
  guarded(err, err_cap, [&] {
    handle = new iex_scenario{iex::parse_scenario(text)};
    return IEX_OK;
  });
  return handle;
}

void iex_scenario_free(iex_scenario* s) { delete s; }

int iex_scenario_emit(const iex_scenario* s, char** out_doc, char* err,
                      size_t err_cap) {
  if (!s || !out_doc) {
    write_err(err, err_cap, "scenario and out_doc must not be NULL");
    return IEX_ERR_INPUT;
  }
  return guarded(err, err_cap, [&] {
    *out_doc = dup_string(iex::emit_scenario(s->s));
    return *out_doc ? IEX_OK : IEX_ERR_INTERNAL;
  });
}

int iex_gen(const char* kind, int players, int universe_size,
            const char* value_kind, uint64_t seed, char** out_doc,
            char* err, size_t err_cap) {
  if (!kind || !out_doc) {
    write_err(err, err_cap, "kind and out_doc must not be NULL");
    return IEX_ERR_INPUT;
  }
  return guarded(err, err_cap, [&] {
    const iex::Scenario s =
        iex::gen_scenario(iex::kind_from_name(kind), players, universe_size,
                          value_kind ? value_kind : "", seed);
    *out_doc = dup_string(iex::emit_scenario(s));
    return *out_doc ? IEX_OK : IEX_ERR_INTERNAL;
  });
}

int iex_run(const iex_scenario* s, const char* mechanism,
            int with_pareto_repair, char** out_report, char* err,
            size_t err_cap) {
  if (!s || !out_report) {
    write_err(err, err_cap, "scenario and out_report must not be NULL");
    return IEX_ERR_INPUT;
  }
  return guarded(err, err_cap, [&] {
    *out_report = dup_string(iex::run_report(
        s->s, mechanism ? mechanism : "", with_pareto_repair != 0));
    return *out_report ? IEX_OK : IEX_ERR_INTERNAL;
  });
}

int iex_verify_scenario(const iex_scenario* s, const char* properties_csv,
                        const char* mechanism, int strict,
                        char** out_report, char* err, size_t err_cap) {
  if (!s || !out_report) {
    write_err(err, err_cap, "scenario and out_report must not be NULL");
    return IEX_ERR_INPUT;
  }
  return guarded(err, err_cap, [&] {
    iex::VerifyOptions opts;
    opts.properties = split_properties(properties_csv);
    opts.mechanism = mechanism ? mechanism : "";
    opts.strict = strict != 0;
    const iex::VerifyResult result = iex::verify_scenario(s->s, opts);
    *out_report = dup_string(result.report_json);
    if (!*out_report) return IEX_ERR_INTERNAL;
    return result.all_pass ? IEX_OK : IEX_FAIL;
  });
}

int iex_verify_sweep(const char* kind, const char* properties_csv,
                     int count, uint64_t seed, int players,
                     int universe_size, const char* mechanism, int strict,
                     char** out_report, char* err, size_t err_cap) {
  if (!kind || !out_report) {
    write_err(err, err_cap, "kind and out_report must not be NULL");
    return IEX_ERR_INPUT;
  }
  return guarded(err, err_cap, [&] {
    iex::VerifyOptions opts;
    opts.properties = split_properties(properties_csv);
    opts.mechanism = mechanism ? mechanism : "";
    opts.strict = strict != 0;
    opts.count = count;
    opts.seed = seed;
    opts.players = players;
    opts.universe_size = universe_size;
    const iex::VerifyResult result =
        iex::verify_sweep(iex::kind_from_name(kind), opts);
    *out_report = dup_string(result.report_json);
    if (!*out_report) return IEX_ERR_INTERNAL;
    return result.all_pass ? IEX_OK : IEX_FAIL;
  });
}

void iex_string_free(char* s) { std::free(s); }

}  // extern "C"
