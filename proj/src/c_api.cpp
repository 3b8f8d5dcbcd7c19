/*
 * Copyright 2026 The milnor-kt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "milnor/milnor.h"

#include <new>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/oracles.hpp"
#include "milnor/parse.hpp"
#include "milnor/request.hpp"

struct milnor_session {
  std::string last_error;
};

struct milnor_report {
  std::string json;
  std::string summary;
  int exit_code = 0;
  int status = MILNOR_OK;
};

namespace {

int fail_with(milnor_session* s, int code, const std::string& msg) {
  if (s) s->last_error = msg;
  return code;
}

}  // namespace

extern "C" {

const char* milnor_version(void) { return "1.0.0"; }

const char* milnor_usage(void) {
  static const std::string text = milnor::usage();
  return text.c_str();
}

const char* milnor_status_name(int status) {
  if (status == MILNOR_OK) return "Ok";
  if (status >= MILNOR_INVALID_ARGUMENT && status <= MILNOR_DIVISION_BY_ZERO)
    return milnor::error_code_name(static_cast<milnor::ErrorCode>(status)).data();
  return "Internal";
}

milnor_session* milnor_session_create(void) { return new (std::nothrow) milnor_session(); }

void milnor_session_destroy(milnor_session* session) { delete session; }

const char* milnor_last_error(const milnor_session* session) {
  return session ? session->last_error.c_str() : "";
}

int milnor_run(milnor_session* session, int argc, const char* const* argv,
               milnor_report** out) {
  if (!session || !out || argc < 0 || (argc > 0 && !argv))
    return fail_with(session, MILNOR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      if (!argv[i]) return fail_with(session, MILNOR_INVALID_ARGUMENT, "null argv entry");
      args.emplace_back(argv[i]);
    }
    milnor::Report rep = milnor::run_args(args);
    auto* r = new milnor_report();
    r->json = rep.json();
    r->summary = rep.summary;
    r->exit_code = rep.exit_code;
    const auto& err = rep.doc["error"];
    r->status = err.is_null() ? MILNOR_OK : err["code"].get<int>();
    if (r->status == 0 && !err.is_null()) r->status = MILNOR_INTERNAL;
    session->last_error = err.is_null() ? "" : err["message"].get<std::string>();
    *out = r;
    return MILNOR_OK;
  } catch (const std::exception& e) {
    return fail_with(session, MILNOR_INTERNAL, e.what());
  }
}

const char* milnor_report_json(const milnor_report* report) {
  return report ? report->json.c_str() : "";
}

const char* milnor_report_summary(const milnor_report* report) {
  return report ? report->summary.c_str() : "";
}

int milnor_report_exit_code(const milnor_report* report) {
  return report ? report->exit_code : 2;
}

int milnor_report_status(const milnor_report* report) {
  return report ? report->status : MILNOR_INVALID_ARGUMENT;
}

void milnor_report_destroy(milnor_report* report) { delete report; }

int milnor_eq_zero(milnor_session* session, const char* domain, int degree,
                   const char* symbol, milnor_verdict* verdict) {
  if (!session || !domain || !symbol || !verdict || degree < 0)
    return fail_with(session, MILNOR_INVALID_ARGUMENT, "invalid argument");
  try {
    milnor::Domain d = milnor::parse_domain(domain);
    if (!d.function_field && !d.is_field())
      return fail_with(session, MILNOR_INVALID_ARGUMENT, "eq needs a field domain");
    auto n = static_cast<std::size_t>(degree);
    milnor::SymbolSum s = milnor::parse_symbol(d.field, symbol, n);
    milnor::Verdict v = milnor::eq_zero(d.field, n, s);
    *verdict = v.is_zero()      ? MILNOR_VERDICT_ZERO
               : v.is_nonzero() ? MILNOR_VERDICT_NONZERO
                                : MILNOR_VERDICT_UNDECIDABLE;
    session->last_error.clear();
    return MILNOR_OK;
  } catch (const milnor::Error& e) {
    return fail_with(session, static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail_with(session, MILNOR_INTERNAL, e.what());
  }
}

}  // extern "C"
