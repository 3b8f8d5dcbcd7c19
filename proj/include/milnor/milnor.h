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

/* C interface to the milnor library. All strings are UTF-8 and owned by the
 * library; they stay valid until the owning handle is destroyed or, for
 * milnor_last_error, until the next call on the same session. */

#ifndef MILNOR_MILNOR_H_
#define MILNOR_MILNOR_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MILNOR_API __attribute__((visibility("default")))
#else
#define MILNOR_API
#endif

/* Status codes; values match the "code" field of report errors. */
typedef enum milnor_status {
  MILNOR_OK = 0,
  MILNOR_INVALID_ARGUMENT = 1,
  MILNOR_ZERO_POLYNOMIAL = 2,
  MILNOR_DEGREE_BOUND_EXCEEDED = 3,
  MILNOR_NOT_COPRIME = 4,
  MILNOR_NOT_COMAXIMAL = 5,
  MILNOR_NOT_IRREDUCIBLE = 6,
  MILNOR_LEADING_COEFF_NOT_UNIT = 7,
  MILNOR_UNSUPPORTED_COEFFICIENTS = 8,
  MILNOR_ZERO_ENTRY = 9,
  MILNOR_UNSUPPORTED_DOMAIN = 10,
  MILNOR_DOMAIN_MISMATCH = 11,
  MILNOR_NOT_FEASIBLE = 12,
  MILNOR_NOT_FOUND = 13,
  MILNOR_ORACLE_UNDECIDABLE = 14,
  MILNOR_TOWER_TOO_DEEP = 15,
  MILNOR_FIELD_TOO_LARGE = 16,
  MILNOR_ZERO_ARGUMENT = 17,
  MILNOR_NOT_ADMISSIBLE = 18,
  MILNOR_NOT_IN_CUBE = 19,
  MILNOR_UNSUPPORTED_TOWER = 20,
  MILNOR_PARSE_ERROR = 21,
  MILNOR_DIVISION_BY_ZERO = 22,
  MILNOR_INTERNAL = 100
} milnor_status;

typedef enum milnor_verdict {
  MILNOR_VERDICT_ZERO = 0,
  MILNOR_VERDICT_NONZERO = 1,
  MILNOR_VERDICT_UNDECIDABLE = 2
} milnor_verdict;

typedef struct milnor_session milnor_session;
typedef struct milnor_report milnor_report;

MILNOR_API const char* milnor_version(void);
MILNOR_API const char* milnor_usage(void);
MILNOR_API const char* milnor_status_name(int status);

MILNOR_API milnor_session* milnor_session_create(void);
MILNOR_API void milnor_session_destroy(milnor_session* session);
MILNOR_API const char* milnor_last_error(const milnor_session* session);

/* Runs one command given its flags (argv excludes the program name). A
 * report is produced for every well-formed call, including failed
 * computations; MILNOR_OK is returned then. */
MILNOR_API int milnor_run(milnor_session* session, int argc, const char* const* argv,
                          milnor_report** out);

MILNOR_API const char* milnor_report_json(const milnor_report* report);
MILNOR_API const char* milnor_report_summary(const milnor_report* report);
/* 0 ok, 1 violation, 2 error. */
MILNOR_API int milnor_report_exit_code(const milnor_report* report);
/* Error code of a failed computation, MILNOR_OK otherwise. */
MILNOR_API int milnor_report_status(const milnor_report* report);
MILNOR_API void milnor_report_destroy(milnor_report* report);

/* Zero test of a symbol sum in K_degree(domain). */
MILNOR_API int milnor_eq_zero(milnor_session* session, const char* domain, int degree,
                              const char* symbol, milnor_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif /* MILNOR_MILNOR_H_ */
