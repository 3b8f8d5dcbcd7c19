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

#include <cstdio>
#include <cstring>

#include "milnor/milnor.h"

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--help") == 0 || std::strcmp(argv[i], "-h") == 0) {
      std::fputs(milnor_usage(), stdout);
      return 0;
    }
    if (std::strcmp(argv[i], "--version") == 0) {
      std::printf("milnor %s\n", milnor_version());
      return 0;
    }
  }
  milnor_session* session = milnor_session_create();
  if (!session) return 2;
  milnor_report* report = nullptr;
  int rc = milnor_run(session, argc - 1, argv + 1, &report);
  if (rc != MILNOR_OK) {
    std::fprintf(stderr, "milnor: %s\n", milnor_last_error(session));
    milnor_session_destroy(session);
    return 2;
  }
  std::printf("%s\n", milnor_report_json(report));
  std::fprintf(stderr, "%s\n", milnor_report_summary(report));
  int code = milnor_report_exit_code(report);
  milnor_report_destroy(report);
  milnor_session_destroy(session);
  return code;
}
