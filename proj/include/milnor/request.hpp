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

// Command requests and their structured reports.

#ifndef MILNOR_REQUEST_HPP_
#define MILNOR_REQUEST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace milnor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

struct Request {
  std::string command;
  std::string domain;
  std::vector<std::string> symbols;
  std::vector<std::string> places;
  std::string tuple;
  std::string curve;
  std::string cycle;
  std::optional<std::size_t> degree;
  std::uint64_t seed = 0;
  std::optional<unsigned> max_degree;
  std::optional<std::uint64_t> prime_bound;

  bool operator==(const Request&) const = default;
  // Flags in a fixed order; parse_request(to_args()) == *this.
  std::vector<std::string> to_args() const;
};

const std::vector<std::string>& command_names();
std::string usage();

// Flags (without the program name) to a Request; payload arity is checked
// per command. Errors: kInvalidArgument.
Request parse_request(const std::vector<std::string>& args);

struct Report {
  nlohmann::ordered_json doc;
  int exit_code = kExitOk;
  std::string summary;

  std::string json() const { return doc.dump(2); }
};

// Library errors are reported with status "error" rather than thrown.
Report run_request(const Request& request);
Report run_args(const std::vector<std::string>& args);

}  // namespace milnor

#endif  // MILNOR_REQUEST_HPP_
