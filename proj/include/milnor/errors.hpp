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

#ifndef MILNOR_ERRORS_HPP_
#define MILNOR_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnor {

// Stable error codes. The numeric values are part of the C API and the
// CLI report format; append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kZeroPolynomial = 2,
  kDegreeBoundExceeded = 3,
  kNotCoprime = 4,
  kNotComaximal = 5,
  kNotIrreducible = 6,
  kLeadingCoeffNotUnit = 7,
  kUnsupportedCoefficients = 8,
  kZeroEntry = 9,
  kUnsupportedDomain = 10,
  kDomainMismatch = 11,
  kNotFeasible = 12,
  kNotFound = 13,
  kOracleUndecidable = 14,
  kTowerTooDeep = 15,
  kFieldTooLarge = 16,
  kZeroArgument = 17,
  kNotAdmissible = 18,
  kNotInCube = 19,
  kUnsupportedTower = 20,
  kParseError = 21,
  kDivisionByZero = 22,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& expected)
      : Error(ErrorCode::kParseError,
              "parse error at " + std::to_string(line) + ":" +
                  std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace milnor

#endif  // MILNOR_ERRORS_HPP_
