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

#include "milnor/errors.hpp"

namespace milnor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kDegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNotComaximal: return "NotComaximal";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kLeadingCoeffNotUnit: return "LeadingCoeffNotUnit";
    case ErrorCode::kUnsupportedCoefficients: return "UnsupportedCoefficients";
    case ErrorCode::kZeroEntry: return "ZeroEntry";
    case ErrorCode::kUnsupportedDomain: return "UnsupportedDomain";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNotFeasible: return "NotFeasible";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kOracleUndecidable: return "OracleUndecidable";
    case ErrorCode::kTowerTooDeep: return "TowerTooDeep";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kZeroArgument: return "ZeroArgument";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kNotInCube: return "NotInCube";
    case ErrorCode::kUnsupportedTower: return "UnsupportedTower";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace milnor
