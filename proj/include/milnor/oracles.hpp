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

// Zero tests for symbol sums in the K-groups with a decision procedure.

#ifndef MILNOR_ORACLES_HPP_
#define MILNOR_ORACLES_HPP_

#include <string>

#include "milnor/residues.hpp"

namespace milnor {

struct Verdict {
  enum class Kind { kZero, kNonZero, kUndecidable };

  Kind kind = Kind::kUndecidable;
  // NonZero: the separating invariant and its value.
  std::string witness;
  std::string value;
  // Undecidable: why.
  std::string reason;

  static Verdict zero() { return {Kind::kZero, "", "", ""}; }
  static Verdict nonzero(std::string witness, std::string value) {
    return {Kind::kNonZero, std::move(witness), std::move(value), ""};
  }
  static Verdict undecidable(std::string reason) {
    return {Kind::kUndecidable, "", "", std::move(reason)};
  }

  bool is_zero() const { return kind == Kind::kZero; }
  bool is_nonzero() const { return kind == Kind::kNonZero; }
  bool is_undecidable() const { return kind == Kind::kUndecidable; }
  std::string kind_name() const;
  std::string to_string() const;
};

// Sound zero test of zeta in K_n(domain):
//   K_0: the integer; K_1 of any field: the product of entries;
//   K_n(F_q), n >= 2: zero;
//   K_2(Q): tame symbols at odd primes and the real Hilbert symbol;
//   K_n(F_q(u)), n >= 2: tame symbols at the places of residue_support.
// Everything else is Undecidable.
Verdict eq_zero(const FieldPtr& domain, std::size_t n, const SymbolSum& zeta,
                const SymbolOptions& options = {});

// Verdict for a - b.
Verdict eq_equal(const FieldPtr& domain, std::size_t n, const SymbolSum& a,
                 const SymbolSum& b, const SymbolOptions& options = {});

// -1 iff a < 0 and b < 0. Errors: kZeroArgument.
int hilbert_real(const mpq_class& a, const mpq_class& b);

// Exponent of a to the least generator. Errors: kFieldTooLarge, kZeroArgument.
std::uint64_t k1_discrete_log(const Field& f, const Value& a,
                              std::uint64_t max_size = 1000000);

// Product of c-th powers of the entries of a degree-1 sum.
Value k1_value(const SymbolSum& zeta);

}  // namespace milnor

#endif  // MILNOR_ORACLES_HPP_
