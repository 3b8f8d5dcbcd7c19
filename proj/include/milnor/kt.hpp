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

// The K^t calculus over a coefficient ring A: feasible tuples, their tame
// symbols, Gabber's factorization, residue prescription, Bass-Tate norms
// and norm descent into A.

#ifndef MILNOR_KT_HPP_
#define MILNOR_KT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/oracles.hpp"

namespace milnor {

struct FactorPairVerdict {
  std::size_t slot_a = 0;
  std::size_t slot_b = 0;
  Poly a;
  Poly b;
  // "associate" or "comaximal"
  std::string verdict;
};

struct FeasibleTuple {
  RingPtr ring;
  FieldPtr function_field;
  Tuple entries;
  // Irreducible factors of numerator and denominator, per slot.
  std::vector<std::vector<Poly>> slot_factors;
  std::vector<FactorPairVerdict> pairs;
};

struct FeasibilityViolation {
  int condition = 0;
  std::string message;
  std::optional<Poly> a;
  std::optional<Poly> b;
};

struct FeasibilityResult {
  std::optional<FeasibleTuple> tuple;
  std::optional<FeasibilityViolation> violation;

  bool ok() const { return tuple.has_value(); }
};

// Entries are elements of Frac(A)(t). Errors: kZeroEntry, kDomainMismatch,
// kDegreeBoundExceeded.
FeasibilityResult feasible_check(const RingPtr& ring, const FieldPtr& function_field,
                                 const Tuple& entries, const SymbolOptions& options = {});

// Tame symbol of a feasible tuple; values over the residue field of the
// place (Frac(A) at infinity) with entries in A[t]/(pi).
// Errors: kLeadingCoeffNotUnit, kUnsupportedCoefficients, kNotFeasible.
SymbolSum kt_tame(const FeasibleTuple& x, const Place& place,
                  const SymbolOptions& options = {});

struct GabberResult {
  Poly x1;
  Poly x2;
  std::size_t attempts = 0;
  // "degree-one", "sampled" or "exhaustive"
  std::string method;
};

// x = x1 * x2 mod pi, deg x1 = deg x2 = deg pi - 1, unit leading
// coefficients, both comaximal with every y. Errors: kNotCoprime, kNotFound.
GabberResult gabber_factor(const RingPtr& ring, const Poly& pi, const Poly& x,
                           const std::vector<Poly>& ys, Rng& rng);
GabberResult gabber_factor(const RingPtr& ring, const Poly& pi, const Poly& x,
                           const std::vector<Poly>& ys, std::uint64_t seed);

struct PrescribeTarget {
  Place place;
  SymbolSum residue;
};

struct PlaceCheck {
  Place place;
  Verdict verdict;
};

struct PrescribeResult {
  SymbolSum zeta;
  // Every randomized choice, in order.
  std::vector<std::string> choices;
  // Residue comparisons at every finite place of the support.
  std::vector<PlaceCheck> checks;
  // No check came out NonZero.
  bool verified = false;
  // Every check came out Zero.
  bool fully_verified = false;
};

// zeta in K_n(F(t)) with the given residues at the target places and no
// residue at any other finite place. Over a ring A the lifts keep the
// generators feasible. Errors: kNotFound, kUnsupportedDomain,
// kDomainMismatch, kInvalidArgument.
PrescribeResult prescribe_residues(const RingPtr& ring, const FieldPtr& function_field,
                                   const std::vector<PrescribeTarget>& targets, std::size_t n,
                                   std::uint64_t seed = 0, const SymbolOptions& options = {});

// N_{L/F}(xi) for L = F[t]/(pi), as -(residue at infinity) of a prescribed
// element. trace receives the construction when given.
SymbolSum bass_tate_norm(const FieldPtr& base, const Poly& pi, const SymbolSum& xi,
                         std::uint64_t seed = 0, const SymbolOptions& options = {},
                         PrescribeResult* trace = nullptr);
// L is xi's field, a simple extension of its base.
SymbolSum bass_tate_norm(const SymbolSum& xi, std::uint64_t seed = 0,
                         const SymbolOptions& options = {});

struct DescentResult {
  SymbolSum xi_prime;
  bool units_ok = false;
  SymbolSum field_norm;
  Verdict verification;
  std::vector<std::string> choices;
};

// Norm of xi over B = A[t]/(pi) into K(A), checked against the field norm.
DescentResult norm_into_ring(const RingPtr& ring, const Poly& pi, const SymbolSum& xi,
                             std::uint64_t seed = 0, const SymbolOptions& options = {});

struct PreimageResult {
  SymbolSum xi;
  SymbolSum tau;
  Verdict verification;
  std::vector<DescentResult> steps;
};

// tower[i] is a polynomial in t_{i+1} over the fraction field of
// A[t_1, ..., t_i]/(pi_1, ..., pi_i). Errors: kTowerTooDeep, kNotFeasible.
PreimageResult milnor_preimage(const RingPtr& ring, const std::vector<Poly>& tower,
                               std::uint64_t seed = 0, const SymbolOptions& options = {});

// Sum over finite places of N(residue) plus the residue at infinity.
SymbolSum weil_reciprocity_sum(const SymbolSum& zeta, std::uint64_t seed = 0,
                               const SymbolOptions& options = {});

}  // namespace milnor

#endif  // MILNOR_KT_HPP_
