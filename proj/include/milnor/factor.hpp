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

#ifndef MILNOR_FACTOR_HPP_
#define MILNOR_FACTOR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

struct FactorOptions {
  // Degree cap for factorization over Q.
  unsigned max_rational_degree = 12;
  // Over k(u), polynomials are split off by their roots; a rootless
  // remainder is only certified irreducible up to this degree.
  unsigned max_function_field_degree = 3;
  // Seed for the randomized splitting over finite fields. The output does
  // not depend on it.
  std::uint64_t seed = 0x6d696c6e6f72ULL;
};

// Factor into a unit and monic irreducibles in canonical order.
//   finite fields: squarefree + distinct-degree + equal-degree splitting
//   Q: modular factorization at a large prime with subset recombination
//   k(u): root extraction over k(u) (rational root theorem in k[u])
// Errors: kZeroPolynomial, kDegreeBoundExceeded, kUnsupportedDomain.
Factorization poly_factor(const Poly& p, const FactorOptions& options = {});

// Distinct roots of p in its coefficient field, canonical order.
std::vector<Value> poly_roots(const Poly& p, const FactorOptions& options = {});

// True if monic `modulus` is irreducible over `base`. Throws when it cannot
// be decided.
bool certify_irreducible(const Field& base, const Coeffs& modulus);

// Square test; nullopt when undecidable for the field.
std::optional<bool> is_square(const Field& f, const Value& a);

// Monic irreducible factorization over a finite field (exposed for tests).
std::vector<std::pair<Coeffs, unsigned>> factor_finite(const Field& f,
                                                       const Coeffs& monic_poly,
                                                       Rng& rng);

}  // namespace milnor

#endif  // MILNOR_FACTOR_HPP_
