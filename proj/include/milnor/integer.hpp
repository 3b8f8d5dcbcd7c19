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

#ifndef MILNOR_INTEGER_HPP_
#define MILNOR_INTEGER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace milnor {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);
// Smallest prime >= n.
std::uint64_t next_prime_u64(std::uint64_t n);
// Trial division; intended for n below ~10^12.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

struct IntegerFactorization {
  int sign = 1;
  std::vector<std::pair<mpz_class, unsigned>> primes;
  // Cofactors that could not be split within the configured effort.
  std::vector<std::pair<mpz_class, unsigned>> unfactored;
};

inline constexpr std::uint64_t kDefaultPrimeBound = 1000000;

// Factor a nonzero integer: trial division up to prime_bound, then a
// primality test and Pollard-Brent rho on the cofactor.
IntegerFactorization factor_integer(const mpz_class& n,
                                    std::uint64_t prime_bound = kDefaultPrimeBound);

}  // namespace milnor

#endif  // MILNOR_INTEGER_HPP_
