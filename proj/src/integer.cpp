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

#include "milnor/integer.hpp"

#include <algorithm>
#include <map>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

constexpr unsigned kMaxRhoIterations = 2000000;

// Pollard-Brent; returns a nontrivial factor or 0.
mpz_class rho(const mpz_class& n, unsigned long c) {
  mpz_class y = 2, x, g = 1, q = 1, ys;
  unsigned long r = 1, m = 128, iterations = 0;
  auto step = [&](const mpz_class& v) {
    mpz_class w = v * v + c;
    return mpz_class(w % n);
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = step(y);
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
      k += m;
      iterations += lim;
      if (iterations > kMaxRhoIterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split(const mpz_class& n, unsigned mult,
           std::map<mpz_class, unsigned>& primes,
           std::map<mpz_class, unsigned>& unfactored) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    primes[n] += mult;
    return;
  }
  for (unsigned long c = 1; c < 8; ++c) {
    mpz_class d = rho(n, c);
    if (d != 0) {
      mpz_class e = n / d;
      split(d, mult, primes, unfactored);
      split(e, mult, primes, unfactored);
      return;
    }
  }
  unfactored[n] += mult;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1U) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

IntegerFactorization factor_integer(const mpz_class& n,
                                    std::uint64_t prime_bound) {
  if (n == 0) fail(ErrorCode::kZeroArgument, "cannot factor 0");
  IntegerFactorization out;
  out.sign = n < 0 ? -1 : 1;
  mpz_class m = abs(n);
  for (std::uint64_t p = 2; p <= prime_bound && mpz_class(p) * p <= m;
       p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++e;
    }
    out.primes.emplace_back(mpz_class(p), e);
  }
  if (m == 1) return out;
  mpz_class bound = prime_bound;
  if (m <= bound * bound) {
    out.primes.emplace_back(m, 1);
    return out;
  }
  std::map<mpz_class, unsigned> primes, unfactored;
  split(m, 1, primes, unfactored);
  for (auto& [p, e] : primes) out.primes.emplace_back(p, e);
  for (auto& [p, e] : unfactored) out.unfactored.emplace_back(p, e);
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

}  // namespace milnor
