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

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls the library's factoring, resultant or determinant code.

#ifndef MILNOR_TESTS_SUPPORT_HPP_
#define MILNOR_TESTS_SUPPORT_HPP_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "milnor/chow.hpp"
#include "milnor/kt.hpp"

namespace support {

using namespace milnor;

inline Value qv(long n, long d = 1) {
  mpq_class v(n, d);
  v.canonicalize();
  return Value(v);
}

inline Poly poly(const FieldPtr& f, const std::vector<long>& c, const std::string& var = "t") {
  Coeffs out;
  for (long x : c) out.push_back(f->from_int(x));
  return Poly(f, out, var);
}

// Element p(t)/q(t) of the rational function field ft.
inline Value fn(const FieldPtr& ft, const Poly& num, const Poly& den) {
  return make_fraction(*ft, num.coeffs(), den.coeffs());
}
inline Value fn(const FieldPtr& ft, const Poly& num) {
  return fn(ft, num, Poly::constant(ft->base(), ft->base()->one()));
}

// Integer coefficients mod p, low degree first; p prime and small.
using IntPoly = std::vector<long>;

inline IntPoly int_trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline IntPoly int_mod(IntPoly a, const IntPoly& b, long p) {
  a = int_trim(a);
  long inv = 1;
  for (long e = p - 2, base = b.back() % p; e > 0; e >>= 1, base = base * base % p)
    if (e & 1) inv = inv * base % p;
  while (a.size() >= b.size()) {
    long c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = int_trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree <= deg/2.
inline bool brute_irreducible(const IntPoly& f, long p) {
  const std::size_t d = f.size() - 1;
  if (d <= 0) return false;
  for (std::size_t e = 1; 2 * e <= d; ++e) {
    long count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      IntPoly g(e + 1, 0);
      g[e] = 1;
      long r = idx;
      for (std::size_t i = 0; i < e; ++i, r /= p) g[i] = r % p;
      if (int_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Random monic irreducible of degree d over F_p, by rejection.
inline Poly random_irreducible_fp(const FieldPtr& f, long p, std::size_t d, Rng& rng,
                                  const std::string& var = "t") {
  std::uniform_int_distribution<long> coef(0, p - 1);
  for (;;) {
    IntPoly c(d + 1, 0);
    c[d] = 1;
    for (std::size_t i = 0; i < d; ++i) c[i] = coef(rng);
    if (brute_irreducible(c, p)) return poly(f, c, var);
  }
}

// Monic Eisenstein polynomial at 2 over Q, hence irreducible; degree 1 is t - a.
inline Poly random_eisenstein(const FieldPtr& q, std::size_t d, Rng& rng,
                              const std::string& var = "t") {
  std::uniform_int_distribution<long> small(-3, 3);
  IntPoly c(d + 1, 0);
  c[d] = 1;
  if (d == 1) {
    c[0] = small(rng);
    return poly(q, c, var);
  }
  for (std::size_t i = 1; i < d; ++i) c[i] = 2 * small(rng);
  long odd = 2 * small(rng) + 1;
  c[0] = 2 * odd;
  return poly(q, c, var);
}

// Monic quadratic or cubic over Q without a rational root.
inline bool rational_root_free(const IntPoly& c) {
  // Monic integer polynomial: rational roots are integer divisors of c[0].
  if (c[0] == 0) return false;
  long a0 = c[0] < 0 ? -c[0] : c[0];
  for (long r = 1; r <= a0; ++r) {
    if (a0 % r != 0) continue;
    for (long s : {r, -r}) {
      long v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * s + c[i];
      if (v == 0) return false;
    }
  }
  return true;
}

inline Poly random_irreducible_q(const FieldPtr& q, std::size_t d, Rng& rng,
                                 const std::string& var = "t") {
  if (d == 1 || d > 3 || rng() % 2 == 0) return random_eisenstein(q, d, rng, var);
  std::uniform_int_distribution<long> small(-4, 4);
  for (;;) {
    IntPoly c(d + 1, 0);
    c[d] = 1;
    for (std::size_t i = 0; i < d; ++i) c[i] = small(rng);
    if (rational_root_free(c)) return poly(q, c, var);
  }
}

inline Poly random_irreducible(const FieldPtr& f, std::size_t d, Rng& rng,
                               const std::string& var = "t") {
  if (f->kind() == FieldKind::kRationals) return random_irreducible_q(f, d, rng, var);
  return random_irreducible_fp(f, static_cast<long>(f->characteristic().get_si()), d, rng, var);
}

// Small random element: residues for F_p, small fractions for Q.
inline Value small_value(const Field& f, Rng& rng) {
  if (f.kind() == FieldKind::kRationals) {
    std::uniform_int_distribution<long> n(-6, 6), d(1, 3);
    mpq_class v(n(rng), d(rng));
    v.canonicalize();
    return Value(v);
  }
  return f.random(rng);
}

inline Value small_nonzero(const Field& f, Rng& rng) {
  for (;;) {
    Value v = small_value(f, rng);
    if (!f.is_zero(v)) return v;
  }
}

inline Poly random_poly(const FieldPtr& f, std::size_t d, Rng& rng, const std::string& var = "t") {
  Coeffs c;
  for (std::size_t i = 0; i <= d; ++i) c.push_back(small_value(*f, rng));
  c.back() = small_nonzero(*f, rng);
  return Poly(f, c, var);
}

// Gaussian elimination written out here so the library's determinant is
// never its own oracle.
inline Value gauss_det(const Field& f, std::vector<std::vector<Value>> m) {
  const std::size_t n = m.size();
  Value det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(m[piv][col])) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    Value inv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Value c = f.mul(m[r][col], inv);
      if (f.is_zero(c)) continue;
      for (std::size_t k = col; k < n; ++k) m[r][k] = f.sub(m[r][k], f.mul(c, m[col][k]));
    }
  }
  return det;
}

// Leibniz expansion; fine up to 6x6.
inline Value leibniz_det(const Field& f, const std::vector<std::vector<Value>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Value total = f.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Value term = f.one();
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Value sylvester_resultant(const Poly& p, const Poly& q) {
  const Field& f = *p.field();
  const std::size_t m = p.degree(), n = q.degree();
  const std::size_t size = m + n;
  if (size == 0) return f.one();
  std::vector<std::vector<Value>> s(size, std::vector<Value>(size, f.zero()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = p.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = q.coeff(n - i);
  return gauss_det(f, s);
}

// Matrix of multiplication by x on F[t]/(pi) in the power basis; column j is
// x * t^j reduced, computed by hand-rolled reduction.
inline std::vector<std::vector<Value>> mult_matrix(const Poly& pi, const Poly& x) {
  const Field& f = *pi.field();
  const std::size_t d = pi.degree();
  std::vector<std::vector<Value>> m(d, std::vector<Value>(d, f.zero()));
  std::vector<Value> cur(d, f.zero());
  for (std::size_t i = 0; i < d; ++i) cur[i] = x.coeff(i);
  // Reduce x itself first: x may have degree >= d.
  std::vector<Value> full;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) full.push_back(x.coeff(i));
  for (std::size_t top = full.size(); top-- > d;) {
    Value c = full[top];
    full[top] = f.zero();
    for (std::size_t i = 0; i < d; ++i)
      full[top - d + i] = f.sub(full[top - d + i], f.mul(c, pi.coeff(i)));
  }
  for (std::size_t i = 0; i < d; ++i) cur[i] = i < full.size() ? full[i] : f.zero();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cur[i];
    Value carry = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = f.zero();
    for (std::size_t i = 0; i < d; ++i) cur[i] = f.sub(cur[i], f.mul(carry, pi.coeff(i)));
  }
  return m;
}

// Value of a degree-1 sum in F^x: product of entries to their coefficients.
inline Value k1_product(const SymbolSum& s) {
  const Field& f = *s.field();
  Value out = f.one();
  for (const auto& [t, c] : s.terms()) out = f.mul(out, f.pow(t.at(0), c));
  return out;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace support

#ifdef DOCTEST_VERSION_STR
namespace doctest {
template <>
struct StringMaker<milnor::SymbolSum> {
  static String convert(const milnor::SymbolSum& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<milnor::Poly> {
  static String convert(const milnor::Poly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
#endif

#endif  // MILNOR_TESTS_SUPPORT_HPP_
