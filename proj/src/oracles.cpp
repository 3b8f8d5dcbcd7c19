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

#include "milnor/oracles.hpp"

#include <set>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

bool constant_field_finite(const Field& f) {
  return f.kind() == FieldKind::kRationalFunction && f.base()->is_finite();
}

Verdict k1_verdict(const SymbolSum& zeta) {
  const Field& f = *zeta.field();
  Value x = k1_value(zeta);
  if (f.is_one(x)) return Verdict::zero();
  return Verdict::nonzero("product of entries", "{" + f.format(x) + "}");
}

// Valuation of a nonzero rational at p.
long qval(const mpq_class& a, const mpz_class& p) {
  long v = 0;
  mpz_class n = a.get_num(), d = a.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0) {
    d /= p;
    --v;
  }
  return v;
}

mpq_class qpow(const mpq_class& a, long e) {
  mpq_class base = e < 0 ? mpq_class(1 / a) : a;
  mpq_class r = 1;
  for (long k = std::labs(e); k > 0; --k) r *= base;
  return r;
}

Verdict k2_rationals(const SymbolSum& zeta, const SymbolOptions& options) {
  std::set<mpz_class> primes;
  for (const auto& [t, c] : zeta.terms()) {
    for (const auto& v : t) {
      for (const mpz_class& n : {v.rational().get_num(), v.rational().get_den()}) {
        if (n == 0) continue;
        auto fac = factor_integer(n, options.prime_bound);
        if (!fac.unfactored.empty())
          return Verdict::undecidable("could not factor " + fac.unfactored[0].first.get_str());
        for (const auto& [p, e] : fac.primes)
          if (p != 2) primes.insert(p);
      }
    }
  }
  for (const auto& p : primes) {
    mpz_class acc = 1;
    for (const auto& [t, c] : zeta.terms()) {
      const mpq_class& a = t[0].rational();
      const mpq_class& b = t[1].rational();
      const long va = qval(a, p), vb = qval(b, p);
      if (va == 0 && vb == 0) continue;
      mpq_class x = qpow(b, va) * qpow(a, -vb);
      if ((va * vb) % 2 != 0) x = -x;
      mpz_class num = x.get_num() % p, den = x.get_den() % p, inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = num * inv % p;
      if (r < 0) r += p;
      mpz_class e = c % (p - 1);
      if (e < 0) e += p - 1;
      mpz_powm(r.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      acc = acc * r % p;
    }
    if (acc != 1)
      return Verdict::nonzero("tame symbol at " + p.get_str(), "{" + acc.get_str() + "}");
  }
  int sign = 1;
  for (const auto& [t, c] : zeta.terms()) {
    if (hilbert_real(t[0].rational(), t[1].rational()) == -1 && mpz_odd_p(c.get_mpz_t()))
      sign = -sign;
  }
  if (sign == -1) return Verdict::nonzero("real Hilbert symbol", "-1");
  return Verdict::zero();
}

Verdict function_field_finite(const FieldPtr& domain, std::size_t n, const SymbolSum& zeta,
                              const SymbolOptions& options) {
  for (const auto& place : residue_support(zeta, options)) {
    if (place.is_infinity()) continue;
    PlaceResidue pr(domain, place, false);
    SymbolSum r = tame_symbol(zeta, pr, TameRoute::kPerTuple, options);
    Verdict v = eq_zero(pr.field(), n - 1, r, options);
    if (v.is_nonzero()) {
      std::string value = r.to_string();
      if (n == 2) value = "{" + pr.field()->format(k1_value(r)) + "}";
      return Verdict::nonzero("tame symbol at " + place.to_string(), value);
    }
    if (v.is_undecidable()) return v;
  }
  return Verdict::zero();
}

}  // namespace

std::string Verdict::kind_name() const {
  switch (kind) {
    case Kind::kZero: return "Zero";
    case Kind::kNonZero: return "NonZero";
    default: return "Undecidable";
  }
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::kZero: return "Zero";
    case Kind::kNonZero: return "NonZero(" + witness + " = " + value + ")";
    default: return "Undecidable(" + reason + ")";
  }
}

Value k1_value(const SymbolSum& zeta) {
  const Field& f = *zeta.field();
  if (zeta.degree() != 1 && !zeta.is_zero())
    fail(ErrorCode::kInvalidArgument, "K_1 value of a degree-" +
                                          std::to_string(zeta.degree()) + " element");
  Value x = f.one();
  for (const auto& [t, c] : zeta.terms()) x = f.mul(x, f.pow(t[0], c));
  return x;
}

int hilbert_real(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) fail(ErrorCode::kZeroArgument, "Hilbert symbol of 0");
  return a < 0 && b < 0 ? -1 : 1;
}

std::uint64_t k1_discrete_log(const Field& f, const Value& a, std::uint64_t max_size) {
  return FiniteFieldLog::get(f, max_size)->log(a);
}

Verdict eq_zero(const FieldPtr& domain, std::size_t n, const SymbolSum& zeta,
                const SymbolOptions& options) {
  if (!zeta.field()->same_as(*domain))
    return Verdict::undecidable("symbol is over " + zeta.field()->describe() + ", not " +
                                domain->describe());
  if (zeta.is_zero()) return Verdict::zero();
  if (zeta.degree() != n)
    return Verdict::undecidable("symbol has degree " + std::to_string(zeta.degree()));
  try {
    if (n == 0) return Verdict::nonzero("integer", zeta.terms().begin()->second.get_str());
    if (n == 1) return k1_verdict(zeta);
    if (domain->is_finite()) return Verdict::zero();
    if (domain->kind() == FieldKind::kRationals && n == 2) return k2_rationals(zeta, options);
    if (constant_field_finite(*domain)) return function_field_finite(domain, n, zeta, options);
  } catch (const Error& e) {
    return Verdict::undecidable(e.what());
  }
  return Verdict::undecidable("no decision procedure for K_" + std::to_string(n) + "(" +
                              domain->describe() + ")");
}

Verdict eq_equal(const FieldPtr& domain, std::size_t n, const SymbolSum& a,
                 const SymbolSum& b, const SymbolOptions& options) {
  return eq_zero(domain, n, a - b, options);
}

}  // namespace milnor
