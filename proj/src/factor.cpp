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

#include "milnor/factor.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "milnor/errors.hpp"
#include "milnor/integer.hpp"

namespace milnor {

namespace {

using namespace polyops;  // NOLINT

constexpr std::uint64_t kExhaustiveLimit = 1000000;
constexpr int kSplitAttempts = 64;
constexpr std::size_t kMaxDivisorCandidates = 20000;

void sort_factors(const Field& f, std::vector<std::pair<Coeffs, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [&f](const auto& a, const auto& b) {
    return polyops::compare(f, a.first, b.first) < 0;
  });
  // merge repeated factors
  std::vector<std::pair<Coeffs, unsigned>> merged;
  for (auto& fe : fs) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  fs = std::move(merged);
}

// ---- finite fields ----

Value pth_root(const Field& f, const Value& a) {
  mpz_class e = *f.size() / f.characteristic();
  return f.pow(a, e);
}

void squarefree_finite(const Field& f, const Coeffs& a, unsigned mult,
                       std::vector<std::pair<Coeffs, unsigned>>& out) {
  Coeffs c = gcd(f, a, derivative(f, a));
  Coeffs w = quo(f, a, c);
  unsigned i = 1;
  while (w.size() > 1) {
    Coeffs y = gcd(f, w, c);
    Coeffs fac = quo(f, w, y);
    if (fac.size() > 1) out.emplace_back(fac, i * mult);
    w = std::move(y);
    c = quo(f, c, w);
    ++i;
  }
  if (c.size() > 1) {
    const unsigned long p = f.characteristic().get_ui();
    Coeffs r;
    for (std::size_t k = 0; k * p < c.size(); ++k) r.push_back(pth_root(f, c[k * p]));
    trim(f, r);
    squarefree_finite(f, r, mult * static_cast<unsigned>(p), out);
  }
}

std::vector<std::pair<Coeffs, std::size_t>> distinct_degree(const Field& f,
                                                            Coeffs a) {
  std::vector<std::pair<Coeffs, std::size_t>> out;
  const mpz_class q = *f.size();
  Coeffs h = x(f);
  const Coeffs t = x(f);
  for (std::size_t i = 1; a.size() > 2 * i; ++i) {
    h = powmod(f, h, q, a);
    Coeffs g = gcd(f, a, sub(f, h, t));
    if (g.size() > 1) {
      out.emplace_back(g, i);
      a = quo(f, a, g);
      h = mod(f, h, a);
    }
  }
  if (a.size() > 1) out.emplace_back(a, a.size() - 1);
  return out;
}

Coeffs random_poly(const Field& f, std::size_t below_degree, Rng& rng) {
  Coeffs c;
  for (std::size_t i = 0; i < below_degree; ++i) c.push_back(f.random(rng));
  trim(f, c);
  return c;
}

bool exhaustive_split(const Field& f, const Coeffs& g, std::size_t d,
                      std::vector<Coeffs>& out) {
  const std::uint64_t q = f.size()->get_ui();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (count > kExhaustiveLimit / q) return false;
    count *= q;
  }
  Coeffs rest = g;
  for (std::uint64_t idx = 0; idx < count && rest.size() - 1 > d; ++idx) {
    Coeffs cand(d + 1, f.zero());
    std::uint64_t k = idx;
    for (std::size_t i = 0; i < d; ++i) {
      cand[i] = f.element_at(k % q);
      k /= q;
    }
    cand[d] = f.one();
    if (divides(f, cand, rest)) {
      out.push_back(cand);
      rest = quo(f, rest, cand);
    }
  }
  out.push_back(rest);
  return true;
}

void equal_degree(const Field& f, const Coeffs& g, std::size_t d, Rng& rng,
                  std::vector<Coeffs>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  const mpz_class q = *f.size();
  const bool char2 = f.characteristic() == 2;
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  const mpz_class half = (qd - 1) / 2;
  const std::size_t trace_len = char2 ? mpz_sizeinbase(q.get_mpz_t(), 2) - 1 : 0;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    Coeffs a = random_poly(f, n, rng);
    if (a.size() <= 1) continue;
    Coeffs b;
    if (char2) {
      Coeffs cur = a;
      b = a;
      for (std::size_t j = 1; j < trace_len * d; ++j) {
        cur = mulmod(f, cur, cur, g);
        b = add(f, b, cur);
      }
    } else {
      b = sub(f, powmod(f, a, half, g), constant(f, f.one()));
    }
    Coeffs h = gcd(f, g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(f, h, d, rng, out);
      equal_degree(f, quo(f, g, h), d, rng, out);
      return;
    }
  }
  std::vector<Coeffs> pieces;
  if (!exhaustive_split(f, g, d, pieces))
    fail(ErrorCode::kNotFound, "equal-degree splitting did not converge");
  for (auto& p : pieces) out.push_back(std::move(p));
}

// ---- rationals ----

using IntPoly = std::vector<mpz_class>;

Coeffs to_rational(const IntPoly& p) {
  Coeffs c;
  for (const auto& a : p) c.emplace_back(mpq_class(a));
  trim(*rationals(), c);
  return c;
}

// Primitive integer polynomial with positive leading coefficient.
IntPoly primitive_part(const Coeffs& a) {
  mpz_class den = 1;
  for (const auto& c : a) den = lcm(den, c.rational().get_den());
  IntPoly out;
  mpz_class content = 0;
  for (const auto& c : a) {
    mpq_class scaled = c.rational() * den;
    out.push_back(scaled.get_num());
    content = gcd(content, scaled.get_num());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

bool integer_divides(const IntPoly& d, const IntPoly& a, IntPoly& quotient) {
  const Field& q = *rationals();
  Coeffs qq, rr;
  divmod(q, to_rational(a), to_rational(d), qq, rr);
  if (!rr.empty()) return false;
  quotient.clear();
  for (const auto& c : qq) {
    if (c.rational().get_den() != 1) return false;
    quotient.push_back(c.rational().get_num());
  }
  return true;
}

std::vector<IntPoly> zassenhaus(IntPoly poly, const FactorOptions& options) {
  const std::size_t n = poly.size() - 1;
  if (n <= 1) return {poly};
  mpz_class norm2 = 0;
  for (const auto& c : poly) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  mpz_class bound = abs(poly.back()) * (mpz_class(1) << static_cast<unsigned>(n)) * (root + 1);
  mpz_class need = 2 * bound + 1;
  if (need >= (mpz_class(1) << 62))
    fail(ErrorCode::kDegreeBoundExceeded,
         "coefficient bound too large for modular factorization over Q");
  std::uint64_t p = next_prime_u64(std::max<std::uint64_t>(need.get_ui(), 3));
  FieldPtr fp;
  Coeffs reduced;
  for (;; p = next_prime_u64(p + 1)) {
    if (mpz_divisible_ui_p(poly.back().get_mpz_t(), p) != 0) continue;
    fp = prime_field(static_cast<std::int64_t>(p));
    reduced.clear();
    for (const auto& c : poly) reduced.push_back(fp->from_integer(c));
    trim(*fp, reduced);
    reduced = monic(*fp, reduced);
    if (gcd(*fp, reduced, derivative(*fp, reduced)).size() == 1) break;
  }
  Rng rng(options.seed);
  auto modular = factor_finite(*fp, reduced, rng);
  std::vector<Coeffs> pieces;
  for (auto& [c, e] : modular) pieces.push_back(c);
  if (pieces.size() == 1) return {poly};

  const mpz_class pz = p;
  auto lift = [&](const Coeffs& c) {
    IntPoly out;
    for (const auto& v : c) {
      mpz_class r = v.residue();
      if (r > pz / 2) r -= pz;
      out.push_back(r);
    }
    return out;
  };

  std::vector<IntPoly> result;
  std::vector<std::size_t> remaining(pieces.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    const std::size_t r = remaining.size();
    for (std::uint32_t mask = 1; mask < (1U << r) && !found; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
      Coeffs g = constant(*fp, fp->from_integer(poly.back()));
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1U << i)) g = mul(*fp, g, pieces[remaining[i]]);
      IntPoly cand = primitive_part(to_rational(lift(g)));
      IntPoly quotient;
      if (cand.size() > 1 && integer_divides(cand, poly, quotient)) {
        result.push_back(cand);
        poly = quotient;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < r; ++i)
          if (!(mask & (1U << i))) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
      }
    }
    if (!found) ++s;
  }
  if (poly.size() > 1) result.push_back(poly);
  return result;
}

std::vector<std::pair<Coeffs, unsigned>> squarefree_char0(const Field& f,
                                                          const Coeffs& a) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  Coeffs c = gcd(f, a, derivative(f, a));
  Coeffs w = quo(f, a, c);
  unsigned i = 1;
  while (w.size() > 1) {
    Coeffs y = gcd(f, w, c);
    Coeffs fac = quo(f, w, y);
    if (fac.size() > 1) out.emplace_back(fac, i);
    w = std::move(y);
    c = quo(f, c, w);
    ++i;
  }
  return out;
}

std::vector<std::pair<Coeffs, unsigned>> factor_rational(const Coeffs& monic_poly,
                                                         const FactorOptions& options) {
  const Field& q = *rationals();
  std::vector<std::pair<Coeffs, unsigned>> out;
  for (auto& [part, mult] : squarefree_char0(q, monic_poly)) {
    for (auto& ip : zassenhaus(primitive_part(part), options))
      out.emplace_back(monic(q, to_rational(ip)), mult);
  }
  return out;
}

// ---- rational function fields k(u) ----

std::vector<std::pair<Coeffs, unsigned>> factor_over(const Field& f, const Coeffs& monic_poly,
                                                     const FactorOptions& options);

std::vector<Coeffs> monic_divisors(const Field& k, const Coeffs& a,
                                   const FactorOptions& options) {
  auto fs = factor_over(k, monic(k, a), options);
  std::vector<Coeffs> out = {constant(k, k.one())};
  for (const auto& [p, e] : fs) {
    std::vector<Coeffs> next;
    for (const auto& d : out) {
      Coeffs cur = d;
      next.push_back(cur);
      for (unsigned i = 0; i < e; ++i) {
        cur = mul(k, cur, p);
        next.push_back(cur);
      }
    }
    out = std::move(next);
    if (out.size() > kMaxDivisorCandidates)
      fail(ErrorCode::kDegreeBoundExceeded, "too many divisor candidates in root search");
  }
  return out;
}

// Roots of g(lambda) in k.
std::vector<Value> roots_in(const Field& k, const Coeffs& g,
                            const FactorOptions& options) {
  std::vector<Value> out;
  for (const auto& [p, e] : factor_over(k, monic(k, g), options))
    if (p.size() == 2) out.push_back(k.neg(p[0]));
  return out;
}

// A root in k(u) of a polynomial with nonzero constant term, or nullopt.
std::optional<Value> function_field_root(const Field& ff, const Coeffs& a,
                                         const FactorOptions& options) {
  const Field& k = *ff.base();
  // clear denominators: F_i in k[u]
  Coeffs l = constant(k, k.one());
  for (const auto& c : a) {
    const auto& den = c.frac().den;
    l = quo(k, mul(k, l, den), gcd(k, l, den));
  }
  std::vector<Coeffs> big;
  for (const auto& c : a) big.push_back(mul(k, c.frac().num, quo(k, l, c.frac().den)));
  const std::size_t n = big.size() - 1;
  auto tops = monic_divisors(k, big[0], options);
  auto bottoms = monic_divisors(k, big[n], options);
  if (tops.size() * bottoms.size() > kMaxDivisorCandidates)
    fail(ErrorCode::kDegreeBoundExceeded, "too many rational-root candidates over " + ff.describe());
  for (const auto& a0 : tops) {
    std::vector<Coeffs> apow = {constant(k, k.one())};
    for (std::size_t i = 1; i <= n; ++i) apow.push_back(mul(k, apow.back(), a0));
    for (const auto& b0 : bottoms) {
      if (gcd(k, a0, b0).size() != 1) continue;
      std::vector<Coeffs> bpow = {constant(k, k.one())};
      for (std::size_t i = 1; i <= n; ++i) bpow.push_back(mul(k, bpow.back(), b0));
      std::vector<Coeffs> h;
      std::size_t max_u = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        h.push_back(mul(k, mul(k, big[i], apow[i]), bpow[n - i]));
        if (!h.back().empty()) max_u = std::max(max_u, h.back().size() - 1);
      }
      Coeffs g;
      for (std::size_t j = 0; j <= max_u && g.size() != 1; ++j) {
        Coeffs gj;
        for (std::size_t i = 0; i <= n; ++i)
          gj.push_back(j < h[i].size() ? h[i][j] : k.zero());
        trim(k, gj);
        g = gcd(k, g, gj);
      }
      if (g.size() <= 1) continue;
      for (const auto& lambda : roots_in(k, g, options)) {
        if (k.is_zero(lambda)) continue;
        Value num = Value(FracRep{scale(k, a0, lambda), constant(k, k.one())});
        Value den = Value(FracRep{b0, constant(k, k.one())});
        Value r = ff.div(num, den);
        if (ff.is_zero(eval(ff, a, r))) return r;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Coeffs, unsigned>> factor_function_field(
    const Field& ff, Coeffs a, const FactorOptions& options) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  while (a.size() > 1) {
    if (ff.is_zero(a[0])) {
      out.emplace_back(x(ff), 1);
      a.erase(a.begin());
      continue;
    }
    if (a.size() == 2) {
      out.emplace_back(a, 1);
      a = constant(ff, ff.one());
      break;
    }
    auto root = function_field_root(ff, a, options);
    if (!root) break;
    Coeffs lin = {ff.neg(*root), ff.one()};
    out.emplace_back(lin, 1);
    a = quo(ff, a, lin);
  }
  if (a.size() > 1) {
    if (a.size() - 1 > options.max_function_field_degree)
      fail(ErrorCode::kDegreeBoundExceeded,
           "rootless factor of degree " + std::to_string(a.size() - 1) +
               " over " + ff.describe() + " exceeds the certified bound");
    out.emplace_back(a, 1);
  }
  return out;
}

std::vector<std::pair<Coeffs, unsigned>> factor_quadratic_generic(const Field& f,
                                                                  const Coeffs& a) {
  if (a.size() == 3 && f.characteristic() != 2) {
    Value disc = f.sub(f.mul(a[1], a[1]), f.mul(f.from_int(4), a[0]));
    auto sq = is_square(f, disc);
    if (sq.has_value() && !*sq) return {{a, 1}};
  }
  fail(ErrorCode::kUnsupportedDomain,
       "cannot factor degree-" + std::to_string(a.size() - 1) + " polynomial over " +
           f.describe());
}

std::vector<std::pair<Coeffs, unsigned>> factor_over(const Field& f, const Coeffs& a,
                                                     const FactorOptions& options) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  if (a.size() <= 1) return out;
  if (a.size() == 2) {
    out.emplace_back(a, 1);
    return out;
  }
  if (f.is_finite()) {
    Rng rng(options.seed);
    out = factor_finite(f, a, rng);
  } else if (f.kind() == FieldKind::kRationals) {
    if (a.size() - 1 > options.max_rational_degree)
      fail(ErrorCode::kDegreeBoundExceeded,
           "degree " + std::to_string(a.size() - 1) + " exceeds the Q factorization bound " +
               std::to_string(options.max_rational_degree));
    out = factor_rational(a, options);
  } else if (f.kind() == FieldKind::kRationalFunction) {
    out = factor_function_field(f, a, options);
  } else {
    out = factor_quadratic_generic(f, a);
  }
  sort_factors(f, out);
  return out;
}

}  // namespace

std::vector<std::pair<Coeffs, unsigned>> factor_finite(const Field& f,
                                                       const Coeffs& monic_poly,
                                                       Rng& rng) {
  std::vector<std::pair<Coeffs, unsigned>> sqf;
  squarefree_finite(f, monic_poly, 1, sqf);
  std::vector<std::pair<Coeffs, unsigned>> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(f, part)) {
      std::vector<Coeffs> pieces;
      equal_degree(f, g, d, rng, pieces);
      for (auto& pc : pieces) out.emplace_back(std::move(pc), mult);
    }
  }
  sort_factors(f, out);
  return out;
}

Factorization poly_factor(const Poly& p, const FactorOptions& options) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "cannot factor the zero polynomial");
  const Field& f = *p.field();
  Factorization out{p.field(), p.lead(), {}};
  for (auto& [c, e] : factor_over(f, p.monic().coeffs(), options))
    out.factors.emplace_back(Poly(p.field(), std::move(c), p.var()), e);
  return out;
}

std::vector<Value> poly_roots(const Poly& p, const FactorOptions& options) {
  std::vector<Value> out;
  for (const auto& [fac, e] : poly_factor(p, options).factors)
    if (fac.degree() == 1) out.push_back(p.field()->neg(fac.coeff(0)));
  return out;
}

bool certify_irreducible(const Field& base, const Coeffs& modulus) {
  if (modulus.size() <= 2) return modulus.size() == 2;
  auto fs = factor_over(base, monic(base, modulus), FactorOptions{});
  return fs.size() == 1 && fs[0].second == 1;
}

std::optional<bool> is_square(const Field& f, const Value& a) {
  if (f.is_zero(a)) return true;
  if (f.is_finite()) {
    if (f.characteristic() == 2) return true;
    return f.is_one(f.pow(a, (*f.size() - 1) / 2));
  }
  switch (f.kind()) {
    case FieldKind::kRationals: {
      const mpq_class& q = a.rational();
      return q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
             mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
    }
    case FieldKind::kRationalFunction: {
      const Field& k = *f.base();
      try {
        const auto& fr = a.frac();
        for (const auto* part : {&fr.num, &fr.den})
          for (const auto& [p, e] : factor_over(k, monic(k, *part), FactorOptions{}))
            if (e % 2 != 0) return false;
        return is_square(k, lead(fr.num));
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    case FieldKind::kExtension: {
      const Field& k = *f.base();
      Poly m(f.base(), f.modulus());
      Poly rep(f.base(), a.ext().coeffs);
      auto s = is_square(k, mult_matrix_det(m, rep));
      if (s.has_value() && !*s) return false;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace milnor
