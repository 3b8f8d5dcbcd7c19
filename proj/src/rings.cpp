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

#include "milnor/rings.hpp"

#include "milnor/errors.hpp"
#include "milnor/factor.hpp"

namespace milnor {

namespace {

constexpr int kUnitSampleAttempts = 1000;

Coeffs one_poly(const Field& k) { return polyops::constant(k, k.one()); }

}  // namespace

int poly_valuation(const Field& f, Coeffs a, const Coeffs& pi) {
  if (a.empty()) fail(ErrorCode::kZeroPolynomial, "valuation of zero");
  int v = 0;
  for (;;) {
    Coeffs q, r;
    polyops::divmod(f, a, pi, q, r);
    if (!r.empty()) return v;
    a = std::move(q);
    ++v;
  }
}

Value Ring::sample_unit(Rng& rng) const {
  for (int i = 0; i < kUnitSampleAttempts; ++i) {
    Value v = sample(rng);
    if (is_unit(v)) return v;
  }
  return fraction_field()->one();
}

bool Ring::contains(const Poly& p) const {
  for (const auto& c : p.coeffs())
    if (!contains(c)) return false;
  return true;
}

// ---- LocalizedRing ----

LocalizedRing::LocalizedRing(FieldPtr k, std::string var, std::vector<Coeffs> primes)
    : k_(std::move(k)), var_(std::move(var)), primes_(std::move(primes)) {
  if (k_->kind() != FieldKind::kPrime && k_->kind() != FieldKind::kRationals)
    fail(ErrorCode::kUnsupportedDomain,
         "localizations are supported over prime fields and Q, got " + k_->describe());
  if (primes_.empty())
    fail(ErrorCode::kInvalidArgument, "localization needs at least one prime");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    polyops::trim(*k_, primes_[i]);
    const auto& p = primes_[i];
    if (p.size() < 2 || !k_->is_one(p.back()))
      fail(ErrorCode::kInvalidArgument,
           polyops::format(*k_, p, var_) + " is not monic of positive degree");
    if (!certify_irreducible(*k_, p))
      fail(ErrorCode::kNotIrreducible, polyops::format(*k_, p, var_) + " is reducible");
    for (std::size_t j = 0; j < i; ++j)
      if (primes_[j] == p)
        fail(ErrorCode::kInvalidArgument, "repeated localization prime");
  }
  fraction_ = rational_functions(k_, var_);
}

std::string LocalizedRing::describe() const {
  std::string s = k_->describe() + "[" + var_ + "]@loc[";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) s += ", ";
    s += polyops::format(*k_, primes_[i], var_);
  }
  return s + "]";
}

bool LocalizedRing::contains(const Value& x) const {
  const auto& den = x.frac().den;
  for (const auto& p : primes_)
    if (polyops::divides(*k_, p, den)) return false;
  return true;
}

bool LocalizedRing::is_unit(const Value& x) const {
  const auto& f = x.frac();
  if (f.num.empty()) return false;
  for (const auto& p : primes_)
    if (polyops::divides(*k_, p, f.den) || polyops::divides(*k_, p, f.num)) return false;
  return true;
}

Value LocalizedRing::sample(Rng& rng) const {
  Coeffs num;
  const std::size_t deg = rng() % 3;
  for (std::size_t i = 0; i <= deg; ++i) num.push_back(k_->random(rng));
  polyops::trim(*k_, num);
  Coeffs den = one_poly(*k_);
  if (rng() % 3 == 0) {
    Coeffs cand = {k_->random(rng), k_->one()};
    bool ok = true;
    for (const auto& p : primes_)
      if (polyops::gcd(*k_, cand, p).size() > 1) ok = false;
    if (ok) den = cand;
  }
  return make_fraction(*fraction_, std::move(num), std::move(den));
}

int LocalizedRing::valuation(const Value& x, std::size_t j) const {
  const auto& f = x.frac();
  return poly_valuation(*k_, f.num, primes_[j]) - poly_valuation(*k_, f.den, primes_[j]);
}

// ---- QuotientRing ----

QuotientRing::QuotientRing(RingPtr base, Poly pi, bool verify)
    : base_(std::move(base)), pi_(std::move(pi)) {
  fraction_ = extension(base_->fraction_field(), pi_.coeffs(), pi_.var(), verify);
}

std::string QuotientRing::describe() const {
  return base_->describe() + "[" + pi_.var() + "]/(" + pi_.to_string() + ")";
}

bool QuotientRing::contains(const Value& x) const {
  for (const auto& c : x.ext().coeffs)
    if (!base_->contains(c)) return false;
  return true;
}

Value QuotientRing::norm(const Value& x) const {
  return mult_matrix_det(pi_, Poly(pi_.field(), x.ext().coeffs, pi_.var()));
}

bool QuotientRing::is_unit(const Value& x) const {
  if (fraction_->is_zero(x) || !contains(x)) return false;
  return base_->is_unit(norm(x));
}

Value QuotientRing::sample(Rng& rng) const {
  Coeffs c;
  for (std::size_t i = 0; i < pi_.degree(); ++i) c.push_back(base_->sample(rng));
  return make_ext(*fraction_, std::move(c));
}

RingPtr field_ring(FieldPtr field) { return std::make_shared<FieldRing>(std::move(field)); }

RingPtr localized_ring(FieldPtr k, const std::string& var, std::vector<Coeffs> primes) {
  return std::make_shared<LocalizedRing>(std::move(k), var, std::move(primes));
}

RingPtr residue_ring(const RingPtr& base, const Poly& pi, bool verify) {
  if (pi.is_zero() || pi.degree() == 0)
    fail(ErrorCode::kInvalidArgument, "residue ring needs a polynomial of positive degree");
  if (!base->contains(pi))
    fail(ErrorCode::kUnsupportedCoefficients,
         pi.to_string() + " has coefficients outside " + base->describe());
  if (!base->is_unit(pi.lead()))
    fail(ErrorCode::kLeadingCoeffNotUnit,
         "leading coefficient of " + pi.to_string() + " is not a unit of " + base->describe());
  if (pi.degree() == 1) return base;
  return std::make_shared<QuotientRing>(base, pi.monic(), verify);
}

// ---- ResidueMap ----

ResidueMap::ResidueMap(FieldPtr base, Poly pi, bool verify)
    : base_(std::move(base)), pi_(pi.monic()) {
  if (pi_.degree() == 0)
    fail(ErrorCode::kInvalidArgument, "a place needs a polynomial of positive degree");
  if (pi_.degree() == 1) {
    kappa_ = base_;
    root_ = base_->neg(pi_.coeff(0));
  } else {
    kappa_ = extension(base_, pi_.coeffs(), pi_.var(), verify);
  }
}

Value ResidueMap::reduce_poly(const Coeffs& p) const {
  if (pi_.degree() == 1) return polyops::eval(*base_, p, root_);
  return make_ext(*kappa_, p);
}

Value ResidueMap::reduce(const FracRep& f) const {
  Value d = reduce_poly(f.den);
  if (kappa_->is_zero(d))
    fail(ErrorCode::kNotCoprime, "denominator vanishes at " + pi_.to_string());
  return kappa_->div(reduce_poly(f.num), d);
}

Coeffs ResidueMap::lift(const Value& v) const {
  if (pi_.degree() == 1) return polyops::constant(*base_, v);
  return v.ext().coeffs;
}

// ---- factorization in A[t] ----

Poly RingFactorization::expand() const {
  const FieldPtr& f = ring->fraction_field();
  std::string var = factors.empty() ? "t" : factors.front().first.var();
  Value c = unit;
  for (const auto& [p, e] : content)
    c = f->mul(c, f->pow(make_poly_value(*f, p), mpz_class(e)));
  Poly out = Poly::constant(f, c, var);
  for (const auto& [p, e] : factors) out = out * p.pow(e);
  return out;
}

RingFactorization ring_factor(const RingPtr& ring, const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "cannot factor the zero polynomial");
  if (!ring->contains(p))
    fail(ErrorCode::kUnsupportedCoefficients,
         p.to_string() + " has coefficients outside " + ring->describe());
  const FieldPtr& f = ring->fraction_field();
  Factorization over = poly_factor(p);
  RingFactorization out{ring, over.unit, {}, {}};
  const auto* loc = dynamic_cast<const LocalizedRing*>(ring.get());
  if (loc == nullptr) {
    out.factors = std::move(over.factors);
    return out;
  }
  const auto& primes = loc->primes();
  // r collects the constant left after making each factor content-free.
  Value r = over.unit;
  for (auto& [g, e] : over.factors) {
    Value scale = f->one();
    for (std::size_t j = 0; j < primes.size(); ++j) {
      int m = 0;
      bool first = true;
      for (const auto& c : g.coeffs()) {
        if (f->is_zero(c)) continue;
        int v = loc->valuation(c, j);
        if (first || v < m) m = v;
        first = false;
      }
      if (m != 0) {
        Value pj = make_poly_value(*f, primes[j]);
        scale = f->mul(scale, f->pow(pj, mpz_class(-m)));
        r = f->mul(r, f->pow(pj, mpz_class(static_cast<long>(m) * e)));
      }
    }
    out.factors.emplace_back(g * scale, e);
  }
  for (std::size_t j = 0; j < primes.size(); ++j) {
    int v = loc->valuation(r, j);
    if (v < 0)
      fail(ErrorCode::kUnsupportedCoefficients, "negative content valuation");
    if (v > 0) {
      out.content.emplace_back(primes[j], static_cast<unsigned>(v));
      r = f->div(r, f->pow(make_poly_value(*f, primes[j]), mpz_class(v)));
    }
  }
  out.unit = r;
  return out;
}

bool comaximal(const Ring& ring, const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return false;
  if (p.degree() == 0 && q.degree() == 0) {
    if (ring.is_unit(p.lead()) || ring.is_unit(q.lead())) return true;
    if (const auto* loc = dynamic_cast<const LocalizedRing*>(&ring)) {
      for (std::size_t j = 0; j < loc->primes().size(); ++j)
        if (loc->valuation(p.lead(), j) > 0 && loc->valuation(q.lead(), j) > 0) return false;
      return true;
    }
    return false;
  }
  return ring.is_unit(resultant(p, q));
}

}  // namespace milnor
