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

// Coefficient rings: fields, semi-local localizations of k[u], and their
// finite quotients A[t]/(pi). Elements live in the fraction field.

#ifndef MILNOR_RINGS_HPP_
#define MILNOR_RINGS_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  virtual ~Ring() = default;

  virtual const FieldPtr& fraction_field() const = 0;
  virtual std::string describe() const = 0;
  virtual bool is_field() const { return false; }
  // Membership of a fraction-field element.
  virtual bool contains(const Value& x) const = 0;
  virtual bool is_unit(const Value& x) const = 0;
  // A small random element of the ring (may be zero).
  virtual Value sample(Rng& rng) const = 0;

  Value sample_unit(Rng& rng) const;
  bool contains(const Poly& p) const;
};

class FieldRing final : public Ring {
 public:
  explicit FieldRing(FieldPtr field) : field_(std::move(field)) {}
  const FieldPtr& fraction_field() const override { return field_; }
  std::string describe() const override { return field_->describe(); }
  bool is_field() const override { return true; }
  bool contains(const Value&) const override { return true; }
  bool is_unit(const Value& x) const override { return !field_->is_zero(x); }
  Value sample(Rng& rng) const override { return field_->random(rng); }

 private:
  FieldPtr field_;
};

// k[u] localized at the complement of the union of (pi_1), ..., (pi_m).
class LocalizedRing final : public Ring {
 public:
  LocalizedRing(FieldPtr k, std::string var, std::vector<Coeffs> primes);

  const FieldPtr& fraction_field() const override { return fraction_; }
  std::string describe() const override;
  bool contains(const Value& x) const override;
  bool is_unit(const Value& x) const override;
  Value sample(Rng& rng) const override;

  const FieldPtr& base_field() const { return k_; }
  const std::string& variable() const { return var_; }
  const std::vector<Coeffs>& primes() const { return primes_; }
  // Valuation of a nonzero fraction-field element at primes()[j].
  int valuation(const Value& x, std::size_t j) const;

 private:
  FieldPtr k_;
  std::string var_;
  std::vector<Coeffs> primes_;
  FieldPtr fraction_;
};

// B = A[t]/(pi) for pi monic irreducible over Frac(A) with coefficients in A.
class QuotientRing final : public Ring {
 public:
  QuotientRing(RingPtr base, Poly pi, bool verify);

  const FieldPtr& fraction_field() const override { return fraction_; }
  std::string describe() const override;
  bool contains(const Value& x) const override;
  bool is_unit(const Value& x) const override;
  Value sample(Rng& rng) const override;

  const RingPtr& base_ring() const { return base_; }
  const Poly& modulus() const { return pi_; }
  // Field norm down to Frac(A).
  Value norm(const Value& x) const;

 private:
  RingPtr base_;
  Poly pi_;
  FieldPtr fraction_;
};

RingPtr field_ring(FieldPtr field);
// k must be a prime field or Q; primes monic irreducible, pairwise distinct.
RingPtr localized_ring(FieldPtr k, const std::string& var, std::vector<Coeffs> primes);
// A[t]/(pi); for deg pi == 1 this is A itself.
// Errors: kUnsupportedCoefficients, kLeadingCoeffNotUnit, kNotIrreducible.
RingPtr residue_ring(const RingPtr& base, const Poly& pi, bool verify = true);

// Residue field F[t]/(pi) of a finite place of F(t), with reduction and
// canonical lifting.
class ResidueMap {
 public:
  ResidueMap(FieldPtr base, Poly pi, bool verify = true);

  const FieldPtr& field() const { return kappa_; }
  const FieldPtr& base() const { return base_; }
  const Poly& pi() const { return pi_; }
  std::size_t degree() const { return pi_.degree(); }

  Value reduce_poly(const Coeffs& p) const;
  // Reduction of num/den over the base; throws kNotCoprime when pi | den.
  Value reduce(const FracRep& f) const;
  // Representative of degree < deg pi.
  Coeffs lift(const Value& v) const;

 private:
  FieldPtr base_;
  Poly pi_;
  FieldPtr kappa_;
  Value root_;
};

struct RingFactorization {
  RingPtr ring;
  Value unit;
  // Primes of A dividing the content.
  std::vector<std::pair<Coeffs, unsigned>> content;
  // Content-free irreducibles of A[t]; monic when their leading coefficient
  // is a unit.
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const;
};

// Errors: kZeroPolynomial, kUnsupportedCoefficients, kDegreeBoundExceeded.
RingFactorization ring_factor(const RingPtr& ring, const Poly& p);

// Res(p, q) is a unit of the ring.
bool comaximal(const Ring& ring, const Poly& p, const Poly& q);

// Valuation of a nonzero polynomial at an irreducible.
int poly_valuation(const Field& f, Coeffs a, const Coeffs& pi);

}  // namespace milnor

#endif  // MILNOR_RINGS_HPP_
