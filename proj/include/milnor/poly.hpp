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

#ifndef MILNOR_POLY_HPP_
#define MILNOR_POLY_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milnor/field.hpp"

namespace milnor {

// Univariate polynomial over a field. Coefficients are trimmed; the zero
// polynomial has no degree (degree() throws kZeroPolynomial).
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, Coeffs coeffs, std::string var = "t");

  static Poly constant(FieldPtr field, const Value& c, std::string var = "t");
  static Poly variable(FieldPtr field, std::string var = "t");
  // x - root
  static Poly linear(FieldPtr field, const Value& root, std::string var = "t");

  const FieldPtr& field() const { return field_; }
  const Coeffs& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  Poly with_var(std::string var) const { return Poly(field_, coeffs_, std::move(var)); }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return polyops::degree(coeffs_); }
  std::optional<std::size_t> degree_if_nonzero() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Value& lead() const { return polyops::lead(coeffs_); }
  Value coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
  }
  bool is_monic() const { return !coeffs_.empty() && field_->is_one(coeffs_.back()); }
  Poly monic() const { return Poly(field_, polyops::monic(*field_, coeffs_), var_); }
  Poly derivative() const {
    return Poly(field_, polyops::derivative(*field_, coeffs_), var_);
  }
  Value operator()(const Value& x) const { return polyops::eval(*field_, coeffs_, x); }
  Poly compose(const Poly& g) const {
    return Poly(field_, polyops::compose(*field_, coeffs_, g.coeffs_), var_);
  }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Value& c) const;
  Poly operator%(const Poly& o) const;
  // Quotient of Euclidean division.
  Poly operator/(const Poly& o) const;
  Poly pow(unsigned e) const;
  bool divides(const Poly& a) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Canonical order: degree, then coefficients from the top down.
  int compare(const Poly& o) const { return polyops::compare(*field_, coeffs_, o.coeffs_); }

  std::string to_string() const { return polyops::format(*field_, coeffs_, var_); }

 private:
  FieldPtr field_;
  Coeffs coeffs_;
  std::string var_ = "t";
};

Poly gcd(const Poly& a, const Poly& b);
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

// Resultant via the Euclidean remainder sequence; equals the Sylvester
// determinant. Throws kZeroPolynomial if either argument is zero.
Value resultant(const Poly& p, const Poly& q);

// Determinant of a square matrix over a field (Gaussian elimination).
Value determinant(const Field& f, std::vector<std::vector<Value>> m);

// Determinant of multiplication by x on F[t]/(pi) in the power basis.
// Throws kNotCoprime when gcd(x, pi) != 1.
Value mult_matrix_det(const Poly& pi, const Poly& x);

struct Congruence {
  Poly value;
  Poly modulus;
};

// Solve value_i mod modulus_i simultaneously; result reduced modulo the
// product. Throws kNotComaximal for non-coprime moduli.
Poly crt_combine(std::span<const Congruence> congruences);

struct Factorization {
  FieldPtr field;
  Value unit;
  // Monic irreducible factors in canonical order with multiplicities.
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand(const std::string& var = "t") const;
};

}  // namespace milnor

#endif  // MILNOR_POLY_HPP_
