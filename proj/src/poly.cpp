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

#include "milnor/poly.hpp"

#include "milnor/errors.hpp"

namespace milnor {

Poly::Poly(FieldPtr field, Coeffs coeffs, std::string var)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), var_(std::move(var)) {
  polyops::trim(*field_, coeffs_);
}

Poly Poly::constant(FieldPtr field, const Value& c, std::string var) {
  Coeffs cs = polyops::constant(*field, c);
  return Poly(std::move(field), std::move(cs), std::move(var));
}

Poly Poly::variable(FieldPtr field, std::string var) {
  Coeffs cs = polyops::x(*field);
  return Poly(std::move(field), std::move(cs), std::move(var));
}

Poly Poly::linear(FieldPtr field, const Value& root, std::string var) {
  Coeffs cs = {field->neg(root), field->one()};
  return Poly(std::move(field), std::move(cs), std::move(var));
}

Poly Poly::operator-() const {
  return Poly(field_, polyops::neg(*field_, coeffs_), var_);
}
Poly Poly::operator+(const Poly& o) const {
  return Poly(field_, polyops::add(*field_, coeffs_, o.coeffs_), var_);
}
Poly Poly::operator-(const Poly& o) const {
  return Poly(field_, polyops::sub(*field_, coeffs_, o.coeffs_), var_);
}
Poly Poly::operator*(const Poly& o) const {
  return Poly(field_, polyops::mul(*field_, coeffs_, o.coeffs_), var_);
}
Poly Poly::operator*(const Value& c) const {
  return Poly(field_, polyops::scale(*field_, coeffs_, c), var_);
}
Poly Poly::operator%(const Poly& o) const {
  return Poly(field_, polyops::mod(*field_, coeffs_, o.coeffs_), var_);
}
Poly Poly::operator/(const Poly& o) const {
  return Poly(field_, polyops::quo(*field_, coeffs_, o.coeffs_), var_);
}
Poly Poly::pow(unsigned e) const {
  return Poly(field_, polyops::pow(*field_, coeffs_, e), var_);
}
bool Poly::divides(const Poly& a) const {
  return polyops::divides(*field_, coeffs_, a.coeffs_);
}

Poly gcd(const Poly& a, const Poly& b) {
  return Poly(a.field(), polyops::gcd(*a.field(), a.coeffs(), b.coeffs()), a.var());
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Coeffs cs, ct;
  Coeffs g = polyops::xgcd(*a.field(), a.coeffs(), b.coeffs(), cs, ct);
  s = Poly(a.field(), std::move(cs), a.var());
  t = Poly(a.field(), std::move(ct), a.var());
  return Poly(a.field(), std::move(g), a.var());
}

Value resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero())
    fail(ErrorCode::kZeroPolynomial, "resultant with zero polynomial");
  const Field& f = *p.field();
  Coeffs a = p.coeffs(), b = q.coeffs();
  Value acc = f.one();
  for (;;) {
    std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) return f.mul(acc, f.pow(b[0], mpz_class(static_cast<unsigned long>(m))));
    if (m == 0) return f.mul(acc, f.pow(a[0], mpz_class(static_cast<unsigned long>(n))));
    Coeffs r = polyops::mod(f, a, b);
    if (r.empty()) return f.zero();
    // res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
    if ((m * n) % 2 == 1) acc = f.neg(acc);
    acc = f.mul(acc, f.pow(b.back(), mpz_class(static_cast<unsigned long>(m - (r.size() - 1)))));
    a = std::move(b);
    b = std::move(r);
  }
}

Value determinant(const Field& f, std::vector<std::vector<Value>> m) {
  const std::size_t n = m.size();
  Value det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && f.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    Value inv = f.inv(m[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (f.is_zero(m[row][col])) continue;
      Value factor = f.mul(m[row][col], inv);
      for (std::size_t k = col; k < n; ++k)
        m[row][k] = f.sub(m[row][k], f.mul(factor, m[col][k]));
    }
  }
  return det;
}

Value mult_matrix_det(const Poly& pi, const Poly& x) {
  const Field& f = *pi.field();
  if (gcd(pi, x).degree() != 0)
    fail(ErrorCode::kNotCoprime, x.to_string() + " is not coprime to " + pi.to_string());
  const std::size_t d = pi.degree();
  std::vector<std::vector<Value>> m(d, std::vector<Value>(d, f.zero()));
  Poly column = x % pi;
  const Poly t = Poly::variable(pi.field(), pi.var());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = column.coeff(i);
    column = (column * t) % pi;
  }
  return determinant(f, std::move(m));
}

Poly crt_combine(std::span<const Congruence> congruences) {
  if (congruences.empty())
    fail(ErrorCode::kInvalidArgument, "crt_combine needs at least one congruence");
  Poly result = congruences[0].value % congruences[0].modulus;
  Poly modulus = congruences[0].modulus;
  for (std::size_t i = 1; i < congruences.size(); ++i) {
    const auto& [v, m] = congruences[i];
    Poly s, t;
    Poly g = xgcd(modulus, m, s, t);
    if (g.degree() != 0)
      fail(ErrorCode::kNotComaximal,
           modulus.to_string() + " and " + m.to_string() + " are not comaximal");
    // s*modulus = 1 mod m
    Poly k = ((v - result) * s) % m;
    result = result + modulus * k;
    modulus = modulus * m;
    result = result % modulus;
  }
  return result;
}

Poly Factorization::expand(const std::string& var) const {
  Poly out = Poly::constant(field, unit, var);
  for (const auto& [p, e] : factors) out = out * p.with_var(var).pow(e);
  return out;
}

}  // namespace milnor
