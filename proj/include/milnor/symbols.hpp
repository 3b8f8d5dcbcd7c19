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

// Formal Milnor K-theory elements: integer combinations of symbols
// {a_1, ..., a_n}, presented modulo multilinearity only.

#ifndef MILNOR_SYMBOLS_HPP_
#define MILNOR_SYMBOLS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "milnor/factor.hpp"
#include "milnor/integer.hpp"

namespace milnor {

using Tuple = std::vector<Value>;

struct SymbolOptions {
  FactorOptions factor;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  // Largest finite field with a discrete-log table.
  std::uint64_t max_log_field = 1000000;
};

// Discrete logarithms in a finite field to its least primitive element
// (least in the field's element enumeration).
class FiniteFieldLog {
 public:
  // Cached per field. Throws kFieldTooLarge above max_size elements.
  static std::shared_ptr<const FiniteFieldLog> get(const Field& f,
                                                   std::uint64_t max_size = 1000000);

  const Value& generator() const { return generator_; }
  std::uint64_t order() const { return order_; }
  // Exponent in [0, q - 1); throws kZeroArgument on 0.
  std::uint64_t log(const Value& a) const;

 private:
  FiniteFieldLog(FieldPtr f, Value g, std::uint64_t order);

  FieldPtr field_;
  Value generator_;
  std::uint64_t order_;
  std::vector<std::uint32_t> table_;  // element index -> log
};

class SymbolSum {
 public:
  struct TupleLess {
    FieldPtr field;
    bool operator()(const Tuple& a, const Tuple& b) const;
  };
  using Terms = std::map<Tuple, mpz_class, TupleLess>;

  SymbolSum(FieldPtr field, std::size_t degree);

  // c * {entries}, as given (no basis expansion). Errors: kZeroEntry.
  static SymbolSum tuple(FieldPtr field, Tuple entries, const mpz_class& c = 1);
  static SymbolSum scalar(FieldPtr field, const mpz_class& c);

  const FieldPtr& field() const { return field_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Tuple entries, const mpz_class& c);

  SymbolSum& operator+=(const SymbolSum& o);
  SymbolSum& operator-=(const SymbolSum& o);
  SymbolSum operator+(const SymbolSum& o) const;
  SymbolSum operator-(const SymbolSum& o) const;
  SymbolSum operator-() const;
  SymbolSum operator*(const mpz_class& c) const;
  bool operator==(const SymbolSum& o) const;
  bool operator!=(const SymbolSum& o) const { return !(*this == o); }

  // "2{a, b} - {c}", "0" for zero; degree 0 prints the integer.
  std::string to_string() const;

 private:
  void check_compatible(const SymbolSum& o) const;

  FieldPtr field_;
  std::size_t degree_;
  Terms terms_;
};

// Coefficients of symbols with an entry of finite multiplicative order are
// reduced modulo that order; 0 when no entry is torsion of known order.
mpz_class torsion_order(const Field& f, const Tuple& t);

// Multiplicative basis expansion a = prod b_i^{e_i}. Entries that cannot be
// factored stay as opaque atoms with exponent 1.
std::vector<std::pair<Value, mpz_class>> basis_expansion(const Field& f, const Value& a,
                                                         const SymbolOptions& options = {});

// Multilinear expansion of every tuple into the canonical basis.
SymbolSum canonicalize(const SymbolSum& s, const SymbolOptions& options = {});

// Canonical {entries}. Errors: kZeroEntry.
SymbolSum symbol(const FieldPtr& field, const Tuple& entries,
                 const SymbolOptions& options = {});

// Graded product (tuple concatenation). Errors: kDomainMismatch.
SymbolSum product(const SymbolSum& m, const SymbolSum& n);

// even + xi * odd with deg(even) = n and deg(odd) = n - 1 (odd is zero for
// n = 0).
struct XiElem {
  std::size_t n = 0;
  SymbolSum even;
  SymbolSum odd;

  static XiElem identity(const FieldPtr& field);
};

// (a + xi b)(i xi + {u}) = a{u} + xi(i(-1)^n a + b{u} + i(-1)^{n-1}{-1}b)
XiElem xi_mul(const XiElem& z, long i, const Value& u);

}  // namespace milnor

#endif  // MILNOR_SYMBOLS_HPP_
