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

// Exact field arithmetic over towers built from prime fields and the
// rationals by adjoining transcendentals (rational function fields) and
// algebraic elements (simple extensions).

#ifndef MILNOR_FIELD_HPP_
#define MILNOR_FIELD_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace milnor {

using Rng = std::mt19937_64;

struct Value;

// Polynomial in the adjoined generator, degree below the modulus degree.
struct ExtRep {
  std::vector<Value> coeffs;
};

// Reduced fraction num/den with den monic.
struct FracRep {
  std::vector<Value> num;
  std::vector<Value> den;
};

// A field element in its canonical representation. The interpretation of
// the alternative is owned by the Field it belongs to; two values of the
// same field are equal iff their representations are equal.
struct Value {
  std::variant<std::int64_t, mpq_class, ExtRep, FracRep> rep;

  Value() : rep(std::int64_t{0}) {}
  explicit Value(std::int64_t residue) : rep(residue) {}
  explicit Value(mpq_class q) : rep(std::move(q)) {}
  explicit Value(ExtRep e) : rep(std::move(e)) {}
  explicit Value(FracRep f) : rep(std::move(f)) {}

  std::int64_t residue() const { return std::get<std::int64_t>(rep); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep); }
  const ExtRep& ext() const { return std::get<ExtRep>(rep); }
  const FracRep& frac() const { return std::get<FracRep>(rep); }
};

bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

using Coeffs = std::vector<Value>;

enum class FieldKind { kPrime, kRationals, kRationalFunction, kExtension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  virtual ~Field() = default;

  virtual FieldKind kind() const = 0;
  // Textual descriptor in the CLI domain grammar; also the field identity.
  const std::string& describe() const { return description_; }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value from_integer(const mpz_class& n) const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value sub(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  // Throws kDivisionByZero on zero.
  virtual Value inv(const Value& a) const = 0;
  virtual bool is_zero(const Value& a) const = 0;
  // Total order on canonical representatives.
  virtual int compare(const Value& a, const Value& b) const = 0;
  virtual std::string format(const Value& a) const = 0;
  // Small random element (may be zero).
  virtual Value random(Rng& rng) const = 0;
  virtual mpz_class characteristic() const = 0;

  // Finite fields only: cardinality and a fixed enumeration of elements.
  virtual std::optional<mpz_class> size() const { return std::nullopt; }
  virtual Value element_at(std::uint64_t index) const;
  virtual std::uint64_t index_of(const Value& a) const;

  // Tower structure.
  virtual FieldPtr base() const { return nullptr; }
  virtual const std::string& variable() const;
  virtual const Coeffs& modulus() const;

  bool is_finite() const { return size().has_value(); }
  bool same_as(const Field& other) const {
    return description_ == other.description_;
  }
  FieldPtr ptr() const { return shared_from_this(); }

  Value from_int(long n) const { return from_integer(mpz_class(n)); }
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
  Value pow(const Value& a, const mpz_class& e) const;
  bool is_one(const Value& a) const { return a == one(); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  Value random_nonzero(Rng& rng) const;
  // Variables of the whole tower, innermost first.
  std::vector<std::string> tower_variables() const;
  // Number of extension/transcendental layers above the prime field.
  int height() const;

 protected:
  std::string description_;
};

FieldPtr prime_field(std::int64_t p);
FieldPtr rationals();
FieldPtr rational_functions(FieldPtr base, const std::string& var);
// modulus must be monic of degree >= 1 over base; when verify is set it is
// checked irreducible (kNotIrreducible otherwise).
FieldPtr extension(FieldPtr base, Coeffs modulus, const std::string& var,
                   bool verify = true);

// Largest supported number of simple extensions in one tower.
inline constexpr int kMaxExtensionHeight = 4;

// num/den in a rational function field, normalized (den != 0).
Value make_fraction(const Field& f, Coeffs num, Coeffs den);
// Polynomial in the generator of an extension field, reduced modulo it.
Value make_ext(const Field& f, Coeffs poly);
// Element of a rational function field given by a polynomial in its variable.
inline Value make_poly_value(const Field& f, Coeffs num);

// Map a value of `source` into `target`, where source is target itself or a
// subfield reachable by descending target's tower.
Value embed(const Field& target, const Field& source, const Value& v);
bool is_subfield(const Field& target, const Field& source);

// Univariate polynomial kernels over an arbitrary field. Coefficient vectors
// are indexed by degree and trimmed; the zero polynomial is the empty vector.
namespace polyops {

void trim(const Field& f, Coeffs& a);
inline bool is_zero(const Coeffs& a) { return a.empty(); }
// Degree of a nonzero polynomial; throws kZeroPolynomial on zero.
std::size_t degree(const Coeffs& a);
Coeffs constant(const Field& f, const Value& c);
Coeffs monomial(const Field& f, const Value& c, std::size_t deg);
Coeffs x(const Field& f);
Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs neg(const Field& f, const Coeffs& a);
Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Field& f, const Coeffs& a, const Value& c);
void divmod(const Field& f, const Coeffs& a, const Coeffs& b, Coeffs& q,
            Coeffs& r);
Coeffs quo(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs mod(const Field& f, const Coeffs& a, const Coeffs& b);
bool divides(const Field& f, const Coeffs& d, const Coeffs& a);
Coeffs monic(const Field& f, const Coeffs& a);
const Value& lead(const Coeffs& a);
// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Field& f, const Coeffs& a, const Coeffs& b);
// g = s*a + t*b with g monic (or zero).
Coeffs xgcd(const Field& f, const Coeffs& a, const Coeffs& b, Coeffs& s,
            Coeffs& t);
Value eval(const Field& f, const Coeffs& a, const Value& x);
Coeffs derivative(const Field& f, const Coeffs& a);
Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b,
              const Coeffs& m);
Coeffs powmod(const Field& f, const Coeffs& a, const mpz_class& e,
              const Coeffs& m);
Coeffs pow(const Field& f, const Coeffs& a, unsigned e);
// Substitute g for the variable: a(g).
Coeffs compose(const Field& f, const Coeffs& a, const Coeffs& g);
int compare(const Field& f, const Coeffs& a, const Coeffs& b);
std::string format(const Field& f, const Coeffs& a, const std::string& var);

}  // namespace polyops

inline Value make_poly_value(const Field& f, Coeffs num) {
  return make_fraction(f, std::move(num), polyops::constant(*f.base(), f.base()->one()));
}

}  // namespace milnor

#endif  // MILNOR_FIELD_HPP_
