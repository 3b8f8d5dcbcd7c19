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

#include "milnor/field.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/errors.hpp"
#include "milnor/integer.hpp"

namespace milnor {

// Defined with the factorization routines.
bool certify_irreducible(const Field& base, const Coeffs& modulus);

bool operator==(const Value& a, const Value& b) {
  if (a.rep.index() != b.rep.index()) return false;
  switch (a.rep.index()) {
    case 0:
      return a.residue() == b.residue();
    case 1:
      return a.rational() == b.rational();
    case 2:
      return a.ext().coeffs == b.ext().coeffs;
    default:
      return a.frac().num == b.frac().num && a.frac().den == b.frac().den;
  }
}

Value Field::element_at(std::uint64_t) const {
  fail(ErrorCode::kUnsupportedDomain,
       "element enumeration requires a finite field, got " + describe());
}

std::uint64_t Field::index_of(const Value&) const {
  fail(ErrorCode::kUnsupportedDomain,
       "element enumeration requires a finite field, got " + describe());
}

const std::string& Field::variable() const {
  static const std::string kNone;
  return kNone;
}

const Coeffs& Field::modulus() const {
  fail(ErrorCode::kUnsupportedDomain, describe() + " has no modulus");
}

Value Field::pow(const Value& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Value result = one();
  Value base_power = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base_power);
    k >>= 1;
    if (k > 0) base_power = mul(base_power, base_power);
  }
  return result;
}

Value Field::random_nonzero(Rng& rng) const {
  for (;;) {
    Value v = random(rng);
    if (!is_zero(v)) return v;
  }
}

std::vector<std::string> Field::tower_variables() const {
  std::vector<std::string> vars;
  if (auto b = base()) vars = b->tower_variables();
  if (!variable().empty()) vars.push_back(variable());
  return vars;
}

int Field::height() const {
  auto b = base();
  return b ? b->height() + 1 : 0;
}

namespace {

std::int64_t mulmod64(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

class PrimeField final : public Field {
 public:
  explicit PrimeField(std::int64_t p) : p_(p) {
    description_ = "Fp(" + std::to_string(p) + ")";
  }

  FieldKind kind() const override { return FieldKind::kPrime; }
  Value zero() const override { return Value(std::int64_t{0}); }
  Value one() const override { return Value(std::int64_t{1 % p_}); }
  Value from_integer(const mpz_class& n) const override {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return Value(static_cast<std::int64_t>(r.get_si()));
  }
  Value add(const Value& a, const Value& b) const override {
    std::int64_t s = a.residue() + b.residue();
    if (s >= p_) s -= p_;
    return Value(s);
  }
  Value sub(const Value& a, const Value& b) const override {
    std::int64_t s = a.residue() - b.residue();
    if (s < 0) s += p_;
    return Value(s);
  }
  Value neg(const Value& a) const override {
    return Value(a.residue() == 0 ? std::int64_t{0} : p_ - a.residue());
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(mulmod64(a.residue(), b.residue(), p_));
  }
  Value inv(const Value& a) const override {
    if (a.residue() == 0) fail(ErrorCode::kDivisionByZero, "inverse of 0");
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a.residue(), s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = static_cast<std::int64_t>(
          (static_cast<__int128>(s0) - static_cast<__int128>(q) * s1) % p_);
      s0 = s1;
      s1 = s2;
    }
    std::int64_t s = s0 % p_;
    if (s < 0) s += p_;
    return Value(s);
  }
  bool is_zero(const Value& a) const override { return a.residue() == 0; }
  int compare(const Value& a, const Value& b) const override {
    return (a.residue() > b.residue()) - (a.residue() < b.residue());
  }
  std::string format(const Value& a) const override {
    return std::to_string(a.residue());
  }
  Value random(Rng& rng) const override {
    std::uniform_int_distribution<std::int64_t> dist(0, p_ - 1);
    return Value(dist(rng));
  }
  mpz_class characteristic() const override { return mpz_class(p_); }
  std::optional<mpz_class> size() const override { return mpz_class(p_); }
  Value element_at(std::uint64_t index) const override {
    return Value(static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_)));
  }
  std::uint64_t index_of(const Value& a) const override {
    return static_cast<std::uint64_t>(a.residue());
  }

 private:
  std::int64_t p_;
};

class RationalField final : public Field {
 public:
  RationalField() { description_ = "Q"; }

  FieldKind kind() const override { return FieldKind::kRationals; }
  Value zero() const override { return Value(mpq_class(0)); }
  Value one() const override { return Value(mpq_class(1)); }
  Value from_integer(const mpz_class& n) const override {
    return Value(mpq_class(n));
  }
  Value add(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() + b.rational()));
  }
  Value sub(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() - b.rational()));
  }
  Value neg(const Value& a) const override {
    return Value(mpq_class(-a.rational()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(mpq_class(a.rational() * b.rational()));
  }
  Value inv(const Value& a) const override {
    if (a.rational() == 0) fail(ErrorCode::kDivisionByZero, "inverse of 0");
    return Value(mpq_class(1 / a.rational()));
  }
  bool is_zero(const Value& a) const override { return a.rational() == 0; }
  int compare(const Value& a, const Value& b) const override {
    int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  std::string format(const Value& a) const override {
    return a.rational().get_str();
  }
  Value random(Rng& rng) const override {
    std::uniform_int_distribution<int> num(-9, 9);
    static constexpr int kDens[] = {1, 1, 1, 2, 3};
    std::uniform_int_distribution<int> den(0, 4);
    mpq_class q(num(rng), kDens[den(rng)]);
    q.canonicalize();
    return Value(q);
  }
  mpz_class characteristic() const override { return 0; }
};

class RationalFunctionField final : public Field {
 public:
  RationalFunctionField(FieldPtr base, std::string var)
      : base_(std::move(base)), var_(std::move(var)) {
    description_ = base_->describe() + "(" + var_ + ")";
  }

  FieldKind kind() const override { return FieldKind::kRationalFunction; }
  Value zero() const override {
    return Value(FracRep{{}, polyops::constant(*base_, base_->one())});
  }
  Value one() const override {
    return Value(FracRep{polyops::constant(*base_, base_->one()),
                         polyops::constant(*base_, base_->one())});
  }
  Value from_integer(const mpz_class& n) const override {
    return make(polyops::constant(*base_, base_->from_integer(n)),
                polyops::constant(*base_, base_->one()));
  }
  Value add(const Value& a, const Value& b) const override {
    const auto& x = a.frac();
    const auto& y = b.frac();
    if (x.den == y.den) return make(polyops::add(*base_, x.num, y.num), x.den);
    return make(polyops::add(*base_, polyops::mul(*base_, x.num, y.den),
                             polyops::mul(*base_, y.num, x.den)),
                polyops::mul(*base_, x.den, y.den));
  }
  Value sub(const Value& a, const Value& b) const override {
    return add(a, neg(b));
  }
  Value neg(const Value& a) const override {
    return Value(FracRep{polyops::neg(*base_, a.frac().num), a.frac().den});
  }
  Value mul(const Value& a, const Value& b) const override {
    const auto& x = a.frac();
    const auto& y = b.frac();
    return make(polyops::mul(*base_, x.num, y.num),
                polyops::mul(*base_, x.den, y.den));
  }
  Value inv(const Value& a) const override {
    if (a.frac().num.empty()) fail(ErrorCode::kDivisionByZero, "inverse of 0");
    return make(a.frac().den, a.frac().num);
  }
  bool is_zero(const Value& a) const override { return a.frac().num.empty(); }
  int compare(const Value& a, const Value& b) const override {
    int c = polyops::compare(*base_, a.frac().num, b.frac().num);
    if (c != 0) return c;
    return polyops::compare(*base_, a.frac().den, b.frac().den);
  }
  std::string format(const Value& a) const override {
    const auto& f = a.frac();
    std::string num = polyops::format(*base_, f.num, var_);
    if (f.den.size() == 1) return num;
    std::string den = polyops::format(*base_, f.den, var_);
    auto wrap = [](const std::string& s) {
      bool compound = s.find_first_of("+-", 1) != std::string::npos ||
                      s.find('/') != std::string::npos;
      return compound ? "(" + s + ")" : s;
    };
    std::string den_text =
        den.find_first_of("+-*/^", 0) != std::string::npos ? "(" + den + ")"
                                                            : den;
    return wrap(num) + "/" + den_text;
  }
  Value random(Rng& rng) const override {
    Coeffs num = {base_->random(rng), base_->random(rng)};
    polyops::trim(*base_, num);
    Coeffs den = polyops::constant(*base_, base_->one());
    if (rng() % 2 == 0) den = {base_->random(rng), base_->one()};
    return make(std::move(num), std::move(den));
  }
  mpz_class characteristic() const override {
    return base_->characteristic();
  }
  FieldPtr base() const override { return base_; }
  const std::string& variable() const override { return var_; }

  Value make(Coeffs num, Coeffs den) const {
    if (den.empty()) fail(ErrorCode::kDivisionByZero, "zero denominator");
    if (num.empty()) return zero();
    if (den.size() > 1) {
      Coeffs g = polyops::gcd(*base_, num, den);
      if (g.size() > 1) {
        num = polyops::quo(*base_, num, g);
        den = polyops::quo(*base_, den, g);
      }
    }
    Value c = polyops::lead(den);
    if (!base_->is_one(c)) {
      Value ci = base_->inv(c);
      num = polyops::scale(*base_, num, ci);
      den = polyops::scale(*base_, den, ci);
    }
    return Value(FracRep{std::move(num), std::move(den)});
  }

 private:
  FieldPtr base_;
  std::string var_;
};

class ExtensionField final : public Field {
 public:
  ExtensionField(FieldPtr base, Coeffs modulus, std::string var)
      : base_(std::move(base)), modulus_(std::move(modulus)), var_(std::move(var)) {
    description_ = "ext(" + base_->describe() + ", " +
                   polyops::format(*base_, modulus_, var_) + ", " + var_ + ")";
    if (auto q = base_->size()) {
      size_ = 1;
      for (std::size_t i = 0; i + 1 < modulus_.size(); ++i) *size_ *= *q;
    }
  }

  FieldKind kind() const override { return FieldKind::kExtension; }
  Value zero() const override { return Value(ExtRep{}); }
  Value one() const override {
    return Value(ExtRep{polyops::constant(*base_, base_->one())});
  }
  Value from_integer(const mpz_class& n) const override {
    return Value(ExtRep{polyops::constant(*base_, base_->from_integer(n))});
  }
  Value add(const Value& a, const Value& b) const override {
    return Value(ExtRep{polyops::add(*base_, a.ext().coeffs, b.ext().coeffs)});
  }
  Value sub(const Value& a, const Value& b) const override {
    return Value(ExtRep{polyops::sub(*base_, a.ext().coeffs, b.ext().coeffs)});
  }
  Value neg(const Value& a) const override {
    return Value(ExtRep{polyops::neg(*base_, a.ext().coeffs)});
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(ExtRep{
        polyops::mulmod(*base_, a.ext().coeffs, b.ext().coeffs, modulus_)});
  }
  Value inv(const Value& a) const override {
    if (a.ext().coeffs.empty()) fail(ErrorCode::kDivisionByZero, "inverse of 0");
    Coeffs s, t;
    Coeffs g = polyops::xgcd(*base_, a.ext().coeffs, modulus_, s, t);
    if (g.size() != 1)
      fail(ErrorCode::kNotIrreducible,
           "modulus of " + describe() + " has a nontrivial factor");
    return Value(ExtRep{polyops::mod(*base_, s, modulus_)});
  }
  bool is_zero(const Value& a) const override { return a.ext().coeffs.empty(); }
  int compare(const Value& a, const Value& b) const override {
    return polyops::compare(*base_, a.ext().coeffs, b.ext().coeffs);
  }
  std::string format(const Value& a) const override {
    return polyops::format(*base_, a.ext().coeffs, var_);
  }
  Value random(Rng& rng) const override {
    Coeffs c;
    for (std::size_t i = 0; i + 1 < modulus_.size(); ++i)
      c.push_back(base_->random(rng));
    polyops::trim(*base_, c);
    return Value(ExtRep{std::move(c)});
  }
  mpz_class characteristic() const override {
    return base_->characteristic();
  }
  std::optional<mpz_class> size() const override { return size_; }
  Value element_at(std::uint64_t index) const override {
    std::uint64_t q = base_->size()->get_ui();
    Coeffs c;
    for (std::size_t i = 0; i + 1 < modulus_.size(); ++i) {
      c.push_back(base_->element_at(index % q));
      index /= q;
    }
    polyops::trim(*base_, c);
    return Value(ExtRep{std::move(c)});
  }
  std::uint64_t index_of(const Value& a) const override {
    std::uint64_t q = base_->size()->get_ui();
    std::uint64_t idx = 0;
    const auto& c = a.ext().coeffs;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * q + base_->index_of(c[i]);
    return idx;
  }
  FieldPtr base() const override { return base_; }
  const std::string& variable() const override { return var_; }
  const Coeffs& modulus() const override { return modulus_; }

 private:
  FieldPtr base_;
  Coeffs modulus_;
  std::string var_;
  std::optional<mpz_class> size_;
};

int extension_height(const Field& f) {
  int h = 0;
  for (const Field* cur = &f; cur != nullptr; cur = cur->base().get())
    if (cur->kind() == FieldKind::kExtension) ++h;
  return h;
}

}  // namespace

FieldPtr prime_field(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  return std::make_shared<PrimeField>(p);
}

FieldPtr rationals() {
  static const FieldPtr kQ = std::make_shared<RationalField>();
  return kQ;
}

FieldPtr rational_functions(FieldPtr base, const std::string& var) {
  auto vars = base->tower_variables();
  if (var.empty() || std::find(vars.begin(), vars.end(), var) != vars.end())
    fail(ErrorCode::kInvalidArgument,
         "variable '" + var + "' already used in " + base->describe());
  return std::make_shared<RationalFunctionField>(std::move(base), var);
}

FieldPtr extension(FieldPtr base, Coeffs modulus, const std::string& var,
                   bool verify) {
  auto vars = base->tower_variables();
  if (var.empty() || std::find(vars.begin(), vars.end(), var) != vars.end())
    fail(ErrorCode::kInvalidArgument,
         "variable '" + var + "' already used in " + base->describe());
  polyops::trim(*base, modulus);
  if (modulus.size() < 2)
    fail(ErrorCode::kInvalidArgument, "extension modulus must have degree >= 1");
  if (!base->is_one(modulus.back()))
    fail(ErrorCode::kInvalidArgument, "extension modulus must be monic");
  if (extension_height(*base) + 1 > kMaxExtensionHeight)
    fail(ErrorCode::kTowerTooDeep, "extension tower deeper than " +
                                       std::to_string(kMaxExtensionHeight));
  if (verify && modulus.size() > 2 && !certify_irreducible(*base, modulus))
    fail(ErrorCode::kNotIrreducible,
         polyops::format(*base, modulus, var) + " is reducible over " +
             base->describe());
  return std::make_shared<ExtensionField>(std::move(base), std::move(modulus),
                                          var);
}

Value make_fraction(const Field& f, Coeffs num, Coeffs den) {
  if (f.kind() != FieldKind::kRationalFunction)
    fail(ErrorCode::kDomainMismatch, f.describe() + " is not a rational function field");
  polyops::trim(*f.base(), num);
  polyops::trim(*f.base(), den);
  return static_cast<const RationalFunctionField&>(f).make(std::move(num), std::move(den));
}

Value make_ext(const Field& f, Coeffs poly) {
  if (f.kind() != FieldKind::kExtension)
    fail(ErrorCode::kDomainMismatch, f.describe() + " is not a simple extension");
  polyops::trim(*f.base(), poly);
  return Value(ExtRep{polyops::mod(*f.base(), poly, f.modulus())});
}

bool is_subfield(const Field& target, const Field& source) {
  for (const Field* cur = &target; cur != nullptr; cur = cur->base().get())
    if (cur->same_as(source)) return true;
  return false;
}

Value embed(const Field& target, const Field& source, const Value& v) {
  if (target.same_as(source)) return v;
  auto b = target.base();
  if (!b)
    fail(ErrorCode::kDomainMismatch,
         source.describe() + " is not a subfield of " + target.describe());
  Value w = embed(*b, source, v);
  if (b->is_zero(w)) return target.zero();
  if (target.kind() == FieldKind::kRationalFunction)
    return Value(FracRep{{w}, polyops::constant(*b, b->one())});
  return Value(ExtRep{{w}});
}

namespace polyops {

void trim(const Field& f, Coeffs& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

std::size_t degree(const Coeffs& a) {
  if (a.empty()) fail(ErrorCode::kZeroPolynomial, "degree of zero polynomial");
  return a.size() - 1;
}

Coeffs constant(const Field& f, const Value& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

Coeffs monomial(const Field& f, const Value& c, std::size_t deg) {
  if (f.is_zero(c)) return {};
  Coeffs r(deg + 1, f.zero());
  r[deg] = c;
  return r;
}

Coeffs x(const Field& f) { return {f.zero(), f.one()}; }

Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b) {
  const Coeffs& longer = a.size() >= b.size() ? a : b;
  const Coeffs& shorter = a.size() >= b.size() ? b : a;
  Coeffs r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = f.add(r[i], shorter[i]);
  trim(f, r);
  return r;
}

Coeffs neg(const Field& f, const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(f.neg(c));
  return r;
}

Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b) {
  return add(f, a, neg(f, b));
}

Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

Coeffs scale(const Field& f, const Coeffs& a, const Value& c) {
  if (f.is_zero(c)) return {};
  Coeffs r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

void divmod(const Field& f, const Coeffs& a, const Coeffs& b, Coeffs& q,
            Coeffs& r) {
  if (b.empty()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, f.zero());
  Value lead_inv = f.inv(b.back());
  const std::size_t low = b.size() - 1;
  for (std::size_t k = a.size() - 1;; --k) {
    if (!f.is_zero(r[k])) {
      Value c = f.mul(r[k], lead_inv);
      std::size_t shift = k - low;
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    }
    if (k == low) break;
  }
  trim(f, q);
  trim(f, r);
}

Coeffs quo(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(f, a, b, q, r);
  return q;
}

Coeffs mod(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.size() < b.size()) return a;
  Coeffs q, r;
  divmod(f, a, b, q, r);
  return r;
}

bool divides(const Field& f, const Coeffs& d, const Coeffs& a) {
  return mod(f, a, d).empty();
}

const Value& lead(const Coeffs& a) {
  if (a.empty()) fail(ErrorCode::kZeroPolynomial, "leading coefficient of 0");
  return a.back();
}

Coeffs monic(const Field& f, const Coeffs& a) {
  if (a.empty()) return {};
  if (f.is_one(a.back())) return a;
  return scale(f, a, f.inv(a.back()));
}

Coeffs gcd(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs x = a, y = b;
  while (!y.empty()) {
    Coeffs r = mod(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(f, x);
}

Coeffs xgcd(const Field& f, const Coeffs& a, const Coeffs& b, Coeffs& s,
            Coeffs& t) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0 = constant(f, f.one()), s1;
  Coeffs t0, t1 = constant(f, f.one());
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(f, r0, r1, q, r);
    Coeffs s2 = sub(f, s0, mul(f, q, s1));
    Coeffs t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return {};
  }
  Value c = f.inv(r0.back());
  s = scale(f, s0, c);
  t = scale(f, t0, c);
  return scale(f, r0, c);
}

Value eval(const Field& f, const Coeffs& a, const Value& x) {
  Value r = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

Coeffs derivative(const Field& f, const Coeffs& a) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(f.mul(f.from_int(static_cast<long>(i)), a[i]));
  trim(f, r);
  return r;
}

Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b,
              const Coeffs& m) {
  return mod(f, mul(f, a, b), m);
}

Coeffs powmod(const Field& f, const Coeffs& a, const mpz_class& e,
              const Coeffs& m) {
  Coeffs result = mod(f, constant(f, f.one()), m);
  Coeffs b = mod(f, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(f, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(f, result, b, m);
  }
  return result;
}

Coeffs pow(const Field& f, const Coeffs& a, unsigned e) {
  Coeffs result = constant(f, f.one());
  Coeffs b = a;
  while (e > 0) {
    if (e & 1U) result = mul(f, result, b);
    e >>= 1U;
    if (e > 0) b = mul(f, b, b);
  }
  return result;
}

Coeffs compose(const Field& f, const Coeffs& a, const Coeffs& g) {
  Coeffs r;
  for (std::size_t i = a.size(); i-- > 0;)
    r = add(f, mul(f, r, g), constant(f, a[i]));
  return r;
}

int compare(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = f.compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string format(const Field& f, const Coeffs& a, const std::string& var) {
  if (a.empty()) return "0";
  auto compound = [](const std::string& s) {
    return s.find_first_of("+-", 1) != std::string::npos;
  };
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (f.is_zero(a[i])) continue;
    std::string c = f.format(a[i]);
    bool negative = false;
    if (c[0] == '-' && !compound(c.substr(1))) {
      negative = true;
      c = c.substr(1);
    }
    if (compound(c)) c = "(" + c + ")";
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") out << c << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace polyops

}  // namespace milnor
