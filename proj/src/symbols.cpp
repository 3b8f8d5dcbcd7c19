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

#include "milnor/symbols.hpp"

#include <algorithm>
#include <mutex>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

// signs: also count -1 in fields of characteristic 0.
mpz_class entry_order(const Field& f, const Value& v, bool signs = false) {
  if (auto q = f.size()) return *q - 1;
  switch (f.kind()) {
    case FieldKind::kRationals:
      return signs && v.rational() == -1 ? 2 : 0;
    case FieldKind::kRationalFunction: {
      const auto& fr = v.frac();
      if (fr.num.size() == 1 && fr.den.size() == 1)
        return entry_order(*f.base(), fr.num[0], signs);
      return 0;
    }
    case FieldKind::kExtension: {
      const auto& c = v.ext().coeffs;
      if (c.size() == 1) return entry_order(*f.base(), c[0], signs);
      return 0;
    }
    default:
      return 0;
  }
}

using Expansion = std::vector<std::pair<Value, mpz_class>>;

void merge_expansion(const Field& f, Expansion& e) {
  std::sort(e.begin(), e.end(),
            [&f](const auto& a, const auto& b) { return f.compare(a.first, b.first) < 0; });
  Expansion out;
  for (auto& [v, k] : e) {
    if (!out.empty() && out.back().first == v)
      out.back().second += k;
    else
      out.emplace_back(std::move(v), k);
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  e = std::move(out);
}

Expansion expand_rational(const Field& q, const mpq_class& a, const SymbolOptions& options) {
  Expansion out;
  if (a < 0) out.emplace_back(q.from_int(-1), 1);
  auto add = [&](const mpz_class& n, int sign) {
    auto fac = factor_integer(n, options.prime_bound);
    for (const auto& [p, e] : fac.primes) out.emplace_back(q.from_integer(p), sign * mpz_class(e));
    for (const auto& [p, e] : fac.unfactored)
      out.emplace_back(q.from_integer(p), sign * mpz_class(e));
  };
  add(a.get_num(), 1);
  add(a.get_den(), -1);
  return out;
}

Expansion expand_function(const Field& f, const Value& a, const SymbolOptions& options) {
  const Field& k = *f.base();
  const auto& fr = a.frac();
  Expansion out;
  Value c = polyops::lead(fr.num);
  for (auto& [b, e] : basis_expansion(k, c, options))
    out.emplace_back(embed(f, k, b), e);
  auto add = [&](const Coeffs& monic_part, int sign) {
    if (monic_part.size() <= 1) return;
    try {
      auto fac = poly_factor(Poly(f.base(), monic_part), options.factor);
      for (const auto& [p, e] : fac.factors)
        out.emplace_back(make_poly_value(f, p.coeffs()), sign * mpz_class(e));
    } catch (const Error&) {
      out.emplace_back(make_poly_value(f, monic_part), sign);
    }
  };
  add(polyops::monic(k, fr.num), 1);
  add(fr.den, -1);
  return out;
}

}  // namespace

// ---- FiniteFieldLog ----

FiniteFieldLog::FiniteFieldLog(FieldPtr f, Value g, std::uint64_t order)
    : field_(std::move(f)), generator_(std::move(g)), order_(order) {
  table_.assign(order_ + 1, 0);
  Value cur = field_->one();
  for (std::uint64_t k = 0; k < order_; ++k) {
    table_[field_->index_of(cur)] = static_cast<std::uint32_t>(k);
    cur = field_->mul(cur, generator_);
  }
}

std::shared_ptr<const FiniteFieldLog> FiniteFieldLog::get(const Field& f,
                                                          std::uint64_t max_size) {
  auto q = f.size();
  if (!q) fail(ErrorCode::kUnsupportedDomain, f.describe() + " is not finite");
  if (*q > max_size)
    fail(ErrorCode::kFieldTooLarge,
         f.describe() + " has more than " + std::to_string(max_size) + " elements");
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const FiniteFieldLog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f.describe());
  if (it != cache.end()) return it->second;
  const std::uint64_t order = q->get_ui() - 1;
  auto primes = factor_u64(order);
  Value g = f.one();
  for (std::uint64_t idx = 1; idx <= order; ++idx) {
    Value cand = f.element_at(idx);
    if (f.is_zero(cand)) continue;
    bool primitive = true;
    for (const auto& [r, e] : primes)
      if (f.is_one(f.pow(cand, mpz_class(static_cast<unsigned long>(order / r))))) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  std::shared_ptr<const FiniteFieldLog> log(new FiniteFieldLog(f.ptr(), g, order));
  cache.emplace(f.describe(), log);
  return log;
}

std::uint64_t FiniteFieldLog::log(const Value& a) const {
  if (field_->is_zero(a)) fail(ErrorCode::kZeroArgument, "discrete log of 0");
  return table_[field_->index_of(a)];
}

// ---- SymbolSum ----

bool SymbolSum::TupleLess::operator()(const Tuple& a, const Tuple& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = field->compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

SymbolSum::SymbolSum(FieldPtr field, std::size_t degree)
    : field_(std::move(field)), degree_(degree), terms_(TupleLess{field_}) {}

SymbolSum SymbolSum::tuple(FieldPtr field, Tuple entries, const mpz_class& c) {
  SymbolSum s(std::move(field), entries.size());
  s.add_term(std::move(entries), c);
  return s;
}

SymbolSum SymbolSum::scalar(FieldPtr field, const mpz_class& c) {
  SymbolSum s(std::move(field), 0);
  s.add_term({}, c);
  return s;
}

mpz_class torsion_order(const Field& f, const Tuple& t) {
  mpz_class m = 0;
  for (const auto& v : t) m = gcd(m, entry_order(f, v));
  return m;
}

void SymbolSum::add_term(Tuple entries, const mpz_class& c) {
  if (entries.size() != degree_)
    fail(ErrorCode::kInvalidArgument, "symbol of length " + std::to_string(entries.size()) +
                                          " in degree " + std::to_string(degree_));
  for (const auto& v : entries) {
    if (field_->is_zero(v)) fail(ErrorCode::kZeroEntry, "symbol entry is zero");
  }
  for (const auto& v : entries)
    if (field_->is_one(v)) return;
  mpz_class m = torsion_order(*field_, entries);
  auto reduce = [&m](mpz_class x) {
    if (m > 0) {
      x %= m;
      if (x < 0) x += m;
    }
    return x;
  };
  auto it = terms_.find(entries);
  mpz_class total = reduce(it == terms_.end() ? c : it->second + c);
  if (total == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(std::move(entries), total);
  } else {
    it->second = total;
  }
}

void SymbolSum::check_compatible(const SymbolSum& o) const {
  if (!field_->same_as(*o.field_))
    fail(ErrorCode::kDomainMismatch,
         "symbols over " + field_->describe() + " and " + o.field_->describe());
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
    fail(ErrorCode::kInvalidArgument, "adding symbols of degrees " + std::to_string(degree_) +
                                          " and " + std::to_string(o.degree_));
}

SymbolSum& SymbolSum::operator+=(const SymbolSum& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

SymbolSum& SymbolSum::operator-=(const SymbolSum& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

SymbolSum SymbolSum::operator+(const SymbolSum& o) const {
  SymbolSum r = *this;
  r += o;
  return r;
}

SymbolSum SymbolSum::operator-(const SymbolSum& o) const {
  SymbolSum r = *this;
  r -= o;
  return r;
}

SymbolSum SymbolSum::operator-() const { return *this * mpz_class(-1); }

SymbolSum SymbolSum::operator*(const mpz_class& c) const {
  SymbolSum r(field_, degree_);
  for (const auto& [t, k] : terms_) r.add_term(t, k * c);
  return r;
}

bool SymbolSum::operator==(const SymbolSum& o) const {
  if (!field_->same_as(*o.field_)) return false;
  if (is_zero() && o.is_zero()) return true;
  if (degree_ != o.degree_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [t, c] : terms_) {
    if (!(t == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string SymbolSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    std::string term;
    if (degree_ == 0) {
      term = c.get_str();
    } else {
      std::string body = "{";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) body += ", ";
        body += field_->format(t[i]);
      }
      body += "}";
      if (c == 1)
        term = body;
      else if (c == -1)
        term = "-" + body;
      else
        term = c.get_str() + body;
    }
    if (first)
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
    first = false;
  }
  return out;
}

// ---- canonical forms ----

std::vector<std::pair<Value, mpz_class>> basis_expansion(const Field& f, const Value& a,
                                                         const SymbolOptions& options) {
  if (f.is_zero(a)) fail(ErrorCode::kZeroEntry, "symbol entry is zero");
  Expansion out;
  if (f.is_one(a)) return out;
  if (auto q = f.size()) {
    if (*q > options.max_log_field) {
      out.emplace_back(a, 1);
      return out;
    }
    auto log = FiniteFieldLog::get(f, options.max_log_field);
    std::uint64_t k = log->log(a);
    if (k != 0) out.emplace_back(log->generator(), mpz_class(static_cast<unsigned long>(k)));
    return out;
  }
  switch (f.kind()) {
    case FieldKind::kRationals:
      out = expand_rational(f, a.rational(), options);
      break;
    case FieldKind::kRationalFunction:
      out = expand_function(f, a, options);
      break;
    default:
      out.emplace_back(a, 1);
      return out;
  }
  merge_expansion(f, out);
  return out;
}

SymbolSum canonicalize(const SymbolSum& s, const SymbolOptions& options) {
  SymbolSum out(s.field(), s.degree());
  const Field& f = *s.field();
  for (const auto& [t, c] : s.terms()) {
    std::vector<Expansion> slots;
    bool vanishes = false;
    for (const auto& v : t) {
      slots.push_back(basis_expansion(f, v, options));
      if (slots.back().empty()) vanishes = true;
    }
    if (vanishes) continue;
    Tuple cur(t.size());
    auto rec = [&](auto&& self, std::size_t i, const mpz_class& coeff) -> void {
      if (i == slots.size()) {
        out.add_term(cur, coeff);
        return;
      }
      for (const auto& [b, e] : slots[i]) {
        cur[i] = b;
        self(self, i + 1, coeff * e);
      }
    };
    rec(rec, 0, c);
  }
  // 2{-1, ...} = {1, ...} = 0 in characteristic 0.
  SymbolSum reduced(s.field(), s.degree());
  for (const auto& [t, c] : out.terms()) {
    mpz_class m = 0;
    for (const auto& v : t) m = gcd(m, entry_order(f, v, true));
    mpz_class k = c;
    if (m > 0) {
      k %= m;
      if (k < 0) k += m;
    }
    if (k != 0) reduced.add_term(t, k);
  }
  return reduced;
}

SymbolSum symbol(const FieldPtr& field, const Tuple& entries, const SymbolOptions& options) {
  for (const auto& v : entries)
    if (field->is_zero(v)) fail(ErrorCode::kZeroEntry, "symbol entry is zero");
  SymbolSum raw(field, entries.size());
  raw.add_term(entries, 1);
  if (raw.is_zero()) return raw;
  return canonicalize(raw, options);
}

SymbolSum product(const SymbolSum& m, const SymbolSum& n) {
  if (!m.field()->same_as(*n.field()))
    fail(ErrorCode::kDomainMismatch,
         "product of symbols over " + m.field()->describe() + " and " + n.field()->describe());
  SymbolSum out(m.field(), m.degree() + n.degree());
  for (const auto& [a, c] : m.terms()) {
    for (const auto& [b, d] : n.terms()) {
      Tuple t = a;
      t.insert(t.end(), b.begin(), b.end());
      out.add_term(std::move(t), c * d);
    }
  }
  return out;
}

XiElem XiElem::identity(const FieldPtr& field) {
  return XiElem{0, SymbolSum::scalar(field, 1), SymbolSum(field, 0)};
}

XiElem xi_mul(const XiElem& z, long i, const Value& u) {
  const FieldPtr& f = z.even.field();
  SymbolSum braces_u = SymbolSum::tuple(f, {u});
  const long sign_n = z.n % 2 == 0 ? 1 : -1;
  XiElem out{z.n + 1, product(z.even, braces_u), z.even * mpz_class(i * sign_n)};
  if (z.n >= 1) {
    out.odd += product(z.odd, braces_u);
    out.odd += product(SymbolSum::tuple(f, {f->from_int(-1)}), z.odd) * mpz_class(-i * sign_n);
  }
  return out;
}

}  // namespace milnor
