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

#include "milnor/parse.hpp"

#include <cctype>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::size_t begin, std::size_t end)
      : text_(text), pos_(begin), end_(end) {}
  explicit Cursor(const std::string& text) : Cursor(text, 0, text.size()) {}

  [[noreturn]] void error(const std::string& expected) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, expected);
  }

  void skip() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= end_;
  }
  char peek() {
    skip();
    return pos_ < end_ ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) error(std::string("'") + ch + "'");
  }
  bool accept_text(const std::string& w) {
    skip();
    if (text_.compare(pos_, w.size(), w) != 0 || pos_ + w.size() > end_) return false;
    pos_ += w.size();
    return true;
  }
  // A keyword not followed by an identifier character.
  bool accept_word(const std::string& w) {
    skip();
    std::size_t save = pos_;
    if (!accept_text(w)) return false;
    if (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      pos_ = save;
      return false;
    }
    return true;
  }
  void expect_end() {
    if (!at_end()) error("end of input");
  }
  bool ident_start() {
    char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }
  bool digit_start() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string ident() {
    if (!ident_start()) error("identifier");
    std::size_t b = pos_;
    while (pos_ < end_ &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(b, pos_ - b);
  }
  mpz_class integer() {
    if (!digit_start()) error("integer");
    std::size_t b = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(text_.substr(b, pos_ - b));
  }

  // Position of the next top-level character from `stops`, or the end.
  std::size_t scan(const std::string& stops) const {
    int depth = 0;
    for (std::size_t i = pos_; i < end_; ++i) {
      char ch = text_[i];
      if (depth == 0 && stops.find(ch) != std::string::npos) return i;
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') {
        if (depth == 0) return i;
        --depth;
      }
    }
    return end_;
  }
  Cursor sub(std::size_t end) const { return Cursor(text_, pos_, end); }
  void seek(std::size_t p) { pos_ = p; }
  std::size_t pos() const { return pos_; }
  const std::string& text() const { return text_; }

 private:
  const std::string& text_;
  std::size_t pos_;
  std::size_t end_;
};

std::optional<Value> generator(const FieldPtr& f, const std::string& name) {
  for (FieldPtr layer = f; layer; layer = layer->base()) {
    if (layer->kind() != FieldKind::kExtension && layer->kind() != FieldKind::kRationalFunction)
      break;
    if (layer->variable() != name) continue;
    const FieldPtr b = layer->base();
    Value g = layer->kind() == FieldKind::kExtension
                  ? make_ext(*layer, polyops::x(*b))
                  : make_poly_value(*layer, polyops::x(*b));
    return embed(*f, *layer, g);
  }
  return std::nullopt;
}

class ExprParser {
 public:
  ExprParser(Cursor& c, FieldPtr f) : c_(c), f_(std::move(f)) {}

  Value sum() {
    Value acc = c_.accept('-') ? f_->neg(term()) : (c_.accept('+'), term());
    for (;;) {
      if (c_.accept('+')) {
        acc = f_->add(acc, term());
      } else if (c_.accept('-')) {
        acc = f_->sub(acc, term());
      } else {
        return acc;
      }
    }
  }

 private:
  Value term() {
    Value acc = power();
    for (;;) {
      if (c_.accept('*')) {
        acc = f_->mul(acc, power());
      } else if (c_.accept('/')) {
        std::size_t at = c_.pos();
        Value d = power();
        if (f_->is_zero(d)) {
          c_.seek(at);
          c_.error("nonzero divisor");
        }
        acc = f_->div(acc, d);
      } else if (c_.ident_start() || c_.digit_start() || c_.peek() == '(') {
        acc = f_->mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = primary();
    if (!c_.accept('^')) return base;
    bool neg = c_.accept('-');
    mpz_class e = c_.integer();
    if (neg) {
      if (f_->is_zero(base)) c_.error("nonzero base for a negative power");
      return f_->pow(f_->inv(base), e);
    }
    return f_->pow(base, e);
  }

  Value primary() {
    if (c_.accept('(')) {
      Value v = sum();
      c_.expect(')');
      return v;
    }
    if (c_.accept('-')) return f_->neg(power());
    if (c_.digit_start()) return f_->from_integer(c_.integer());
    if (c_.ident_start()) {
      std::size_t at = c_.pos();
      std::string name = c_.ident();
      if (auto g = generator(f_, name)) return *g;
      c_.seek(at);
      c_.error("a variable of " + f_->describe());
    }
    c_.error("expression");
  }

  Cursor& c_;
  FieldPtr f_;
};

Value element_in(Cursor c, const FieldPtr& f) {
  if (c.at_end()) c.error("expression");
  ExprParser p(c, f);
  Value v = p.sum();
  c.expect_end();
  return v;
}

// Element of `c` up to the next top-level stop character.
Value element_until(Cursor& c, const FieldPtr& f, const std::string& stops) {
  std::size_t end = c.scan(stops);
  Value v = element_in(c.sub(end), f);
  c.seek(end);
  return v;
}

Poly poly_in(Cursor c, const FieldPtr& f, const std::string& var) {
  std::size_t at = c.pos();
  FieldPtr fv = rational_functions(f, var);
  Value v = element_in(c, fv);
  if (v.frac().den.size() != 1) {
    c.seek(at);
    c.error("a polynomial in " + var);
  }
  return Poly(f, v.frac().num, var);
}

Poly poly_until(Cursor& c, const FieldPtr& f, const std::string& var, const std::string& stops) {
  std::size_t end = c.scan(stops);
  Poly p = poly_in(c.sub(end), f, var);
  c.seek(end);
  return p;
}

Domain plain(RingPtr ring, std::string text) {
  FieldPtr f = ring->fraction_field();
  return Domain{ring, f, false, ring, {}, {}, std::move(text)};
}

Domain as_plain(const Domain& d) {
  if (!d.function_field) return d;
  return plain(field_ring(d.field), d.text);
}

Domain domain_at(Cursor& c);

Domain localize(Cursor& c, const Domain& d, const std::string& var) {
  if (d.function_field || !d.is_field() || !d.tower.empty())
    c.error("a prime field or Q before a localization");
  std::vector<Coeffs> primes;
  if (!c.accept(']')) {
    do {
      primes.push_back(poly_until(c, d.field, var, ",]").monic().coeffs());
    } while (c.accept(','));
    c.expect(']');
  }
  RingPtr r = localized_ring(d.field, var, std::move(primes));
  return plain(r, r->describe());
}

Domain domain_at(Cursor& c) {
  Domain d;
  if (c.accept_word("Fp")) {
    c.expect('(');
    std::size_t at = c.pos();
    mpz_class p = c.integer();
    if (!p.fits_slong_p()) {
      c.seek(at);
      c.error("a word-size prime");
    }
    c.expect(')');
    d = plain(field_ring(prime_field(p.get_si())), "");
  } else if (c.accept_word("Q")) {
    d = plain(field_ring(rationals()), "");
  } else if (c.accept_word("ext")) {
    c.expect('(');
    Domain inner = as_plain(domain_at(c));
    if (!inner.is_field()) c.error("a field inside ext(...)");
    c.expect(',');
    std::size_t end = c.scan(",");
    Cursor poly_text = c.sub(end);
    c.seek(end);
    c.expect(',');
    std::string var = c.ident();
    c.expect(')');
    Poly m = poly_in(poly_text, inner.field, var);
    if (m.is_zero() || m.degree() == 0) {
      poly_text.skip();
      poly_text.error("a modulus of positive degree");
    }
    d = plain(field_ring(extension(inner.field, m.monic().coeffs(), var)), "");
  } else {
    c.error("a domain (Fp(p), Q or ext(...))");
  }
  d.text = d.field->describe();
  for (;;) {
    if (c.accept('(')) {
      std::string var = c.ident();
      c.expect(')');
      if (c.accept_text("@loc[")) {
        d = localize(c, d, var);
        continue;
      }
      Domain base = as_plain(d);
      if (!base.tower.empty() && !base.is_field())
        c.error("a field or localization before a function variable");
      FieldPtr ft = rational_functions(base.field, var);
      d = Domain{base.ring, ft, true, base.ring, {}, {}, base.text + "(" + var + ")"};
      if (base.is_field()) d.text = ft->describe();
    } else if (c.accept('[')) {
      std::string var = c.ident();
      c.expect(']');
      if (c.accept_text("@loc[")) {
        d = localize(c, d, var);
        continue;
      }
      if (!c.accept_text("/(")) c.error("\"@loc[\" or \"/(\"");
      Domain base = as_plain(d);
      Poly pi = poly_until(c, base.field, var, ")");
      c.expect(')');
      RingPtr r = residue_ring(base.ring, pi, true);
      std::vector<Poly> tower = base.tower;
      std::vector<RingPtr> bases = base.bases;
      tower.push_back(pi);
      bases.push_back(base.ring);
      d = Domain{r, r->fraction_field(), false, base.root, std::move(tower), std::move(bases),
                 base.text + "[" + var + "]/(" + pi.to_string() + ")"};
    } else {
      return d;
    }
  }
}

std::size_t symbol_degree(std::optional<std::size_t>& degree, std::size_t got, Cursor& c) {
  if (degree && *degree != got) c.error("a term of degree " + std::to_string(*degree));
  degree = got;
  return got;
}

}  // namespace

Domain parse_domain(const std::string& text) {
  Cursor c(text);
  Domain d = domain_at(c);
  c.expect_end();
  return d;
}

Value parse_element(const FieldPtr& field, const std::string& text) {
  return element_in(Cursor(text), field);
}

Poly parse_poly(const FieldPtr& field, const std::string& var, const std::string& text) {
  return poly_in(Cursor(text), field, var);
}

SymbolSum parse_symbol(const FieldPtr& field, const std::string& text,
                       std::optional<std::size_t> degree) {
  Cursor c(text);
  std::optional<SymbolSum> sum;
  if (c.accept_word("0")) {
    c.expect_end();
    return SymbolSum(field, degree.value_or(0));
  }
  bool first = true;
  while (first || !c.at_end()) {
    bool neg = false;
    if (first) {
      neg = c.accept('-');
    } else if (c.accept('-')) {
      neg = true;
    } else if (!c.accept('+')) {
      c.error("'+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    bool has_coeff = false;
    if (c.digit_start()) {
      coeff = c.integer();
      has_coeff = true;
      c.accept('*');
    }
    Tuple entries;
    if (c.accept('{')) {
      if (!c.accept('}')) {
        do {
          entries.push_back(element_until(c, field, ",}"));
        } while (c.accept(','));
        c.expect('}');
      }
    } else if (!has_coeff) {
      c.error("a symbol {...} or an integer");
    }
    if (neg) coeff = -coeff;
    symbol_degree(degree, entries.size(), c);
    if (!sum) sum.emplace(field, entries.size());
    for (const auto& v : entries)
      if (field->is_zero(v)) c.error("nonzero symbol entries");
    sum->add_term(std::move(entries), coeff);
  }
  return *sum;
}

Tuple parse_tuple(const FieldPtr& field, const std::string& text) {
  Cursor c(text);
  c.expect('(');
  Tuple out;
  if (!c.accept(')')) {
    do {
      out.push_back(element_until(c, field, ",)"));
    } while (c.accept(','));
    c.expect(')');
  }
  c.expect_end();
  return out;
}

Place parse_place(const FieldPtr& ft, const std::string& text) {
  if (ft->kind() != FieldKind::kRationalFunction)
    fail(ErrorCode::kInvalidArgument, "places need a rational function field domain");
  Cursor c(text);
  if (!c.accept_word("place")) c.error("\"place(\"");
  c.expect('(');
  if (c.accept_word("inf")) {
    c.expect(')');
    c.expect_end();
    return Place::infinity();
  }
  std::size_t at = c.pos();
  Poly pi = poly_until(c, ft->base(), ft->variable(), ")");
  c.expect(')');
  c.expect_end();
  if (pi.is_zero() || pi.degree() == 0) {
    c.seek(at);
    c.error("a polynomial of positive degree");
  }
  return Place::finite(pi);
}

ParamCurve parse_curve(const FieldPtr& base, const std::string& text) {
  Cursor c(text);
  if (!c.accept_word("curve")) c.error("\"curve(\"");
  c.expect('(');
  std::string var = c.ident();
  c.expect(';');
  FieldPtr fs = rational_functions(base, var);
  Tuple coords;
  do {
    coords.push_back(element_until(c, fs, ",)"));
  } while (c.accept(','));
  c.expect(')');
  c.expect_end();
  return ParamCurve::make(fs, std::move(coords));
}

ZeroCycle parse_cycle(const FieldPtr& base, const std::string& text,
                      std::optional<std::size_t> degree) {
  Cursor c(text);
  if (c.accept_word("0")) {
    c.expect_end();
    return ZeroCycle(base, degree.value_or(0));
  }
  std::optional<ZeroCycle> cycle;
  bool first = true;
  while (first || !c.at_end()) {
    bool neg = false;
    if (first) {
      neg = c.accept('-');
    } else if (c.accept('-')) {
      neg = true;
    } else if (!c.accept('+')) {
      c.error("'+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    if (c.digit_start()) {
      coeff = c.integer();
      c.accept('*');
    }
    if (neg) coeff = -coeff;
    c.expect('[');
    c.expect('(');
    std::size_t close = c.scan(")");
    Cursor coords = c.sub(close);
    c.seek(close);
    c.expect(')');
    FieldPtr field = base;
    if (c.accept_word("in")) {
      Domain d = as_plain(domain_at(c));
      if (!d.is_field()) c.error("a field after \"in\"");
      field = d.field;
    }
    c.expect(']');
    Tuple point;
    if (!coords.at_end()) {
      do {
        point.push_back(element_until(coords, field, ",)"));
      } while (coords.accept(','));
    }
    symbol_degree(degree, point.size(), c);
    if (!cycle) cycle.emplace(base, point.size());
    cycle->add(CubePoint{field, std::move(point)}, coeff);
  }
  return *cycle;
}

std::string format_tuple(const Field& f, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + f.format(t[i]);
  return s + ")";
}

std::string format_place(const Place& p) {
  return "place(" + (p.is_infinity() ? std::string("inf") : p.pi().to_string()) + ")";
}

}  // namespace milnor
