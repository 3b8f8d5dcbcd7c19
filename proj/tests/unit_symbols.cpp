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

#include <doctest.h>

#include "milnor/errors.hpp"
#include "milnor/oracles.hpp"
#include "milnor/residues.hpp"
#include "support.hpp"

using namespace milnor;
using namespace support;

namespace {

FieldPtr fu(long p) { return rational_functions(prime_field(p), "u"); }

Value uel(const FieldPtr& f, const std::vector<long>& num, const std::vector<long>& den = {1}) {
  return make_fraction(*f, poly(f->base(), num, "u").coeffs(), poly(f->base(), den, "u").coeffs());
}

FieldPtr ft_over(const FieldPtr& f) { return rational_functions(f, "t"); }

// Small random nonzero element of F_p, Q or F_p(u).
Value any_nonzero(const FieldPtr& f, Rng& rng) {
  if (f->kind() != FieldKind::kRationalFunction) return small_nonzero(*f, rng);
  const FieldPtr& k = f->base();
  Poly num = random_poly(k, rng() % 3, rng, "u");
  Poly den = random_poly(k, rng() % 2, rng, "u");
  return make_fraction(*f, num.coeffs(), den.coeffs());
}

// An element x with x != 0, 1.
Value steinberg_x(const FieldPtr& f, Rng& rng) {
  for (;;) {
    Value x = any_nonzero(f, rng);
    if (!f->is_one(x)) return x;
  }
}

}  // namespace

TEST_CASE("symbol examples") {
  auto q = rationals();
  CHECK(symbol(q, {qv(4), qv(3)}) == symbol(q, {qv(2), qv(3)}) * 2);
  CHECK(symbol(q, {qv(1), qv(5)}).is_zero());
  CHECK(symbol(q, {qv(-2), qv(3)}) == symbol(q, {qv(-1), qv(3)}) + symbol(q, {qv(2), qv(3)}));
  CHECK(symbol(q, {qv(4), qv(3)}).to_string() == "2{2, 3}");
  CHECK_THROWS_AS(symbol(q, {qv(0), qv(3)}), milnor::Error);
}

TEST_CASE("product examples") {
  auto q = rationals();
  SymbolSum a = SymbolSum::tuple(q, {qv(2)});
  SymbolSum b = SymbolSum::tuple(q, {qv(3)});
  CHECK(product(a, b) == SymbolSum::tuple(q, {qv(2), qv(3)}));
  CHECK(product(SymbolSum::scalar(q, 3), a) == a * 3);
  CHECK(product(SymbolSum::scalar(q, 0), a).is_zero());
  try {
    product(a, SymbolSum::tuple(prime_field(5), {Value(std::int64_t{2})}));
    FAIL("expected DomainMismatch");
  } catch (const milnor::Error& e) {
    CHECK(e.code() == ErrorCode::kDomainMismatch);
  }
}

TEST_CASE("xi_mul examples") {
  auto f7 = prime_field(7);
  Value three = f7->from_int(3);
  XiElem one = xi_mul(XiElem::identity(f7), 4, three);
  CHECK(one.n == 1);
  CHECK(one.even == SymbolSum::tuple(f7, {three}));
  CHECK(one.odd == SymbolSum::scalar(f7, 4));

  XiElem z = xi_mul(xi_mul(XiElem::identity(f7), 2, f7->one()), 1, three);
  CHECK(z.odd.degree() == 1);
  CHECK(canonicalize(z.odd) == symbol(f7, {f7->from_int(2)}));
  CHECK(eq_equal(f7, 1, z.odd, SymbolSum::tuple(f7, {f7->from_int(2)})).is_zero());

  for (auto f : {prime_field(7), rationals()}) {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      Value u = small_nonzero(*f, rng);
      XiElem t = xi_mul(xi_mul(XiElem::identity(f), 1, u), 1, f->neg(u));
      CHECK(eq_zero(f, 1, t.odd).is_zero());
    }
  }
}

TEST_CASE("xi_mul degree bookkeeping") {
  Rng rng(4);
  auto f = prime_field(11);
  XiElem z = XiElem::identity(f);
  for (std::size_t n = 0; n < 4; ++n) {
    z = xi_mul(z, static_cast<long>(rng() % 5) - 2, small_nonzero(*f, rng));
    CHECK(z.n == n + 1);
    CHECK(z.even.degree() == n + 1);
    CHECK(z.odd.degree() == n);
  }
}

TEST_CASE("symbol is multilinear") {
  for (auto f : {rationals(), prime_field(7), fu(5)}) {
    CAPTURE(f->describe());
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = 1 + rng() % 3, slot = rng() % n;
      Tuple t;
      for (std::size_t i = 0; i < n; ++i) t.push_back(any_nonzero(f, rng));
      Value x = any_nonzero(f, rng), y = any_nonzero(f, rng);
      Tuple tx = t, ty = t, txy = t;
      tx[slot] = x;
      ty[slot] = y;
      txy[slot] = f->mul(x, y);
      CHECK(symbol(f, txy) == canonicalize(symbol(f, tx) + symbol(f, ty)));
    }
  }
}

TEST_CASE("product is associative and distributive") {
  auto q = rationals();
  Rng rng(6);
  auto rand_sum = [&](std::size_t deg) {
    SymbolSum s(q, deg);
    for (int k = 0; k < 2; ++k) {
      Tuple t;
      for (std::size_t i = 0; i < deg; ++i) t.push_back(small_nonzero(*q, rng));
      s += symbol(q, t) * static_cast<long>(rng() % 5 - 2);
    }
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    SymbolSum a = rand_sum(1), b = rand_sum(1), c = rand_sum(2), d = rand_sum(2);
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
    CHECK(canonicalize(product(a, b)) == canonicalize(product(a, b)));
    CHECK(product(a, c + d) == product(a, c) + product(a, d));
  }
}

TEST_CASE("valuation_unit examples") {
  auto q = rationals();
  auto qt = ft_over(q);
  Value t2 = fn(qt, poly(q, {0, 0, 1}));
  ValuationUnit a = valuation_unit(qt, t2, Place::finite(poly(q, {0, 1})));
  CHECK(a.i == 2);
  CHECK(q->is_one(a.residue));
  ValuationUnit b = valuation_unit(qt, fn(qt, poly(q, {0, 3})), Place::infinity());
  CHECK(b.i == -1);
  CHECK(b.residue == qv(3));
  ValuationUnit c = valuation_unit(qt, fn(qt, poly(q, {1, 1}), poly(q, {-1, 1})),
                                   Place::finite(poly(q, {-1, 1})));
  CHECK(c.i == -1);
  CHECK(c.residue == qv(2));
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Poly pi = random_irreducible_q(q, 1 + rng() % 2, rng);
    Poly num = random_poly(q, rng() % 4, rng), den = random_poly(q, rng() % 3, rng);
    Value f = fn(qt, num * pi, den);
    Place pl = Place::finite(pi);
    ValuationUnit vu = valuation_unit(qt, f, pl);
    Value back = qt->mul(vu.u, qt->pow(fn(qt, pi), vu.i));
    CHECK(back == f);
  }
}

TEST_CASE("tame symbol examples") {
  auto f5 = prime_field(5);
  auto f5t = ft_over(f5);
  Value t5 = fn(f5t, poly(f5, {0, 1}));
  SymbolSum a = tame_symbol(SymbolSum::tuple(f5t, {t5, f5t->from_int(2)}),
                            Place::finite(poly(f5, {0, 1})));
  CHECK(a == symbol(f5, {f5->from_int(2)}));

  auto f7 = prime_field(7);
  auto f7t = ft_over(f7);
  Value t7 = fn(f7t, poly(f7, {0, 1}));
  SymbolSum b = tame_symbol(SymbolSum::tuple(f7t, {f7t->mul(t7, t7), f7t->mul(t7, f7t->from_int(3))}),
                            Place::finite(poly(f7, {0, 1})));
  CHECK(b == symbol(f7, {f7->from_int(2)}));

  auto q = rationals();
  auto qt = ft_over(q);
  SymbolSum c = tame_symbol(SymbolSum::tuple(qt, {fn(qt, poly(q, {0, 1})), qt->from_int(5)}),
                            Place::infinity());
  CHECK(c == -SymbolSum::tuple(q, {qv(5)}));

  SymbolSum units = SymbolSum::tuple(qt, {fn(qt, poly(q, {1, 1})), fn(qt, poly(q, {3, 0, 1}))});
  CHECK(tame_symbol(units, Place::finite(poly(q, {0, 1}))).is_zero());
}

TEST_CASE("residue_support examples") {
  auto f5 = prime_field(5);
  auto ft = ft_over(f5);
  auto places = residue_support(SymbolSum::tuple(ft, {fn(ft, poly(f5, {0, 1})), ft->from_int(2)}));
  REQUIRE(places.size() == 2);
  CHECK(places[0] == Place::finite(poly(f5, {0, 1})));
  CHECK(places[1].is_infinity());
  auto consts = residue_support(SymbolSum::tuple(ft, {ft->from_int(2), ft->from_int(3)}));
  REQUIRE(consts.size() == 1);
  CHECK(consts[0].is_infinity());
  auto four = residue_support(
      SymbolSum::tuple(ft, {fn(ft, poly(f5, {1, 0, 1})), fn(ft, poly(f5, {-1, 1}))}));
  std::vector<std::string> names;
  for (const auto& p : four) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"t+2", "t+3", "t+4", "inf"});
}

TEST_CASE("tame symbol routes and canonicalization agree") {
  for (long p : {5L, 7L}) {
    auto f = prime_field(p);
    auto ft = ft_over(f);
    Rng rng(8 + p);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 2 + rng() % 2;
      SymbolSum zeta(ft, n);
      for (int k = 0; k < 2; ++k) {
        Tuple tup;
        for (std::size_t i = 0; i < n; ++i)
          tup.push_back(fn(ft, random_poly(f, rng() % 3, rng), random_poly(f, rng() % 2, rng)));
        zeta += SymbolSum::tuple(ft, tup, 1 + static_cast<long>(rng() % 3));
      }
      for (const auto& place : residue_support(zeta)) {
        PlaceResidue pr(ft, place);
        SymbolSum a = tame_symbol(zeta, pr, TameRoute::kPerTuple);
        CHECK(a == tame_symbol(zeta, pr, TameRoute::kPerBasisTerm));
        CHECK(a == tame_symbol(canonicalize(zeta), pr));
      }
    }
  }
}

TEST_CASE("oracle examples") {
  auto q = rationals();
  CHECK(eq_zero(q, 2, SymbolSum::tuple(q, {qv(-1), qv(-1)})).is_nonzero());
  CHECK(eq_zero(q, 2, SymbolSum::tuple(q, {qv(2), qv(3)})).is_nonzero());
  CHECK(eq_zero(q, 2, SymbolSum::tuple(q, {qv(-1), qv(2)})).is_zero());
  CHECK(eq_zero(q, 2, SymbolSum::tuple(q, {qv(2, 7), qv(5, 7)})).is_zero());
  auto f = fu(5);
  Value u = uel(f, {0, 1});
  Verdict v = eq_zero(f, 2, SymbolSum::tuple(f, {u, f->sub(u, f->one())}));
  CHECK(v.is_nonzero());
  CHECK_FALSE(v.witness.empty());
  CHECK(eq_zero(f, 2, SymbolSum::tuple(f, {u, f->sub(f->one(), u)})).is_zero());

  CHECK(hilbert_real(-1, -1) == -1);
  CHECK(hilbert_real(2, 3) == 1);
  CHECK(hilbert_real(-2, -3) == -1);
  auto f5 = prime_field(5);
  CHECK(k1_discrete_log(*f5, f5->one()) == 0);
  CHECK(k1_discrete_log(*f5, f5->from_int(2)) == 1);
  CHECK(k1_discrete_log(*f5, f5->from_int(4)) == 2);
}

TEST_CASE("oracle soundness on consequences of the relations") {
  struct Case {
    FieldPtr field;
    std::size_t n;
    int trials;
  };
  std::vector<Case> cases = {{prime_field(7), 1, 500}, {rationals(), 1, 500},
                             {prime_field(7), 2, 500}, {rationals(), 2, 500},
                             {fu(5), 2, 500},          {fu(7), 2, 500},
                             {fu(5), 3, 200}};
  for (const auto& cs : cases) {
    const FieldPtr& f = cs.field;
    CAPTURE(f->describe());
    CAPTURE(cs.n);
    Rng rng(9);
    for (int trial = 0; trial < cs.trials; ++trial) {
      SymbolSum s(f, cs.n);
      Tuple t;
      for (std::size_t i = 0; i < cs.n; ++i) t.push_back(any_nonzero(f, rng));
      std::size_t slot = rng() % cs.n;
      Value a = any_nonzero(f, rng), b = any_nonzero(f, rng);
      // Multilinear rearrangement, valid in every degree.
      Tuple tab = t, ta = t, tb = t;
      tab[slot] = f->mul(a, b);
      ta[slot] = a;
      tb[slot] = b;
      s += SymbolSum::tuple(f, tab) - SymbolSum::tuple(f, ta) - SymbolSum::tuple(f, tb);
      if (cs.n >= 2) {
        std::size_t j = rng() % (cs.n - 1);
        Value x = steinberg_x(f, rng);
        Tuple st = t, neg = t, ab = t, ba = t;
        st[j] = x;
        st[j + 1] = f->sub(f->one(), x);
        neg[j] = x;
        neg[j + 1] = f->neg(x);
        ab[j] = a;
        ab[j + 1] = b;
        ba[j] = b;
        ba[j + 1] = a;
        long c = static_cast<long>(rng() % 5) - 2;
        s += SymbolSum::tuple(f, st, c) + SymbolSum::tuple(f, neg) + SymbolSum::tuple(f, ab) +
             SymbolSum::tuple(f, ba);
      }
      Verdict v = eq_zero(f, cs.n, s);
      CHECK(v.is_zero());
    }
  }
}

TEST_CASE("oracle returns Undecidable outside its scope") {
  auto q = rationals();
  CHECK(eq_zero(q, 3, SymbolSum::tuple(q, {qv(2), qv(3), qv(5)})).is_undecidable());
  auto k = extension(q, poly(q, {-2, 0, 1}).coeffs(), "t");
  CHECK(eq_zero(k, 2, SymbolSum::tuple(k, {k->from_int(3), k->from_int(5)})).is_undecidable());
  auto qu = rational_functions(q, "u");
  CHECK(eq_zero(qu, 2, SymbolSum::tuple(qu, {uel(qu, {0, 1}), qu->from_int(2)})).is_undecidable());
  auto f = fu(5);
  auto l = extension(f, Coeffs{f->neg(uel(f, {0, 1})), f->zero(), f->one()}, "t");
  CHECK(eq_zero(l, 2, SymbolSum::tuple(l, {l->from_int(2), make_ext(*l, Coeffs{f->zero(), f->one()})}))
            .is_undecidable());
  CHECK(eq_zero(rational_functions(q, "u"), 3,
                SymbolSum::tuple(qu, {uel(qu, {0, 1}), qu->from_int(2), qu->from_int(3)}))
            .is_undecidable());
}
