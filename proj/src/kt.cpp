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

#include "milnor/kt.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1000000;

Value poly_value(const FieldPtr& ft, const Poly& p) { return make_poly_value(*ft, p.coeffs()); }

FieldPtr function_field_over(const FieldPtr& base, const std::string& var) {
  return rational_functions(base, var);
}

// Finite places of the entries of symbol sums, factoring each polynomial once.
class SupportFinder {
 public:
  SupportFinder(FieldPtr ft, const SymbolOptions& options)
      : ft_(std::move(ft)), options_(options) {}

  void mark_irreducible(const Poly& p) {
    Poly m = p.monic();
    cache_[key(m.coeffs())] = {Place::finite(m)};
  }

  std::vector<Place> finite_places(const SymbolSum& s) {
    std::vector<Place> out;
    auto add = [&](const Coeffs& c) {
      if (c.size() <= 1) return;
      for (const auto& pl : places_of(polyops::monic(*ft_->base(), c)))
        if (std::find(out.begin(), out.end(), pl) == out.end()) out.push_back(pl);
    };
    for (const auto& [t, c] : s.terms()) {
      for (const auto& v : t) {
        add(v.frac().num);
        add(v.frac().den);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Place& a, const Place& b) { return a.compare(b) < 0; });
    return out;
  }

 private:
  std::string key(const Coeffs& c) const {
    return polyops::format(*ft_->base(), c, ft_->variable());
  }

  const std::vector<Place>& places_of(const Coeffs& monic) {
    std::string k = key(monic);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    std::vector<Place> places;
    for (const auto& [p, e] :
         poly_factor(Poly(ft_->base(), monic, ft_->variable()), options_.factor).factors)
      places.push_back(Place::finite(p));
    return cache_.emplace(k, std::move(places)).first->second;
  }

  FieldPtr ft_;
  SymbolOptions options_;
  std::map<std::string, std::vector<Place>> cache_;
};

bool same_extension(const Field& kappa, const Field& base, const Poly& pi) {
  return kappa.kind() == FieldKind::kExtension && kappa.base()->same_as(base) &&
         kappa.modulus() == pi.coeffs() && kappa.variable() == pi.var();
}

struct PendingPlace {
  Place place;
  std::shared_ptr<PlaceResidue> residue;
  SymbolSum remaining;
  std::optional<SymbolSum> target;
  bool processed = false;
};

std::string poly_text(const Poly& p) { return p.to_string(); }

}  // namespace

// ---- feasibility ----

FeasibilityResult feasible_check(const RingPtr& ring, const FieldPtr& function_field,
                                 const Tuple& entries, const SymbolOptions& options) {
  const FieldPtr& f = ring->fraction_field();
  if (function_field->kind() != FieldKind::kRationalFunction ||
      !function_field->base()->same_as(*f))
    fail(ErrorCode::kDomainMismatch,
         function_field->describe() + " is not a rational function field over " + f->describe());
  const std::string& var = function_field->variable();
  FeasibilityResult out;
  FeasibleTuple tup{ring, function_field, entries, {}, {}};
  for (const auto& v : entries) {
    if (function_field->is_zero(v)) fail(ErrorCode::kZeroEntry, "tuple entry is zero");
    std::vector<Poly> factors;
    for (const Coeffs* part : {&v.frac().num, &v.frac().den}) {
      Poly p(f, *part, var);
      if (!ring->contains(p)) {
        out.violation = FeasibilityViolation{
            1, "coefficients of " + p.to_string() + " are not in " + ring->describe(), p, {}};
        return out;
      }
      if (!ring->is_unit(p.lead())) {
        out.violation = FeasibilityViolation{
            1, "leading coefficient of " + p.to_string() + " is not a unit of " + ring->describe(),
            p, {}};
        return out;
      }
      if (p.degree() == 0) continue;
      for (auto& [g, e] : ring_factor(ring, p).factors) {
        (void)options;
        if (std::find(factors.begin(), factors.end(), g) == factors.end()) factors.push_back(g);
      }
    }
    tup.slot_factors.push_back(std::move(factors));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      for (const auto& a : tup.slot_factors[i]) {
        for (const auto& b : tup.slot_factors[j]) {
          if (a == b) {
            tup.pairs.push_back({i, j, a, b, "associate"});
          } else if (comaximal(*ring, a, b)) {
            tup.pairs.push_back({i, j, a, b, "comaximal"});
          } else {
            out.violation = FeasibilityViolation{
                2, a.to_string() + " and " + b.to_string() +
                       " are neither associate nor comaximal (resultant " +
                       f->format(resultant(a, b)) + ")",
                a, b};
            return out;
          }
        }
      }
    }
  }
  out.tuple = std::move(tup);
  return out;
}

SymbolSum kt_tame(const FeasibleTuple& x, const Place& place, const SymbolOptions& options) {
  const FieldPtr& ft = x.function_field;
  const FieldPtr f = ft->base();
  const std::string& var = ft->variable();
  RingPtr b = x.ring;
  bool verify = false;
  if (!place.is_infinity()) {
    Poly pi(f, place.pi().coeffs(), var);
    b = residue_ring(x.ring, pi, false);
    verify = pi.degree() > 1;
  }
  PlaceResidue pr(ft, place, verify);
  // Expand every entry into unit constants and irreducible generators.
  SymbolSum expanded(ft, x.entries.size());
  std::vector<std::vector<std::pair<Value, long>>> slots;
  for (const auto& v : x.entries) {
    std::vector<std::pair<Value, long>> slot;
    const auto& fr = v.frac();
    Value c = polyops::lead(fr.num);
    if (!x.ring->is_unit(c)) fail(ErrorCode::kNotFeasible, "leading coefficient is not a unit");
    slot.emplace_back(make_poly_value(*ft, polyops::constant(*f, c)), 1);
    for (int sign : {1, -1}) {
      Poly p(f, sign == 1 ? fr.num : fr.den, var);
      if (p.degree() == 0) continue;
      for (const auto& [g, e] : ring_factor(x.ring, p).factors)
        slot.emplace_back(poly_value(ft, g), sign * static_cast<long>(e));
    }
    slots.push_back(std::move(slot));
  }
  Tuple cur(slots.size());
  auto rec = [&](auto&& self, std::size_t i, long coeff) -> void {
    if (i == slots.size()) {
      expanded.add_term(cur, coeff);
      return;
    }
    for (const auto& [g, e] : slots[i]) {
      cur[i] = g;
      self(self, i + 1, coeff * e);
    }
  };
  rec(rec, 0, 1);
  SymbolSum r = tame_symbol_raw(expanded, pr);
  for (const auto& [t, c] : r.terms())
    for (const auto& v : t)
      if (!b->is_unit(v))
        fail(ErrorCode::kNotFeasible,
             "tame symbol entry " + pr.field()->format(v) + " is not a unit of " + b->describe());
  return tidy(r, options);
}

// ---- Gabber ----

GabberResult gabber_factor(const RingPtr& ring, const Poly& pi, const Poly& x,
                           const std::vector<Poly>& ys, Rng& rng) {
  const FieldPtr& f = ring->fraction_field();
  if (pi.is_zero() || pi.degree() == 0)
    fail(ErrorCode::kInvalidArgument, "gabber_factor needs deg pi >= 1");
  if (x.is_zero() || gcd(x, pi).degree() != 0)
    fail(ErrorCode::kNotCoprime, x.to_string() + " is not coprime to " + pi.to_string());
  const std::size_t d = pi.degree();
  const Poly xr = x % pi;
  const std::string& var = pi.var();
  if (d == 1) {
    Value c = xr.lead();
    if (!ring->is_unit(c))
      fail(ErrorCode::kNotFound, "residue " + f->format(c) + " is not a unit of " +
                                     ring->describe());
    return {Poly::constant(f, f->one(), var), Poly::constant(f, c, var), 0, "degree-one"};
  }
  auto admissible = [&](const Poly& p) {
    if (p.is_zero() || p.degree() != d - 1) return false;
    if (!ring->is_unit(p.lead()) || !ring->contains(p)) return false;
    for (const auto& y : ys)
      if (!comaximal(*ring, p, y)) return false;
    return true;
  };
  auto complete = [&](const Poly& x1) -> std::optional<Poly> {
    if (!admissible(x1)) return std::nullopt;
    Poly s, t;
    Poly g = xgcd(x1, pi, s, t);
    if (g.degree() != 0) return std::nullopt;
    Poly x2 = (xr * s) % pi;
    if (!admissible(x2)) return std::nullopt;
    return x2;
  };
  auto finish = [&](const Poly& x1, const Poly& x2, std::size_t attempts, const char* method) {
    if (!((x1 * x2 - x) % pi).is_zero())
      fail(ErrorCode::kNotFound, "gabber postcondition failed");
    return GabberResult{x1, x2, attempts, method};
  };
  const std::size_t cap = 64 * (ys.size() + 2);
  for (std::size_t attempt = 1; attempt <= cap; ++attempt) {
    Coeffs c;
    for (std::size_t i = 0; i + 1 < d; ++i) c.push_back(ring->sample(rng));
    c.push_back(ring->sample_unit(rng));
    Poly x1(f, std::move(c), var);
    if (auto x2 = complete(x1)) return finish(x1, *x2, attempt, "sampled");
  }
  if (ring->is_field() && f->is_finite()) {
    const std::uint64_t q = f->size()->get_ui();
    std::uint64_t count = q - 1;
    bool small = true;
    for (std::size_t i = 0; i + 1 < d && small; ++i) {
      if (count > kExhaustiveLimit / q) small = false;
      count *= q;
    }
    if (small) {
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs c;
        std::uint64_t rest = idx / (q - 1);
        for (std::size_t i = 0; i + 1 < d; ++i) {
          c.push_back(f->element_at(rest % q));
          rest /= q;
        }
        c.push_back(f->element_at(1 + idx % (q - 1)));
        Poly x1(f, std::move(c), var);
        if (auto x2 = complete(x1)) return finish(x1, *x2, cap + idx + 1, "exhaustive");
      }
      fail(ErrorCode::kNotFound, "no factorization of " + x.to_string() + " modulo " +
                                     pi.to_string() + " (exhaustive search over " +
                                     std::to_string(count) + " candidates)");
    }
  }
  fail(ErrorCode::kNotFound, "no factorization of " + x.to_string() + " modulo " +
                                 pi.to_string() + " after " + std::to_string(cap) + " attempts");
}

GabberResult gabber_factor(const RingPtr& ring, const Poly& pi, const Poly& x,
                           const std::vector<Poly>& ys, std::uint64_t seed) {
  Rng rng(seed);
  return gabber_factor(ring, pi, x, ys, rng);
}

// ---- residue prescription ----

PrescribeResult prescribe_residues(const RingPtr& ring, const FieldPtr& function_field,
                                   const std::vector<PrescribeTarget>& targets, std::size_t n,
                                   std::uint64_t seed, const SymbolOptions& options) {
  const FieldPtr& ft = function_field;
  if (ft->kind() != FieldKind::kRationalFunction)
    fail(ErrorCode::kInvalidArgument, ft->describe() + " is not a rational function field");
  const FieldPtr f = ft->base();
  const std::string& var = ft->variable();
  if (!ring->fraction_field()->same_as(*f))
    fail(ErrorCode::kDomainMismatch,
         "ring " + ring->describe() + " does not match " + ft->describe());
  if (n == 0) fail(ErrorCode::kInvalidArgument, "prescribed element must have degree >= 1");

  SupportFinder support(ft, options);
  std::vector<PendingPlace> pending;
  auto find = [&](const Place& p) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (pending[i].place == p) return i;
    return std::nullopt;
  };
  for (const auto& tg : targets) {
    if (tg.place.is_infinity())
      fail(ErrorCode::kInvalidArgument, "prescribed residues must be at finite places");
    Poly pi(f, tg.place.pi().coeffs(), var);
    Place place = Place::finite(pi);
    if (find(place)) fail(ErrorCode::kInvalidArgument, "repeated place " + place.to_string());
    if (!ring->is_field()) residue_ring(ring, pi, false);
    bool known = same_extension(*tg.residue.field(), *f, pi.monic());
    auto pr = std::make_shared<PlaceResidue>(ft, place, !known && pi.degree() > 1);
    if (!tg.residue.field()->same_as(*pr->field()))
      fail(ErrorCode::kDomainMismatch, "residue at " + place.to_string() + " must lie in " +
                                           pr->field()->describe() + ", got " +
                                           tg.residue.field()->describe());
    if (!tg.residue.is_zero() && tg.residue.degree() != n - 1)
      fail(ErrorCode::kInvalidArgument, "residue at " + place.to_string() + " has degree " +
                                            std::to_string(tg.residue.degree()));
    support.mark_irreducible(pi);
    SymbolSum target = tidy(tg.residue, options);
    pending.push_back({place, pr, target, target, false});
  }

  Rng rng(seed);
  PrescribeResult result{SymbolSum(ft, n), {}, {}, false, false};
  for (;;) {
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].processed) continue;
      if (!next) {
        next = i;
        continue;
      }
      const auto& a = pending[i].place.pi();
      const auto& b = pending[*next].place.pi();
      if (a.degree() > b.degree() || (a.degree() == b.degree() && a.compare(b) < 0)) next = i;
    }
    if (!next) break;
    pending[*next].processed = true;
    const Place place = pending[*next].place;
    const auto pr = pending[*next].residue;
    const SymbolSum target = pending[*next].remaining;
    if (target.is_zero()) continue;
    const Poly pi(f, place.pi().coeffs(), var);
    const std::size_t d = pi.degree();

    SymbolSum g(ft, n);
    const Value pi_value = poly_value(ft, pi);
    for (const auto& [tuple, c] : target.terms()) {
      std::vector<std::vector<Value>> slots;
      std::vector<Poly> ys = {pi};
      for (const auto& v : tuple) {
        Poly lift(f, pr->map().lift(v), var);
        if (lift.degree() == 0) {
          if (!ring->is_unit(lift.lead()))
            fail(ErrorCode::kNotFeasible, "residue entry " + pr->field()->format(v) +
                                              " is not a unit of " + ring->describe());
          slots.push_back({poly_value(ft, lift)});
          continue;
        }
        if (!ring->is_field() && ring->is_unit(lift.lead()) && ring->contains(lift) &&
            std::all_of(ys.begin(), ys.end(),
                        [&](const Poly& y) { return comaximal(*ring, lift, y); })) {
          result.choices.push_back("at " + poly_text(pi) + ": kept lift " + poly_text(lift));
          slots.push_back({poly_value(ft, lift)});
          ys.push_back(lift);
          continue;
        }
        try {
          GabberResult gb = gabber_factor(ring, pi, lift, ys, rng);
          result.choices.push_back("at " + poly_text(pi) + ": " + poly_text(lift) + " = (" +
                                   poly_text(gb.x1) + ")(" + poly_text(gb.x2) + "), " +
                                   gb.method + " after " + std::to_string(gb.attempts));
          slots.push_back({poly_value(ft, gb.x1), poly_value(ft, gb.x2)});
          ys.push_back(gb.x1);
          ys.push_back(gb.x2);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNotFound || !ring->is_field()) throw;
          result.choices.push_back("at " + poly_text(pi) + ": " + poly_text(lift) +
                                   " kept as lift (" + e.what() + ")");
          slots.push_back({poly_value(ft, lift)});
          ys.push_back(lift);
        }
      }
      Tuple cur(tuple.size() + 1);
      cur[0] = pi_value;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == slots.size()) {
          g.add_term(cur, c);
          return;
        }
        for (const auto& v : slots[i]) {
          cur[i + 1] = v;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
    result.zeta += g;

    for (const Place& q : support.finite_places(g)) {
      if (q == place) continue;
      if (q.pi().degree() >= d)
        fail(ErrorCode::kNotFound, "degree filtration did not descend: " + q.to_string() +
                                       " appeared while clearing " + place.to_string());
      auto idx = find(q);
      if (idx && pending[*idx].processed)
        fail(ErrorCode::kNotFound, "residue reappeared at " + q.to_string());
      if (!idx) {
        auto qr = std::make_shared<PlaceResidue>(ft, q, false);
        pending.push_back({q, qr, SymbolSum(qr->field(), n - 1), std::nullopt, false});
        idx = pending.size() - 1;
      }
      pending[*idx].remaining -= tidy(tame_symbol_raw(g, *pending[*idx].residue), options);
    }
  }

  result.zeta = tidy(result.zeta, options);
  std::vector<Place> places = support.finite_places(result.zeta);
  for (const auto& p : pending)
    if (p.target && std::find(places.begin(), places.end(), p.place) == places.end())
      places.push_back(p.place);
  result.verified = true;
  result.fully_verified = true;
  for (const auto& q : places) {
    auto idx = find(q);
    auto qr = idx ? pending[*idx].residue : std::make_shared<PlaceResidue>(ft, q, false);
    SymbolSum diff = tame_symbol_raw(result.zeta, *qr);
    if (idx && pending[*idx].target) diff -= *pending[*idx].target;
    diff = tidy(diff, options);
    Verdict v = diff.is_zero() ? Verdict::zero() : eq_zero(qr->field(), n - 1, diff, options);
    if (v.is_nonzero()) result.verified = false;
    if (!v.is_zero()) result.fully_verified = false;
    result.checks.push_back({q, v});
  }
  return result;
}

// ---- norms ----

SymbolSum bass_tate_norm(const FieldPtr& base, const Poly& pi, const SymbolSum& xi,
                         std::uint64_t seed, const SymbolOptions& options,
                         PrescribeResult* trace) {
  if (xi.is_zero()) return SymbolSum(base, xi.degree());
  FieldPtr ft = function_field_over(base, pi.var());
  Poly p(base, pi.coeffs(), pi.var());
  PrescribeResult res = prescribe_residues(field_ring(base), ft, {{Place::finite(p), xi}},
                                           xi.degree() + 1, seed, options);
  SymbolSum out = -tame_symbol_raw(res.zeta, PlaceResidue(ft, Place::infinity()));
  if (trace != nullptr) *trace = std::move(res);
  return tidy(out, options);
}

SymbolSum bass_tate_norm(const SymbolSum& xi, std::uint64_t seed, const SymbolOptions& options) {
  const FieldPtr& l = xi.field();
  if (l->kind() != FieldKind::kExtension)
    fail(ErrorCode::kUnsupportedTower, l->describe() + " is not a simple extension");
  return bass_tate_norm(l->base(), Poly(l->base(), l->modulus(), l->variable()), xi, seed,
                        options);
}

DescentResult norm_into_ring(const RingPtr& ring, const Poly& pi, const SymbolSum& xi,
                             std::uint64_t seed, const SymbolOptions& options) {
  const FieldPtr f = ring->fraction_field();
  if (!pi.field()->same_as(*f))
    fail(ErrorCode::kDomainMismatch, pi.to_string() + " is not over " + f->describe());
  const Poly monic = pi.monic();
  bool known = pi.degree() > 1 && same_extension(*xi.field(), *f, monic);
  RingPtr b = residue_ring(ring, pi, pi.degree() > 1 && !known);
  for (const auto& [t, c] : xi.terms())
    for (const auto& v : t)
      if (!b->is_unit(v))
        fail(ErrorCode::kNotFeasible,
             xi.field()->format(v) + " is not a unit of " + b->describe());
  const std::size_t n = xi.degree();
  DescentResult out{SymbolSum(f, n), true, SymbolSum(f, n), Verdict::zero(), {}};
  if (!xi.is_zero()) {
    FieldPtr ft = function_field_over(f, pi.var());
    PrescribeResult res = prescribe_residues(ring, ft, {{Place::finite(monic), xi}}, n + 1,
                                             seed, options);
    out.choices = res.choices;
    if (!res.verified)
      fail(ErrorCode::kNotFound, "prescribed element failed its residue checks");
    SymbolSum raw = -tame_symbol_raw(res.zeta, PlaceResidue(ft, Place::infinity()));
    for (const auto& [t, c] : raw.terms())
      for (const auto& v : t)
        if (!ring->is_unit(v)) out.units_ok = false;
    out.xi_prime = tidy(raw, options);
  }
  out.field_norm = bass_tate_norm(f, monic, xi, seed ^ 0x5bd1e995ULL, options);
  out.verification = eq_equal(f, n, out.xi_prime, out.field_norm, options);
  return out;
}

PreimageResult milnor_preimage(const RingPtr& ring, const std::vector<Poly>& tower,
                               std::uint64_t seed, const SymbolOptions& options) {
  if (tower.empty()) fail(ErrorCode::kInvalidArgument, "empty tower");
  if (tower.size() > static_cast<std::size_t>(kMaxExtensionHeight))
    fail(ErrorCode::kTowerTooDeep, "tower of height " + std::to_string(tower.size()) +
                                       " exceeds " + std::to_string(kMaxExtensionHeight));
  std::vector<RingPtr> rings = {ring};
  std::vector<Value> coords;
  std::vector<FieldPtr> coord_fields;
  for (const auto& pi : tower) {
    const RingPtr& a = rings.back();
    if (!pi.field()->same_as(*a->fraction_field()))
      fail(ErrorCode::kDomainMismatch, pi.to_string() + " is not over " +
                                           a->fraction_field()->describe());
    RingPtr b = residue_ring(a, pi);
    const FieldPtr& l = b->fraction_field();
    if (pi.degree() == 1) {
      Poly m = pi.monic();
      coords.push_back(l->neg(m.coeff(0)));
    } else {
      coords.push_back(make_ext(*l, polyops::x(*l->base())));
    }
    coord_fields.push_back(l);
    rings.push_back(b);
  }
  const FieldPtr& top = rings.back()->fraction_field();
  Tuple entries;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Value v = embed(*top, *coord_fields[i], coords[i]);
    if (!rings.back()->is_unit(v))
      fail(ErrorCode::kNotFeasible,
           "coordinate " + top->format(v) + " is not a unit of " + rings.back()->describe());
    entries.push_back(v);
  }
  const std::size_t n = entries.size();
  PreimageResult out{SymbolSum::tuple(top, entries), SymbolSum::tuple(top, entries),
                     Verdict::zero(), {}};
  for (std::size_t i = tower.size(); i-- > 0;) {
    DescentResult step = norm_into_ring(rings[i], tower[i], out.xi, seed + i, options);
    out.xi = step.xi_prime;
    out.tau = bass_tate_norm(rings[i]->fraction_field(), tower[i], out.tau,
                             seed + 1000 + i, options);
    out.steps.push_back(std::move(step));
  }
  out.verification = eq_equal(ring->fraction_field(), n, out.xi, out.tau, options);
  return out;
}

SymbolSum weil_reciprocity_sum(const SymbolSum& zeta, std::uint64_t seed,
                               const SymbolOptions& options) {
  const FieldPtr& ft = zeta.field();
  if (ft->kind() != FieldKind::kRationalFunction || zeta.degree() == 0)
    fail(ErrorCode::kInvalidArgument, "reciprocity needs a positive-degree element of F(t)");
  const FieldPtr f = ft->base();
  SymbolSum sum(f, zeta.degree() - 1);
  for (const auto& place : residue_support(zeta, options)) {
    PlaceResidue pr(ft, place, false);
    SymbolSum r = tidy(tame_symbol_raw(zeta, pr), options);
    if (place.is_infinity() || place.pi().degree() == 1)
      sum += r;
    else
      sum += bass_tate_norm(f, Poly(f, place.pi().coeffs(), ft->variable()), r, seed, options);
  }
  return tidy(sum, options);
}

}  // namespace milnor
