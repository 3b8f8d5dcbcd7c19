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

#include "milnor/residues.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

void require_function_field(const Field& f) {
  if (f.kind() != FieldKind::kRationalFunction)
    fail(ErrorCode::kInvalidArgument,
         "tame symbols need a rational function field, got " + f.describe());
}

}  // namespace

SymbolSum tame_symbol(const SymbolSum& zeta, const PlaceResidue& place, TameRoute route,
                      const SymbolOptions& options, bool canonical);

int Place::compare(const Place& o) const {
  if (is_infinity() || o.is_infinity()) return int(is_infinity()) - int(o.is_infinity());
  return pi_->compare(*o.pi_);
}

PlaceResidue::PlaceResidue(FieldPtr function_field, Place place, bool verify)
    : ft_(std::move(function_field)), place_(std::move(place)) {
  require_function_field(*ft_);
  if (!place_.is_infinity()) {
    Poly pi(ft_->base(), place_.pi().coeffs(), ft_->variable());
    map_.emplace(ft_->base(), pi, verify);
    kappa_ = map_->field();
  } else {
    kappa_ = ft_->base();
  }
}

ValuationUnit PlaceResidue::valuation_unit(const Value& f) const {
  if (ft_->is_zero(f)) fail(ErrorCode::kZeroArgument, "valuation of 0");
  const Field& k = *ft_->base();
  const auto& fr = f.frac();
  ValuationUnit out;
  if (place_.is_infinity()) {
    out.i = static_cast<long>(fr.den.size()) - static_cast<long>(fr.num.size());
    // u = f * t^i
    Value t = make_poly_value(*ft_, polyops::x(k));
    out.u = ft_->mul(f, ft_->pow(t, mpz_class(out.i)));
    out.residue = k.div(polyops::lead(fr.num), polyops::lead(fr.den));
    return out;
  }
  const Coeffs& pi = map_->pi().coeffs();
  out.i = poly_valuation(k, fr.num, pi) - poly_valuation(k, fr.den, pi);
  out.u = ft_->mul(f, ft_->pow(make_poly_value(*ft_, pi), mpz_class(-out.i)));
  out.residue = map_->reduce(out.u.frac());
  return out;
}

ValuationUnit valuation_unit(const FieldPtr& function_field, const Value& f,
                             const Place& place) {
  return PlaceResidue(function_field, place, false).valuation_unit(f);
}

SymbolSum tame_symbol_raw(const SymbolSum& zeta, const PlaceResidue& place) {
  return tame_symbol(zeta, place, TameRoute::kPerTuple, SymbolOptions{}, false);
}

SymbolSum tame_symbol(const SymbolSum& zeta, const PlaceResidue& place, TameRoute route,
                      const SymbolOptions& options) {
  return tame_symbol(zeta, place, route, options, true);
}

SymbolSum tidy(const SymbolSum& s, const SymbolOptions& options) {
  const Field& f = *s.field();
  bool cheap = f.is_finite() ||
               (f.kind() == FieldKind::kRationalFunction && f.base()->is_finite());
  return cheap ? canonicalize(s, options) : s;
}

SymbolSum tame_symbol(const SymbolSum& zeta, const PlaceResidue& place, TameRoute route,
                      const SymbolOptions& options, bool canonical) {
  require_function_field(*zeta.field());
  if (!zeta.field()->same_as(*place.function_field()))
    fail(ErrorCode::kDomainMismatch, "symbol over " + zeta.field()->describe() +
                                         ", place over " + place.function_field()->describe());
  if (zeta.degree() == 0)
    fail(ErrorCode::kInvalidArgument, "tame symbol of a degree-0 element");
  const FieldPtr& kappa = place.field();
  SymbolSum out(kappa, zeta.degree() - 1);
  SymbolSum input = route == TameRoute::kPerBasisTerm ? canonicalize(zeta, options) : zeta;
  for (const auto& [t, c] : input.terms()) {
    std::vector<ValuationUnit> parts;
    bool any = false;
    for (const auto& v : t) {
      parts.push_back(place.valuation_unit(v));
      any = any || parts.back().i != 0;
    }
    if (!any) continue;
    XiElem z = XiElem::identity(kappa);
    for (const auto& p : parts) z = xi_mul(z, p.i, p.residue);
    out += z.odd * c;
  }
  return canonical ? canonicalize(out, options) : out;
}

SymbolSum tame_symbol(const SymbolSum& zeta, const Place& place, TameRoute route,
                      const SymbolOptions& options) {
  return tame_symbol(zeta, PlaceResidue(zeta.field(), place), route, options);
}

std::vector<Place> residue_support(const SymbolSum& zeta, const SymbolOptions& options) {
  require_function_field(*zeta.field());
  const FieldPtr& k = zeta.field()->base();
  const std::string& var = zeta.field()->variable();
  std::vector<Place> out;
  auto add = [&](const Coeffs& c) {
    if (c.size() <= 1) return;
    for (const auto& [p, e] : poly_factor(Poly(k, c, var), options.factor).factors) {
      Place pl = Place::finite(p);
      if (std::find(out.begin(), out.end(), pl) == out.end()) out.push_back(pl);
    }
  };
  for (const auto& [t, c] : zeta.terms()) {
    for (const auto& v : t) {
      add(v.frac().num);
      add(v.frac().den);
    }
  }
  std::sort(out.begin(), out.end(), [](const Place& a, const Place& b) { return a.compare(b) < 0; });
  out.push_back(Place::infinity());
  return out;
}

}  // namespace milnor
