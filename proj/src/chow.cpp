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

#include "milnor/chow.hpp"

#include "milnor/errors.hpp"

namespace milnor {

namespace {

std::string join(const Field& f, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += f.format(t[i]);
  }
  return s + ")";
}

void check_in_cube(const Field& f, const Tuple& t) {
  for (const auto& v : t) {
    if (f.is_zero(v)) fail(ErrorCode::kNotInCube, "coordinate 0 lies on a face");
    if (f.is_one(v)) fail(ErrorCode::kNotInCube, "coordinate 1 lies outside the cube");
  }
}

bool is_constant(const Value& g) {
  return g.frac().num.size() <= 1 && g.frac().den.size() <= 1;
}

std::size_t place_degree(const Place& p) { return p.is_infinity() ? 1 : p.pi().degree(); }

std::string place_text(const Place& p, const std::string& var) {
  return p.is_infinity() ? var + " = inf" : p.to_string() + " = 0";
}

}  // namespace

std::string CubePoint::to_string(const Field* base) const {
  std::string s = join(*field, coords);
  if (base == nullptr || !field->same_as(*base)) s += " in " + field->describe();
  return s;
}

std::string CubePoint::key() const { return field->describe() + "|" + join(*field, coords); }

void ZeroCycle::add(const CubePoint& p, const mpz_class& c) {
  if (p.coords.size() != n_)
    fail(ErrorCode::kInvalidArgument, "point " + p.to_string() + " is not in the " +
                                          std::to_string(n_) + "-cube");
  if (!is_subfield(*p.field, *base_))
    fail(ErrorCode::kDomainMismatch,
         p.field->describe() + " does not lie over " + base_->describe());
  check_in_cube(*p.field, p.coords);
  if (c == 0) return;
  std::string k = p.key();
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    entries_.emplace(k, Entry{p, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) entries_.erase(it);
}

ZeroCycle& ZeroCycle::operator+=(const ZeroCycle& o) {
  if (!base_->same_as(*o.base_) || n_ != o.n_)
    fail(ErrorCode::kDomainMismatch, "cycles over different cubes");
  for (const auto& [k, e] : o.entries_) add(e.point, e.coeff);
  return *this;
}

bool ZeroCycle::operator==(const ZeroCycle& o) const {
  if (!base_->same_as(*o.base_) || n_ != o.n_ || entries_.size() != o.entries_.size())
    return false;
  for (const auto& [k, e] : entries_) {
    auto it = o.entries_.find(k);
    if (it == o.entries_.end() || it->second.coeff != e.coeff) return false;
  }
  return true;
}

std::string ZeroCycle::to_string() const {
  if (entries_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, e] : entries_) {
    mpz_class c = e.coeff;
    if (!first) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (c != 1) s += c.get_str();
    s += "[" + e.point.to_string(base_.get()) + "]";
    first = false;
  }
  return s;
}

ParamCurve ParamCurve::make(FieldPtr function_field, Tuple coords) {
  if (function_field->kind() != FieldKind::kRationalFunction)
    fail(ErrorCode::kInvalidArgument, "curves are parametrized by a rational function field");
  if (coords.size() < 1) fail(ErrorCode::kInvalidArgument, "curve needs coordinates");
  bool moving = false;
  for (const auto& g : coords) {
    if (function_field->is_zero(g)) fail(ErrorCode::kZeroEntry, "curve coordinate is 0");
    if (function_field->is_one(g)) fail(ErrorCode::kInvalidArgument, "curve coordinate is 1");
    if (!is_constant(g)) moving = true;
  }
  if (!moving) fail(ErrorCode::kInvalidArgument, "all curve coordinates are constant");
  return ParamCurve{std::move(function_field), std::move(coords)};
}

FieldPtr ParamCurve::base() const { return function_field->base(); }

std::string ParamCurve::to_string() const {
  std::string s = "curve(" + function_field->variable() + ";";
  for (std::size_t i = 0; i < coords.size(); ++i)
    s += (i ? ", " : " ") + function_field->format(coords[i]);
  return s + ")";
}

namespace {

struct Locus {
  Place place;
  std::shared_ptr<PlaceResidue> residue;
  std::vector<ValuationUnit> vals;
};

std::vector<Locus> loci(const ParamCurve& w, const SymbolOptions& options) {
  const FieldPtr& ft = w.function_field;
  SymbolSum all(ft, w.coords.size());
  all.add_term(w.coords, 1);
  std::vector<Locus> out;
  for (const auto& p : residue_support(all, options)) {
    auto pr = std::make_shared<PlaceResidue>(ft, p, false);
    std::vector<ValuationUnit> vals;
    for (const auto& g : w.coords) vals.push_back(pr->valuation_unit(g));
    out.push_back({p, pr, std::move(vals)});
  }
  return out;
}

}  // namespace

AdmissibilityResult admissible_check(const ParamCurve& w, const SymbolOptions& options) {
  AdmissibilityResult out;
  const std::string& var = w.function_field->variable();
  for (const auto& l : loci(w, options)) {
    std::vector<std::size_t> faces;
    bool outside = false;
    for (std::size_t i = 0; i < l.vals.size(); ++i) {
      if (l.vals[i].i != 0)
        faces.push_back(i);
      else if (l.residue->field()->is_one(l.vals[i].residue))
        outside = true;
    }
    if (faces.size() < 2 || outside) continue;
    out.ok = false;
    out.place = l.place;
    out.faces = faces;
    out.message = "at " + place_text(l.place, var) + " coordinates";
    for (std::size_t k = 0; k < faces.size(); ++k)
      out.message += (k ? ", " : " ") + std::to_string(faces[k] + 1);
    out.message += " meet faces simultaneously";
    return out;
  }
  return out;
}

BoundaryResult boundary(const ParamCurve& w, const SymbolOptions& options) {
  const FieldPtr& ft = w.function_field;
  const FieldPtr f = ft->base();
  const std::size_t m = w.coords.size();
  const std::string& var = ft->variable();
  BoundaryResult out{ZeroCycle(f, m - 1), std::vector<FaceDegrees>(m), {}};
  AdmissibilityResult adm = admissible_check(w, options);
  if (!adm.ok) fail(ErrorCode::kNotAdmissible, adm.message);
  for (const auto& l : loci(w, options)) {
    const std::size_t d = place_degree(l.place);
    for (std::size_t i = 0; i < m; ++i) {
      const long e = l.vals[i].i;
      if (l.place.is_infinity()) {
        out.degrees[i].infinity_valuation = e;
      } else if (e > 0) {
        out.degrees[i].finite_zeros += static_cast<std::size_t>(e) * d;
      } else if (e < 0) {
        out.degrees[i].finite_poles += static_cast<std::size_t>(-e) * d;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      const long e = l.vals[i].i;
      if (e == 0) continue;
      CubePoint p{l.residue->field(), {}};
      bool outside = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        if (p.field->is_one(l.vals[j].residue)) outside = true;
        p.coords.push_back(l.vals[j].residue);
      }
      if (outside) {
        out.skipped.push_back("g" + std::to_string(i + 1) + " at " + place_text(l.place, var));
        continue;
      }
      mpz_class c = e;
      if (i % 2 == 1) c = -c;
      out.cycle.add(p, c);
    }
  }
  return out;
}

ZeroCycle rho(const FieldPtr& field, const Tuple& entries) {
  ZeroCycle z(field, entries.size());
  check_in_cube(*field, entries);
  z.add(CubePoint{field, entries}, 1);
  return z;
}

ZeroCycle rho(const SymbolSum& s) {
  ZeroCycle z(s.field(), s.degree());
  for (const auto& [t, c] : s.terms()) {
    check_in_cube(*s.field(), t);
    z.add(CubePoint{s.field(), t}, c);
  }
  return z;
}

ZeroCycle GraphCycle::boundary() const {
  return ZeroCycle(ring->fraction_field(), entries.size());
}

std::string GraphCycle::to_string() const {
  return "graph" + join(*ring->fraction_field(), entries) + " over " + ring->describe();
}

GraphCycle rho_graph(const RingPtr& ring, const Tuple& entries) {
  const Field& f = *ring->fraction_field();
  for (const auto& v : entries) {
    if (f.is_one(v)) fail(ErrorCode::kNotInCube, "coordinate 1 lies outside the cube");
    if (!ring->is_unit(v))
      fail(ErrorCode::kNotInCube, f.format(v) + " is not a unit of " + ring->describe());
  }
  return GraphCycle{ring, entries};
}

SymbolSum rho_inverse(const ZeroCycle& z, std::uint64_t seed, const SymbolOptions& options) {
  const FieldPtr& f = z.base();
  SymbolSum out(f, z.ambient());
  for (const auto& [k, e] : z.entries()) {
    SymbolSum xi = z.ambient() == 0 ? SymbolSum::scalar(e.point.field, e.coeff)
                                    : SymbolSum::tuple(e.point.field, e.point.coords, e.coeff);
    std::uint64_t step = 0;
    while (!xi.field()->same_as(*f)) {
      if (xi.field()->kind() != FieldKind::kExtension)
        fail(ErrorCode::kUnsupportedTower,
             xi.field()->describe() + " is not a tower of simple extensions over " +
                 f->describe());
      xi = bass_tate_norm(xi, seed + step++, options);
    }
    out += xi;
  }
  return out;
}

SuslinReport suslin_check(const ParamCurve& w, std::uint64_t seed, const SymbolOptions& options) {
  BoundaryResult b = boundary(w, options);
  SymbolSum s = rho_inverse(b.cycle, seed, options);
  Verdict v = eq_zero(s.field(), s.degree(), s, options);
  return SuslinReport{std::move(b), std::move(s), std::move(v)};
}

}  // namespace milnor
