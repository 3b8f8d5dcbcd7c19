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

// Places of F(t), valuations, and tame symbols.

#ifndef MILNOR_RESIDUES_HPP_
#define MILNOR_RESIDUES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "milnor/rings.hpp"
#include "milnor/symbols.hpp"

namespace milnor {

// A monic irreducible pi of F[t], or the place at infinity (pi = 1/t).
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place finite(const Poly& pi) { return Place(pi.monic()); }

  bool is_infinity() const { return !pi_.has_value(); }
  const Poly& pi() const { return *pi_; }
  std::string to_string() const { return pi_ ? pi_->to_string() : "inf"; }
  // Finite places by polynomial order, infinity last.
  int compare(const Place& o) const;
  bool operator==(const Place& o) const { return compare(o) == 0; }

 private:
  Place() = default;
  explicit Place(Poly pi) : pi_(std::move(pi)) {}
  std::optional<Poly> pi_;
};

struct ValuationUnit {
  long i = 0;
  Value u;        // f = u * pi^i in F(t)
  Value residue;  // image of u in the residue field
};

// Residue field of a place of F(t) (F itself at infinity).
class PlaceResidue {
 public:
  // verify: certify irreducibility of a finite place.
  PlaceResidue(FieldPtr function_field, Place place, bool verify = true);

  const FieldPtr& function_field() const { return ft_; }
  const Place& place() const { return place_; }
  const FieldPtr& field() const { return kappa_; }
  const ResidueMap& map() const { return *map_; }

  ValuationUnit valuation_unit(const Value& f) const;

 private:
  FieldPtr ft_;
  Place place_;
  std::optional<ResidueMap> map_;
  FieldPtr kappa_;
};

ValuationUnit valuation_unit(const FieldPtr& function_field, const Value& f,
                             const Place& place);

enum class TameRoute { kPerTuple, kPerBasisTerm };

// Tame symbol at a place, canonicalized over the residue field.
// Errors: kInvalidArgument (degree 0 or not a rational function field).
SymbolSum tame_symbol(const SymbolSum& zeta, const PlaceResidue& place,
                      TameRoute route = TameRoute::kPerTuple,
                      const SymbolOptions& options = {});
// Same, without canonicalizing the result.
SymbolSum tame_symbol_raw(const SymbolSum& zeta, const PlaceResidue& place);
SymbolSum tame_symbol(const SymbolSum& zeta, const Place& place,
                      TameRoute route = TameRoute::kPerTuple,
                      const SymbolOptions& options = {});

// Canonical form when it is cheap to compute (finite fields and rational
// function fields over them); other sums are returned as they are.
SymbolSum tidy(const SymbolSum& s, const SymbolOptions& options = {});

// Monic irreducible factors of all entries, then infinity.
// Errors: kDegreeBoundExceeded, kUnsupportedDomain from factorization.
std::vector<Place> residue_support(const SymbolSum& zeta, const SymbolOptions& options = {});

}  // namespace milnor

#endif  // MILNOR_RESIDUES_HPP_
