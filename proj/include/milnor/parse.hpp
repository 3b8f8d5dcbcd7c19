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

// Text grammar for domains, field elements, symbols, tuples, places,
// curves and zero-cycles.
//
//   domain  := base suffix*
//   base    := "Fp(" int ")" | "Q" | "ext(" domain "," poly "," ident ")"
//   suffix  := "(" ident ")"                   rational functions
//            | "[" ident "]@loc[" poly,... "]"  localization of k[u]
//            | "(" ident ")@loc[" poly,... "]"  same
//            | "[" ident "]/(" poly ")"         quotient A[t]/(pi)
//   expr    := usual + - * / ^ with integers, tower variables, implicit *
//   symbol  := "0" | ["-"] term (("+" | "-") term)*
//   term    := [int ["*"]] "{" [expr ("," expr)*] "}" | int
//   tuple   := "(" expr ("," expr)* ")"
//   place   := "place(" (poly | "inf") ")"
//   curve   := "curve(" ident ";" expr ("," expr)* ")"
//   cycle   := "0" | ["-"] cterm (("+" | "-") cterm)*
//   cterm   := [int ["*"]] "[" tuple ["in" domain] "]"

#ifndef MILNOR_PARSE_HPP_
#define MILNOR_PARSE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "milnor/chow.hpp"

namespace milnor {

struct Domain {
  // Coefficient ring (a field ring for field domains).
  RingPtr ring;
  // Field of elements: Frac(ring), or Frac(ring)(t) for function domains.
  FieldPtr field;
  bool function_field = false;
  // Quotient suffixes in order: tower[i] lies over bases[i], bases[0] = root.
  RingPtr root;
  std::vector<Poly> tower;
  std::vector<RingPtr> bases;
  std::string text;

  bool is_field() const { return ring->is_field(); }
};

// All parsers throw ParseError(line, column, expected) on malformed text and
// library errors for well-formed but invalid input.
Domain parse_domain(const std::string& text);
Value parse_element(const FieldPtr& field, const std::string& text);
// Polynomial over `field` in `var` (not a tower variable of field).
Poly parse_poly(const FieldPtr& field, const std::string& var, const std::string& text);
SymbolSum parse_symbol(const FieldPtr& field, const std::string& text,
                       std::optional<std::size_t> degree = std::nullopt);
Tuple parse_tuple(const FieldPtr& field, const std::string& text);
// Place of the rational function field `ft`.
Place parse_place(const FieldPtr& ft, const std::string& text);
ParamCurve parse_curve(const FieldPtr& base, const std::string& text);
ZeroCycle parse_cycle(const FieldPtr& base, const std::string& text,
                      std::optional<std::size_t> degree = std::nullopt);

std::string format_tuple(const Field& f, const Tuple& t);
std::string format_place(const Place& p);

}  // namespace milnor

#endif  // MILNOR_PARSE_HPP_
