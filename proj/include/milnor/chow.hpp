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

// Cubical zero-cycles, parametrized curves in the n-cube and their boundary,
// the graph map rho and its inverse through norms.

#ifndef MILNOR_CHOW_HPP_
#define MILNOR_CHOW_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnor/kt.hpp"
#include "milnor/oracles.hpp"

namespace milnor {

// An L-valued point of the cube; every coordinate lies outside {0, 1}.
struct CubePoint {
  FieldPtr field;
  Tuple coords;

  // "(a, b)" and " in L" when L differs from `base`.
  std::string to_string(const Field* base = nullptr) const;
  std::string key() const;
};

class ZeroCycle {
 public:
  struct Entry {
    CubePoint point;
    mpz_class coeff;
  };

  ZeroCycle(FieldPtr base, std::size_t n) : base_(std::move(base)), n_(n) {}

  const FieldPtr& base() const { return base_; }
  std::size_t ambient() const { return n_; }
  const std::map<std::string, Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // Errors: kNotInCube, kDomainMismatch, kInvalidArgument (arity).
  void add(const CubePoint& p, const mpz_class& c);
  ZeroCycle& operator+=(const ZeroCycle& o);
  bool operator==(const ZeroCycle& o) const;

  // "2[(-1)] - [(s, s+1) in L]", "0" when empty.
  std::string to_string() const;

 private:
  FieldPtr base_;
  std::size_t n_;
  std::map<std::string, Entry> entries_;
};

// (g_1, ..., g_{n+1}) in F(s), at least one non-constant, none 0 or 1.
struct ParamCurve {
  FieldPtr function_field;
  Tuple coords;

  // Errors: kInvalidArgument, kZeroEntry.
  static ParamCurve make(FieldPtr function_field, Tuple coords);
  FieldPtr base() const;
  std::string to_string() const;
};

struct AdmissibilityResult {
  bool ok = true;
  std::optional<Place> place;
  std::vector<std::size_t> faces;  // 0-based coordinates meeting a face there
  std::string message;
};

AdmissibilityResult admissible_check(const ParamCurve& w, const SymbolOptions& options = {});

struct FaceDegrees {
  // Sums of multiplicity times residue degree.
  std::size_t finite_zeros = 0;
  std::size_t finite_poles = 0;
  long infinity_valuation = 0;
};

struct BoundaryResult {
  ZeroCycle cycle;
  std::vector<FaceDegrees> degrees;
  // Face loci skipped because another coordinate is 1 there.
  std::vector<std::string> skipped;
};

// Sum of (-1)^{i-1} (zeros - poles of g_i). Errors: kNotAdmissible.
BoundaryResult boundary(const ParamCurve& w, const SymbolOptions& options = {});

// F-rational point (f_1, ..., f_n). Errors: kNotInCube.
ZeroCycle rho(const FieldPtr& field, const Tuple& entries);
// Sum of c * rho(tuple) over the terms of s.
ZeroCycle rho(const SymbolSum& s);

// Graph of units (f_1, ..., f_n) of a semi-local ring, intersected with the
// cube; it has no boundary.
struct GraphCycle {
  RingPtr ring;
  Tuple entries;

  ZeroCycle boundary() const;
  std::string to_string() const;
};

// Errors: kNotInCube.
GraphCycle rho_graph(const RingPtr& ring, const Tuple& entries);

// Sum of c * N_{L/F}{z_1, ..., z_n}. Errors: kUnsupportedTower.
SymbolSum rho_inverse(const ZeroCycle& z, std::uint64_t seed = 0,
                      const SymbolOptions& options = {});

struct SuslinReport {
  BoundaryResult boundary;
  SymbolSum symbol;
  Verdict verdict;
};

SuslinReport suslin_check(const ParamCurve& w, std::uint64_t seed = 0,
                          const SymbolOptions& options = {});

}  // namespace milnor

#endif  // MILNOR_CHOW_HPP_
