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

#include "milnor/request.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "milnor/errors.hpp"
#include "milnor/parse.hpp"

namespace milnor {

using json = nlohmann::ordered_json;

namespace {

struct Arity {
  int symbols_min = 0;
  int symbols_max = 0;
  int places = 0;  // -1: any number, paired with symbols
  bool tuple = false;
  bool curve = false;
  bool cycle = false;
  bool degree_required = false;
};

const std::map<std::string, Arity>& arities() {
  static const std::map<std::string, Arity> table = {
      {"tame", {0, 1, 1, false}},  // symbol over a field, tuple over a ring
      {"norm", {1, 1, 0}},
      {"norm-descend", {1, 1, 0}},
      {"preimage", {0, 0, 0}},
      {"prescribe", {0, 64, -1, false, false, false, true}},
      {"gabber", {0, 0, 1, true}},
      {"feasible", {0, 0, 0, true}},
      {"eq", {1, 2, 0}},
      {"rho", {0, 0, 0, true}},
      {"rho-inverse", {0, 0, 0, false, false, true}},
      {"boundary", {0, 0, 0, false, true}},
      {"suslin", {0, 0, 0, false, true}},
      {"reciprocity", {1, 1, 0}},
  };
  return table;
}

[[noreturn]] void usage_error(const std::string& msg) { fail(ErrorCode::kInvalidArgument, msg); }

void check_arity(const Request& r) {
  auto it = arities().find(r.command);
  if (it == arities().end()) usage_error("unknown command '" + r.command + "'");
  const Arity& a = it->second;
  const std::string& c = r.command;
  if (r.domain.empty()) usage_error(c + " needs --domain");
  const int ns = static_cast<int>(r.symbols.size());
  const int np = static_cast<int>(r.places.size());
  if (c == "tame") {
    if (np != 1) usage_error("tame needs one --place");
    if ((ns == 1) == !r.tuple.empty() || ns > 1)
      usage_error("tame needs one --symbol (field) or a --tuple (ring)");
  } else if (a.places == -1) {
    if (np != ns) usage_error(c + " needs one --symbol per --place");
  } else {
    if (ns < a.symbols_min || ns > a.symbols_max)
      usage_error(c + " takes " + std::to_string(a.symbols_min) +
                  (a.symbols_max != a.symbols_min ? "-" + std::to_string(a.symbols_max) : "") +
                  " --symbol");
    if (np != a.places) usage_error(c + " takes " + std::to_string(a.places) + " --place");
    if (a.tuple != !r.tuple.empty()) usage_error(c + (a.tuple ? " needs" : " takes no") + " --tuple");
  }
  if (a.curve != !r.curve.empty()) usage_error(c + (a.curve ? " needs" : " takes no") + " --curve");
  if (a.cycle != !r.cycle.empty()) usage_error(c + (a.cycle ? " needs" : " takes no") + " --cycle");
  if (c != "tame" && a.places != -1 && !a.tuple && !r.tuple.empty())
    usage_error(c + " takes no --tuple");
  if (a.degree_required && !r.degree) usage_error(c + " needs --degree");
}

void build_app(CLI::App& app, Request& r) {
  app.add_option("command", r.command, "one of: tame, norm, norm-descend, preimage, prescribe, "
                                       "gabber, feasible, eq, rho, rho-inverse, boundary, "
                                       "suslin, reciprocity");
  app.add_option("--domain", r.domain, "domain expression, e.g. Fp(5)(t)");
  app.add_option("--symbol", r.symbols, "symbol sum, e.g. {t, 2}; repeatable")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--place", r.places, "place(poly) or place(inf); repeatable")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--tuple", r.tuple, "(e1, ..., en)");
  app.add_option("--curve", r.curve, "curve(s; g1, ..., gm)");
  app.add_option("--cycle", r.cycle, "zero-cycle, e.g. 2[(-1)]");
  app.add_option("--degree", r.degree, "K-theory degree");
  app.add_option("--seed", r.seed, "random seed");
  app.add_option("--max-degree", r.max_degree, "degree cap for factoring over Q");
  app.add_option("--prime-bound", r.prime_bound, "trial division bound");
  app.set_config("--config", "", "TOML file with the same keys as the flags");
}

json verdict_json(const Verdict& v) {
  json j;
  j["kind"] = v.kind_name();
  if (v.is_nonzero()) {
    j["witness"] = v.witness;
    j["value"] = v.value;
  }
  if (v.is_undecidable()) j["reason"] = v.reason;
  return j;
}

class Run {
 public:
  explicit Run(const Request& r) : req_(r) {
    if (r.max_degree) options_.factor.max_rational_degree = *r.max_degree;
    if (r.prime_bound) options_.prime_bound = *r.prime_bound;
    options_.factor.seed ^= r.seed;
  }

  void execute() {
    static const std::map<std::string, void (Run::*)()> table = {
        {"tame", &Run::tame},
        {"norm", &Run::norm},
        {"norm-descend", &Run::norm_descend},
        {"preimage", &Run::preimage},
        {"prescribe", &Run::prescribe},
        {"gabber", &Run::gabber},
        {"feasible", &Run::feasible},
        {"eq", &Run::eq},
        {"rho", &Run::rho_cmd},
        {"rho-inverse", &Run::rho_inverse_cmd},
        {"boundary", &Run::boundary_cmd},
        {"suslin", &Run::suslin},
        {"reciprocity", &Run::reciprocity},
    };
    domain_ = parse_domain(req_.domain);
    inputs_["domain"] = domain_.text;
    (this->*table.at(req_.command))();
  }

  json inputs_ = json::object();
  json result_ = json::object();
  json verification_ = json::array();
  json choices_ = json::array();
  std::string status_ = "ok";
  int exit_code_ = kExitOk;
  std::string headline_;

 private:
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    json j;
    j["check"] = name;
    j["outcome"] = ok ? "pass" : "fail";
    if (!detail.empty()) j["detail"] = detail;
    verification_.push_back(j);
    if (!ok) violation();
  }

  void verdict_check(const std::string& name, const Verdict& v) {
    json j;
    j["check"] = name;
    j["outcome"] = v.is_zero() ? "pass" : v.is_nonzero() ? "fail" : "undecidable";
    j["verdict"] = verdict_json(v);
    verification_.push_back(j);
    if (v.is_nonzero()) violation();
  }

  void violation() {
    status_ = "violation";
    exit_code_ = kExitViolation;
  }

  void add_choices(const std::vector<std::string>& cs) {
    for (const auto& c : cs) choices_.push_back(c);
  }

  const FieldPtr& function_field() {
    if (!domain_.function_field)
      fail(ErrorCode::kInvalidArgument,
           req_.command + " needs a rational function domain such as Fp(5)(t)");
    return domain_.field;
  }

  const FieldPtr& plain_field() {
    if (!domain_.function_field && !domain_.is_field())
      fail(ErrorCode::kInvalidArgument, req_.command + " needs a field domain");
    return domain_.field;
  }

  SymbolSum symbol_in(const FieldPtr& f, const std::string& text,
                      std::optional<std::size_t> degree) {
    SymbolSum s = parse_symbol(f, text, degree);
    inputs_["symbol"].push_back(s.to_string());
    return s;
  }

  Tuple tuple_in(const FieldPtr& f) {
    Tuple t = parse_tuple(f, req_.tuple);
    inputs_["tuple"] = format_tuple(*f, t);
    return t;
  }

  Place place_in(const FieldPtr& ft, const std::string& text) {
    Place p = parse_place(ft, text);
    inputs_["place"].push_back(format_place(p));
    return p;
  }

  // Degree-one sums print as {product}, the normal form in K_1 = F^x,
  // unless formal is set.
  static std::string symbol_text(const SymbolSum& s, bool formal = false) {
    if (formal || s.degree() != 1 || s.is_zero()) return s.to_string();
    Value v = k1_value(s);
    if (s.field()->is_one(v)) return "0";
    return SymbolSum::tuple(s.field(), {v}).to_string();
  }

  void symbol_result(const std::string& key, const SymbolSum& s, bool formal = false) {
    result_[key] = symbol_text(s, formal);
    if (headline_.empty()) headline_ = result_[key].get<std::string>();
  }

  // ---- commands ----

  void tame() {
    const FieldPtr& ft = function_field();
    Place pl = place_in(ft, req_.places[0]);
    if (domain_.is_field()) {
      if (req_.symbols.empty()) fail(ErrorCode::kInvalidArgument, "tame over a field needs --symbol");
      SymbolSum z = symbol_in(ft, req_.symbols[0], req_.degree);
      PlaceResidue pr(ft, pl);
      SymbolSum r = tame_symbol(z, pr, TameRoute::kPerTuple, options_);
      SymbolSum r2 = tame_symbol(z, pr, TameRoute::kPerBasisTerm, options_);
      symbol_result("symbol", r);
      result_["residue_field"] = pr.field()->describe();
      const std::size_t n = r.degree();
      if (r == r2)
        check("per-tuple and per-basis-term routes agree", true);
      else
        verdict_check("per-tuple and per-basis-term routes agree",
                      eq_equal(pr.field(), n, r, r2, options_));
      // {pi, x_2, ..., x_n} -> {x_2bar, ..., x_nbar}
      if (!pl.is_infinity()) {
        const Value pi = make_poly_value(*ft, pl.pi().coeffs());
        SymbolSum expected(pr.field(), n);
        bool shaped = !z.is_zero();
        for (const auto& [t, c] : z.terms()) {
          if (t.empty() || t[0] != pi) {
            shaped = false;
            break;
          }
          Tuple rest;
          for (std::size_t i = 1; i < t.size() && shaped; ++i) {
            ValuationUnit vu = pr.valuation_unit(t[i]);
            if (vu.i != 0) shaped = false;
            rest.push_back(vu.residue);
          }
          if (shaped) expected += SymbolSum::tuple(pr.field(), rest, c);
        }
        if (shaped)
          verdict_check("defining property {pi, x2, ...} -> {x2bar, ...}",
                        eq_equal(pr.field(), n, r, expected, options_));
      }
      return;
    }
    Tuple t = tuple_in(ft);
    FeasibilityResult fr = feasible_check(domain_.ring, ft, t, options_);
    if (!fr.ok()) {
      feasibility_violation(*fr.violation);
      return;
    }
    SymbolSum r = kt_tame(*fr.tuple, pl, options_);
    symbol_result("symbol", r);
    result_["residue_ring"] =
        pl.is_infinity() ? domain_.ring->describe()
                         : residue_ring(domain_.ring, Poly(ft->base(), pl.pi().coeffs(),
                                                           ft->variable()), false)
                               ->describe();
    PlaceResidue pr(ft, pl, false);
    SymbolSum field_side = tame_symbol(SymbolSum::tuple(ft, t), pr, TameRoute::kPerTuple, options_);
    verdict_check("agrees with the tame symbol over the fraction field",
                  eq_equal(pr.field(), r.degree(), r, field_side, options_));
  }

  void norm() {
    const FieldPtr& l = plain_field();
    if (domain_.function_field || l->kind() != FieldKind::kExtension)
      fail(ErrorCode::kInvalidArgument, "norm needs a domain ext(F, pi, t)");
    SymbolSum xi = symbol_in(l, req_.symbols[0], req_.degree);
    const FieldPtr f = l->base();
    Poly pi(f, l->modulus(), l->variable());
    PrescribeResult trace{SymbolSum(f, 1), {}, {}, false, false};
    SymbolSum n = bass_tate_norm(f, pi, xi, req_.seed, options_, &trace);
    symbol_result("symbol", n);
    result_["field"] = f->describe();
    add_choices(trace.choices);
    if (!xi.is_zero()) {
      for (const auto& pc : trace.checks)
        verdict_check("residue at " + format_place(pc.place), pc.verdict);
    }
    SymbolSum again = bass_tate_norm(f, pi, xi, req_.seed + 1, options_);
    verdict_check("independent of the seed", eq_equal(f, xi.degree(), n, again, options_));
    if (xi.degree() == 1) {
      SymbolSum det(f, 1);
      for (const auto& [t, c] : xi.terms())
        det.add_term({mult_matrix_det(pi, Poly(f, t[0].ext().coeffs, pi.var()))}, c);
      verdict_check("equals the determinant of multiplication", eq_equal(f, 1, n, det, options_));
    }
  }

  void norm_descend() {
    if (domain_.tower.empty())
      fail(ErrorCode::kInvalidArgument, "norm-descend needs a domain A[t]/(pi)");
    SymbolSum xi = symbol_in(domain_.field, req_.symbols[0], req_.degree);
    const RingPtr& a = domain_.bases.back();
    const Poly& pi = domain_.tower.back();
    DescentResult d = norm_into_ring(a, pi, xi, req_.seed, options_);
    symbol_result("symbol", d.xi_prime);
    result_["ring"] = a->describe();
    result_["field_norm"] = symbol_text(d.field_norm);
    add_choices(d.choices);
    check("entries are units of " + a->describe(), d.units_ok);
    verdict_check("equals the field norm", d.verification);
  }

  void preimage() {
    if (domain_.tower.empty())
      fail(ErrorCode::kInvalidArgument, "preimage needs a tower A[t1]/(pi1)...");
    PreimageResult p = milnor_preimage(domain_.root, domain_.tower, req_.seed, options_);
    symbol_result("symbol", p.xi);
    result_["ring"] = domain_.root->describe();
    result_["field_norm"] = symbol_text(p.tau);
    for (const auto& s : p.steps) {
      add_choices(s.choices);
      check("step entries are units", s.units_ok);
    }
    verdict_check("equals the norm of the coordinates", p.verification);
  }

  void prescribe() {
    const FieldPtr& ft = function_field();
    const std::size_t n = *req_.degree;
    if (n == 0) fail(ErrorCode::kInvalidArgument, "prescribe needs --degree >= 1");
    std::vector<PrescribeTarget> targets;
    for (std::size_t i = 0; i < req_.places.size(); ++i) {
      Place pl = place_in(ft, req_.places[i]);
      if (pl.is_infinity()) fail(ErrorCode::kInvalidArgument, "targets must be finite places");
      PlaceResidue pr(ft, pl);
      targets.push_back({pl, symbol_in(pr.field(), req_.symbols[i], n - 1)});
    }
    PrescribeResult res = prescribe_residues(domain_.ring, ft, targets, n, req_.seed, options_);
    symbol_result("symbol", res.zeta);
    add_choices(res.choices);
    for (const auto& pc : res.checks)
      verdict_check("residue at " + format_place(pc.place), pc.verdict);
  }

  void gabber() {
    const FieldPtr& ft = function_field();
    Place pl = place_in(ft, req_.places[0]);
    if (pl.is_infinity()) fail(ErrorCode::kInvalidArgument, "gabber needs a finite place");
    Tuple t = tuple_in(ft);
    if (t.empty()) fail(ErrorCode::kInvalidArgument, "gabber needs --tuple (x, y1, ..., yk)");
    std::vector<Poly> polys;
    for (const auto& v : t) {
      if (ft->is_zero(v) || v.frac().den.size() != 1)
        fail(ErrorCode::kInvalidArgument, "gabber entries must be nonzero polynomials");
      polys.emplace_back(ft->base(), v.frac().num, ft->variable());
    }
    const Poly pi(ft->base(), pl.pi().coeffs(), ft->variable());
    std::vector<Poly> ys(polys.begin() + 1, polys.end());
    GabberResult g = gabber_factor(domain_.ring, pi, polys[0], ys, req_.seed);
    result_["x1"] = g.x1.to_string();
    result_["x2"] = g.x2.to_string();
    result_["attempts"] = g.attempts;
    result_["method"] = g.method;
    headline_ = "(" + g.x1.to_string() + ", " + g.x2.to_string() + ")";
    choices_.push_back(g.method + " after " + std::to_string(g.attempts) + " candidates");
    const std::size_t d = pi.degree();
    check("x = x1 x2 mod pi", ((g.x1 * g.x2 - polys[0]) % pi).is_zero());
    if (d > 1) {
      check("deg x1 = deg x2 = deg pi - 1",
            g.x1.degree() == d - 1 && g.x2.degree() == d - 1);
      check("leading coefficients are units",
            domain_.ring->is_unit(g.x1.lead()) && domain_.ring->is_unit(g.x2.lead()));
      bool co = true;
      for (const auto& y : ys) co = co && comaximal(*domain_.ring, g.x1, y) &&
                                   comaximal(*domain_.ring, g.x2, y);
      check("comaximal with every y", co);
    }
  }

  void feasibility_violation(const FeasibilityViolation& v) {
    json j;
    j["condition"] = v.condition;
    j["message"] = v.message;
    if (v.a) j["a"] = v.a->to_string();
    if (v.b) j["b"] = v.b->to_string();
    result_["feasible"] = false;
    result_["violation"] = j;
    headline_ = "not feasible: " + v.message;
    violation();
  }

  void feasible() {
    const FieldPtr& ft = function_field();
    Tuple t = tuple_in(ft);
    FeasibilityResult fr = feasible_check(domain_.ring, ft, t, options_);
    if (!fr.ok()) {
      feasibility_violation(*fr.violation);
      return;
    }
    result_["feasible"] = true;
    json slots = json::array();
    for (const auto& fs : fr.tuple->slot_factors) {
      json s = json::array();
      for (const auto& p : fs) s.push_back(p.to_string());
      slots.push_back(s);
    }
    result_["factors"] = slots;
    json pairs = json::array();
    for (const auto& p : fr.tuple->pairs) {
      json j;
      j["slots"] = {p.slot_a + 1, p.slot_b + 1};
      j["a"] = p.a.to_string();
      j["b"] = p.b.to_string();
      j["verdict"] = p.verdict;
      pairs.push_back(j);
    }
    result_["pairs"] = pairs;
    headline_ = "feasible";
  }

  void eq() {
    const FieldPtr& f = plain_field();
    SymbolSum a = symbol_in(f, req_.symbols[0], req_.degree);
    Verdict v = Verdict::zero();
    if (req_.symbols.size() == 2) {
      SymbolSum b = symbol_in(f, req_.symbols[1], a.degree());
      v = eq_equal(f, a.degree(), a, b, options_);
    } else {
      v = eq_zero(f, a.degree(), a, options_);
    }
    result_["verdict"] = verdict_json(v);
    headline_ = v.to_string();
    if (v.is_nonzero()) violation();
  }

  void rho_cmd() {
    if (!domain_.function_field && !domain_.is_field()) {
      Tuple t = tuple_in(domain_.field);
      GraphCycle g = rho_graph(domain_.ring, t);
      result_["graph"] = g.to_string();
      result_["boundary"] = g.boundary().to_string();
      headline_ = g.to_string();
      check("graph cycle has no boundary", g.boundary().is_zero());
      return;
    }
    const FieldPtr& f = domain_.field;
    Tuple t = tuple_in(f);
    ZeroCycle z = rho(f, t);
    result_["cycle"] = z.to_string();
    headline_ = z.to_string();
    check("rho_inverse recovers the symbol",
          rho_inverse(z, req_.seed, options_) == SymbolSum::tuple(f, t));
  }

  void rho_inverse_cmd() {
    const FieldPtr& f = plain_field();
    ZeroCycle z = parse_cycle(f, req_.cycle, req_.degree);
    inputs_["cycle"] = z.to_string();
    SymbolSum s = rho_inverse(z, req_.seed, options_);
    symbol_result("symbol", s, true);
    bool rational = true;
    for (const auto& [k, e] : z.entries()) rational = rational && e.point.field->same_as(*f);
    if (rational && z.ambient() > 0) {
      check("rho(result) is the cycle", rho(s) == z);
    } else {
      SymbolSum again = rho_inverse(z, req_.seed + 1, options_);
      verdict_check("independent of the seed", eq_equal(f, s.degree(), s, again, options_));
    }
  }

  ParamCurve curve_in(const FieldPtr& f) {
    ParamCurve w = parse_curve(f, req_.curve);
    inputs_["curve"] = w.to_string();
    return w;
  }

  bool admissible(const ParamCurve& w) {
    AdmissibilityResult a = admissible_check(w, options_);
    if (a.ok) {
      check("admissible", true);
      return true;
    }
    result_["admissible"] = false;
    result_["violation"] = a.message;
    headline_ = "not admissible: " + a.message;
    check("admissible", false, a.message);
    return false;
  }

  void boundary_result(const BoundaryResult& b, const ParamCurve& w) {
    result_["cycle"] = b.cycle.to_string();
    json skipped = json::array();
    for (const auto& s : b.skipped) skipped.push_back(s);
    result_["outside_cube"] = skipped;
    const FieldPtr& fs = w.function_field;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
      const auto& fr = w.coords[i].frac();
      const auto& d = b.degrees[i];
      std::size_t dn = fr.num.size() - 1, dd = fr.den.size() - 1;
      long inf = d.infinity_valuation;
      bool ok = d.finite_zeros == dn && d.finite_poles == dd &&
                d.finite_zeros + static_cast<std::size_t>(std::max(inf, 0L)) ==
                    d.finite_poles + static_cast<std::size_t>(std::max(-inf, 0L));
      check("degree bookkeeping for g" + std::to_string(i + 1), ok,
            fs->format(w.coords[i]));
    }
  }

  void boundary_cmd() {
    const FieldPtr& f = plain_field();
    ParamCurve w = curve_in(f);
    if (!admissible(w)) return;
    BoundaryResult b = boundary(w, options_);
    boundary_result(b, w);
    headline_ = b.cycle.to_string();
  }

  void suslin() {
    const FieldPtr& f = plain_field();
    ParamCurve w = curve_in(f);
    if (!admissible(w)) return;
    SuslinReport r = suslin_check(w, req_.seed, options_);
    boundary_result(r.boundary, w);
    result_["symbol"] = r.symbol.to_string();
    result_["verdict"] = verdict_json(r.verdict);
    headline_ = r.symbol.to_string() + ", " + r.verdict.to_string();
    verdict_check("rho_inverse of the boundary vanishes", r.verdict);
  }

  void reciprocity() {
    const FieldPtr& ft = function_field();
    SymbolSum z = symbol_in(ft, req_.symbols[0], req_.degree);
    SymbolSum s = weil_reciprocity_sum(z, req_.seed, options_);
    symbol_result("symbol", s);
    const FieldPtr f = ft->base();
    json places = json::array();
    for (const auto& p : residue_support(z, options_)) places.push_back(format_place(p));
    result_["places"] = places;
    verdict_check("sum of norms of residues vanishes", eq_zero(f, s.degree(), s, options_));
  }

  const Request& req_;
  SymbolOptions options_;
  Domain domain_;
};

json request_json(const Request& r) {
  json j;
  j["domain"] = r.domain;
  if (!r.symbols.empty()) j["symbol"] = r.symbols;
  if (!r.places.empty()) j["place"] = r.places;
  if (!r.tuple.empty()) j["tuple"] = r.tuple;
  if (!r.curve.empty()) j["curve"] = r.curve;
  if (!r.cycle.empty()) j["cycle"] = r.cycle;
  if (r.degree) j["degree"] = *r.degree;
  if (r.max_degree) j["max_degree"] = *r.max_degree;
  if (r.prime_bound) j["prime_bound"] = *r.prime_bound;
  return j;
}

json error_json(const Error& e) {
  json j;
  j["code"] = static_cast<int>(e.code());
  j["name"] = error_code_name(e.code());
  j["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
  }
  return j;
}

Report finish(const std::string& command, std::uint64_t seed, json inputs, json result,
              json verification, json choices, long long ms, const std::string& status,
              json error, int exit_code, const std::string& headline) {
  Report rep;
  rep.doc["command"] = command;
  rep.doc["seed"] = seed;
  rep.doc["inputs"] = std::move(inputs);
  rep.doc["result"] = std::move(result);
  rep.doc["verification"] = std::move(verification);
  rep.doc["choices"] = std::move(choices);
  rep.doc["timing_ms"] = ms;
  rep.doc["status"] = status;
  rep.doc["error"] = std::move(error);
  rep.exit_code = exit_code;
  rep.summary = command + ": " + headline + " [" + status + "]";
  return rep;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, a] : arities()) v.push_back(k);
    return v;
  }();
  return names;
}

std::string usage() {
  Request r;
  CLI::App app{"Milnor K-theory tame symbols, norms and cubical cycles", "milnor"};
  build_app(app, r);
  return app.help();
}

std::vector<std::string> Request::to_args() const {
  std::vector<std::string> a = {command, "--domain=" + domain};
  for (const auto& s : symbols) a.push_back("--symbol=" + s);
  for (const auto& p : places) a.push_back("--place=" + p);
  if (!tuple.empty()) a.push_back("--tuple=" + tuple);
  if (!curve.empty()) a.push_back("--curve=" + curve);
  if (!cycle.empty()) a.push_back("--cycle=" + cycle);
  if (degree) a.push_back("--degree=" + std::to_string(*degree));
  a.push_back("--seed=" + std::to_string(seed));
  if (max_degree) a.push_back("--max-degree=" + std::to_string(*max_degree));
  if (prime_bound) a.push_back("--prime-bound=" + std::to_string(*prime_bound));
  return a;
}

Request parse_request(const std::vector<std::string>& args) {
  Request r;
  CLI::App app{"milnor", "milnor"};
  build_app(app, r);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Error& e) {
    usage_error(e.get_name() + ": " + e.what());
  }
  if (r.command.empty()) usage_error("missing command");
  check_arity(r);
  return r;
}

Report run_request(const Request& request) {
  const auto start = std::chrono::steady_clock::now();
  Run run(request);
  json error = nullptr;
  try {
    check_arity(request);
    run.execute();
  } catch (const Error& e) {
    error = error_json(e);
    run.status_ = "error";
    run.exit_code_ = kExitError;
    run.headline_ = e.what();
  } catch (const std::exception& e) {
    error = {{"code", 0}, {"name", "Internal"}, {"message", e.what()}};
    run.status_ = "error";
    run.exit_code_ = kExitError;
    run.headline_ = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  json inputs = request_json(request);
  for (const auto& [k, v] : run.inputs_.items()) inputs[k] = v;
  return finish(request.command, request.seed, std::move(inputs), std::move(run.result_),
                std::move(run.verification_), std::move(run.choices_), ms, run.status_,
                std::move(error), run.exit_code_, run.headline_);
}

Report run_args(const std::vector<std::string>& args) {
  Request r;
  try {
    r = parse_request(args);
  } catch (const Error& e) {
    return finish(r.command.empty() && !args.empty() ? args[0] : r.command, 0, json::object(),
                  json::object(), json::array(), json::array(), 0, "error", error_json(e),
                  kExitError, e.what());
  }
  return run_request(r);
}

}  // namespace milnor
