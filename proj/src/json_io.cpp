#include "foliage/json_io.hpp"

#include <algorithm>
#include <set>

#include "foliage/errors.hpp"

namespace foliage::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const Json& require(const Json& obj, const char* key, const char* what) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

Variables vars_from_json(const Json& j) {
  if (!j.is_array()) fail("vars must be an array of strings");
  Variables vars;
  for (const auto& v : j) {
    if (!v.is_string()) fail("vars must be an array of strings");
    vars.push_back(v.get<std::string>());
  }
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) fail("duplicate variable names");
  return vars;
}

std::string rational_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail("rational coefficients must be strings like \"-3/2\"");
}

}  // namespace

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const char* what) {
  if (!obj.is_object()) fail(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : obj.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail(std::string(what) + ": unknown field '" + key + "'");
}

Json to_json(const GaussianRational& q) { return Json::array({q.re().get_str(), q.im().get_str()}); }

GaussianRational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail("complex rational must be [re, im]");
    return GaussianRational::parse(rational_string(j[0]), rational_string(j[1]));
  }
  return GaussianRational::parse(rational_string(j));
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) fail("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", to_json(c)}, {"exps", m.exponents()}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  check_keys(j, {"vars", "terms"}, "polynomial");
  Variables vars = vars_from_json(require(j, "vars", "polynomial"));
  Polynomial p(vars);
  const Json& terms = require(j, "terms", "polynomial");
  if (!terms.is_array()) fail("polynomial terms must be an array");
  for (const auto& t : terms) {
    check_keys(t, {"coeff", "exps"}, "polynomial term");
    const Json& exps = require(t, "exps", "polynomial term");
    if (!exps.is_array() || exps.size() != vars.size()) fail("exponent vector length must match vars");
    std::vector<unsigned> e;
    for (const auto& x : exps) {
      if (!x.is_number_unsigned()) fail("exponents must be non-negative integers");
      e.push_back(x.get<unsigned>());
    }
    p.add_term(Monomial(std::move(e)), rational_from_json(require(t, "coeff", "polynomial term")));
  }
  return p;
}

Json to_json(const PForm& form) {
  Json comps = Json::object();
  for (const auto& [index, c] : form.components()) comps[component_key(form.vars(), index)] = to_json(c);
  return {{"p", form.p()}, {"vars", form.vars()}, {"components", comps}};
}

PForm form_from_json(const Json& j) {
  check_keys(j, {"p", "vars", "components"}, "form");
  const Json& pj = require(j, "p", "form");
  if (!pj.is_number_integer() || pj.get<int>() < 0) fail("form degree p must be a non-negative integer");
  const int p = pj.get<int>();
  const Json& comps = require(j, "components", "form");
  if (!comps.is_object()) fail("form components must be an object");

  Variables vars;
  if (j.contains("vars")) {
    vars = vars_from_json(j["vars"]);
  } else if (!comps.empty()) {
    vars = polynomial_from_json(comps.begin().value()).vars();
  } else {
    fail("zero form needs explicit vars");
  }
  PForm form(vars, p);
  for (const auto& [key, value] : comps.items()) {
    FormIndex index = parse_component_key(vars, key);
    if (static_cast<int>(index.size()) != p) fail("component '" + key + "' does not match p");
    Polynomial c = polynomial_from_json(value);
    if (c.vars() != vars) fail("component '" + key + "' has a different variable context");
    form.add_component(index, c);
  }
  return form;
}

Json to_json(const FormSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"K", s.order()}, {"coeffs", coeffs}, {"truncated", !s.polynomial_in_t()}};
}

FormSeries series_from_json(const Json& j) {
  check_keys(j, {"K", "coeffs", "truncated"}, "series");
  const Json& coeffs = require(j, "coeffs", "series");
  if (!coeffs.is_array() || coeffs.empty()) fail("series coeffs must be a non-empty array");
  std::vector<PForm> forms;
  for (const auto& c : coeffs) forms.push_back(form_from_json(c));
  if (j.contains("K")) {
    if (!j["K"].is_number_unsigned() || j["K"].get<std::size_t>() + 1 != forms.size())
      fail("series K must equal the number of coefficients minus one");
  }
  bool truncated = j.value("truncated", false);
  return FormSeries(std::move(forms), !truncated);
}

Json to_json(const FactoredFiber& fiber) {
  Json factors = Json::array();
  for (const auto& f : fiber.factors()) factors.push_back(to_json(f));
  Json out = {{"factors", factors}};
  if (!fiber.default_generators()) {
    Json m = Json::array();
    for (const auto& row : fiber.generator_matrix()) {
      Json r = Json::array();
      for (const auto& q : row) r.push_back(to_json(q));
      m.push_back(r);
    }
    out["lambda_matrix"] = m;
  }
  return out;
}

FactoredFiber fiber_from_json(const Json& j) {
  check_keys(j, {"factors", "lambda_matrix"}, "fiber");
  const Json& fj = require(j, "factors", "fiber");
  if (!fj.is_array()) fail("fiber factors must be an array");
  std::vector<Polynomial> factors;
  for (const auto& f : fj) factors.push_back(polynomial_from_json(f));
  if (!j.contains("lambda_matrix")) return FactoredFiber(std::move(factors));
  Matrix m;
  for (const auto& row : j["lambda_matrix"]) {
    std::vector<GaussianRational> r;
    for (const auto& q : row) r.push_back(rational_from_json(q));
    m.push_back(std::move(r));
  }
  return FactoredFiber(std::move(factors), std::move(m));
}

Json to_json(const Cycle& gamma) {
  Json coords = Json::array();
  for (const auto& coord : gamma.coords()) {
    Json terms = Json::array();
    for (const auto& t : coord) terms.push_back({{"m", t.m}, {"coeff", to_json(t.coeff)}});
    coords.push_back(terms);
  }
  return {{"c", to_json(gamma.fiber_value())}, {"tol", gamma.fiber_tolerance()}, {"coords", coords}};
}

Cycle cycle_from_json(const Json& j) {
  check_keys(j, {"c", "tol", "coords"}, "cycle");
  const Json& cj = require(j, "coords", "cycle");
  if (!cj.is_array()) fail("cycle coords must be an array");
  std::vector<std::vector<FourierTerm>> coords;
  for (const auto& coord : cj) {
    if (!coord.is_array()) fail("each cycle coordinate must be an array of Fourier terms");
    std::vector<FourierTerm> terms;
    for (const auto& t : coord) {
      check_keys(t, {"m", "coeff"}, "Fourier term");
      const Json& m = require(t, "m", "Fourier term");
      if (!m.is_number_integer()) fail("Fourier index m must be an integer");
      terms.push_back({m.get<int>(), complex_from_json(require(t, "coeff", "Fourier term"))});
    }
    coords.push_back(std::move(terms));
  }
  Complex c = complex_from_json(require(j, "c", "cycle"));
  double tol = j.contains("tol") ? j["tol"].get<double>() : 1e-9 * std::max(1.0, std::abs(c));
  return Cycle(std::move(coords), c, tol);
}

Json to_json(const IntegrabilityReport& r) {
  Json orders = Json::array();
  for (std::size_t k = 0; k < r.defects.size(); ++k) {
    Json o = {{"k", k}, {"vanishes", r.defects[k].is_zero()}};
    if (!r.defects[k].is_zero()) o["defect"] = to_json(r.defects[k]);
    orders.push_back(o);
  }
  Json out = {{"orders", orders}, {"integrable", r.integrable()}, {"exact_in_t", r.exact_in_t}};
  if (r.first_nonzero) out["first_nonzero"] = *r.first_nonzero;
  return out;
}

Json to_json(const std::vector<DeformationEquation>& eqs) {
  Json out = Json::array();
  for (const auto& eq : eqs) {
    Json terms = Json::array();
    for (const auto& [i, l] : eq.terms) terms.push_back({{"omega", i}, {"d_omega", l}});
    Json e = {{"k", eq.order}, {"terms", terms}, {"holds", eq.holds}};
    if (!eq.holds) e["defect"] = to_json(eq.value);
    out.push_back(e);
  }
  return out;
}

Json to_json(const Decomposition& d) {
  Json lambda = Json::array();
  for (const auto& l : d.lambda) lambda.push_back(to_json(l));
  return {{"a", to_json(d.a)}, {"h", to_json(d.h)}, {"lambda", lambda}, {"kernel_dim", d.kernel_dim}};
}

namespace {

Json cycle_period_json(const CyclePeriod& p) {
  return {{"value", to_json(p.value)}, {"err", p.error}, {"value_over_f", to_json(p.value_over_f)}};
}

}  // namespace

Json to_json(const PeriodReport& r) {
  Json orders = Json::array();
  for (const auto& o : r.orders) {
    Json per = Json::array();
    for (const auto& p : o.per_cycle) per.push_back(cycle_period_json(p));
    orders.push_back({{"j", o.order}, {"per_cycle", per}});
  }
  Json out = {{"orders", orders}};
  if (r.obstruction_order) out["obstruction_order"] = *r.obstruction_order;
  return out;
}

Json to_json(const FirstIntegralSeries& F) {
  Json coeffs = Json::array();
  for (const auto& c : F.coeffs) coeffs.push_back(to_json(c));
  return {{"K", F.order()}, {"coeffs", coeffs}};
}

Json to_json(const Obstruction& ob) {
  Json lambda = Json::array();
  for (const auto& l : ob.lambda) lambda.push_back(to_json(l));
  Json periods = Json::array();
  for (const auto& p : ob.periods) periods.push_back(cycle_period_json(p));
  return {{"order", ob.order}, {"a", to_json(ob.a)}, {"h", to_json(ob.h)}, {"lambda", lambda}, {"periods", periods}};
}

Json to_json(const ClassificationResult& c, bool verified) {
  if (const auto* exact = std::get_if<ExactCase>(&c)) {
    return {{"type", "ExactCase"},
            {"h_tilde", to_json(exact->h_tilde)},
            {"first_integral", to_json(exact->first_integral)},
            {"verified", verified}};
  }
  const auto& pb = std::get<PullbackCase>(c);
  Json sigma = Json::array();
  for (const auto& s : pb.sigma) sigma.push_back(to_json(s));
  return {{"type", "PullbackCase"}, {"mu", to_json(pb.mu)}, {"lambda", to_json(pb.lambda)},
          {"P", to_json(pb.P)},     {"Q", to_json(pb.Q)},   {"sigma", sigma},
          {"alpha", to_json(pb.alpha)}, {"verified", verified}};
}

Json to_json(const RadialResult& r) {
  Json out = {{"kind", to_string(r.kind)}, {"contraction", to_json(r.contraction)}};
  if (r.kind == RadialKind::Neither) out["defect"] = to_json(r.defect);
  return out;
}

Json to_json(const TransversalityReport& r) {
  return {{"passed", r.passed},
          {"failed", r.failed},
          {"retries", r.retries},
          {"skipped", r.skipped},
          {"heuristic", r.heuristic}};
}

Json to_json(const LogPeriod& lp) {
  return {{"coefficient", to_json(lp.coefficient)}, {"windings", lp.windings}, {"value", to_json(lp.value())}};
}

}  // namespace foliage::io
