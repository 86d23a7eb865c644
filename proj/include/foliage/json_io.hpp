#pragma once

#include <initializer_list>
#include <string>

#include "json.hpp"

#include "foliage/deformation.hpp"
#include "foliage/integrator.hpp"
#include "foliage/period.hpp"
#include "foliage/relative_cohomology.hpp"

namespace foliage::io {

using Json = nlohmann::json;

/// Throws ParseError if obj has keys outside `allowed` or is not an object.
void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const char* what);

Json to_json(const GaussianRational& q);
GaussianRational rational_from_json(const Json& j);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {vars: [...], terms: [{coeff: ["re", "im"], exps: [...]}]}, terms in
/// ascending graded-lex order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {p, vars, components: {"dx": poly, "dx^dy": poly, ...}}.
Json to_json(const PForm& form);
PForm form_from_json(const Json& j);

/// {K, coeffs: [form, ...], truncated}. `truncated` defaults to false
/// (the family is polynomial in t).
Json to_json(const FormSeries& s);
FormSeries series_from_json(const Json& j);

/// {factors: [poly], lambda_matrix?: [[q, ...], ...]}.
Json to_json(const FactoredFiber& fiber);
FactoredFiber fiber_from_json(const Json& j);

/// {c: [re, im], tol, coords: [[{m, coeff: [re, im]}, ...], ...]}.
Json to_json(const Cycle& gamma);
Cycle cycle_from_json(const Json& j);

Json to_json(const IntegrabilityReport& r);
Json to_json(const std::vector<DeformationEquation>& eqs);
Json to_json(const Decomposition& d);
Json to_json(const PeriodReport& r);
Json to_json(const FirstIntegralSeries& F);
Json to_json(const Obstruction& ob);
Json to_json(const ClassificationResult& c, bool verified);
Json to_json(const RadialResult& r);
Json to_json(const TransversalityReport& r);
Json to_json(const LogPeriod& lp);

}  // namespace foliage::io
