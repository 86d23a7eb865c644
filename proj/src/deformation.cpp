#include "foliage/deformation.hpp"

#include <algorithm>

#include "foliage/errors.hpp"

namespace foliage {

FormSeries::FormSeries(std::vector<PForm> coeffs, bool polynomial_in_t)
    : coeffs_(std::move(coeffs)), polynomial_(polynomial_in_t) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  for (const auto& c : coeffs_) {
    require_same_context(coeffs_.front().vars(), c.vars(), "series");
    if (c.p() != coeffs_.front().p()) throw Error(ErrorKind::InvalidArgument, "series coefficients differ in form degree");
  }
}

PForm FormSeries::coefficient(std::size_t j) const {
  if (j < coeffs_.size()) return coeffs_[j];
  if (!polynomial_) throw Error(ErrorKind::InvalidArgument, "coefficient beyond truncation order");
  return PForm::zero(vars(), p());
}

PForm FormSeries::at(const GaussianRational& t) const {
  PForm sum = PForm::zero(vars(), p());
  GaussianRational power(1);
  for (const auto& c : coeffs_) {
    sum += c * power;
    power *= t;
  }
  return sum;
}

FormSeries FormSeries::truncated(std::size_t order) const {
  if (order >= coeffs_.size()) return *this;
  return FormSeries(std::vector<PForm>(coeffs_.begin(), coeffs_.begin() + order + 1), false);
}

void require_one_forms(const FormSeries& w) {
  if (w.p() != 1) throw Error(ErrorKind::InvalidArgument, "deformation coefficients must be 1-forms");
}

namespace {

// Order of a binary result: polynomial inputs combine exactly, any truncated
// input limits the result to the smallest known order.
std::size_t result_order(const FormSeries& a, const FormSeries& b, bool product) {
  if (a.polynomial_in_t() && b.polynomial_in_t()) return product ? a.order() + b.order() : std::max(a.order(), b.order());
  std::size_t k = std::numeric_limits<std::size_t>::max();
  if (!a.polynomial_in_t()) k = std::min(k, a.order());
  if (!b.polynomial_in_t()) k = std::min(k, b.order());
  return product ? k : std::min(k, std::max(a.order(), b.order()));
}

}  // namespace

FormSeries series_add(const FormSeries& a, const FormSeries& b) {
  require_same_context(a.vars(), b.vars(), "series add");
  std::size_t k = result_order(a, b, false);
  std::vector<PForm> out;
  for (std::size_t j = 0; j <= k; ++j) out.push_back(a.coefficient(j) + b.coefficient(j));
  return FormSeries(std::move(out), a.polynomial_in_t() && b.polynomial_in_t());
}

FormSeries series_wedge(const FormSeries& a, const FormSeries& b) {
  require_same_context(a.vars(), b.vars(), "series wedge");
  std::size_t k = result_order(a, b, true);
  std::vector<PForm> out;
  for (std::size_t j = 0; j <= k; ++j) {
    PForm sum = PForm::zero(a.vars(), a.p() + b.p());
    for (std::size_t i = 0; i <= j; ++i) {
      if ((a.polynomial_in_t() && i > a.order()) || (b.polynomial_in_t() && j - i > b.order())) continue;
      sum += wedge(a.coefficient(i), b.coefficient(j - i));
    }
    out.push_back(std::move(sum));
  }
  return FormSeries(std::move(out), a.polynomial_in_t() && b.polynomial_in_t());
}

FormSeries series_d(const FormSeries& a) {
  std::vector<PForm> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(exterior_derivative(c));
  return FormSeries(std::move(out), a.polynomial_in_t());
}

FormSeries series_arith(const FormSeries& a, const FormSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return series_add(a, b);
    case SeriesOp::Wedge: return series_wedge(a, b);
    case SeriesOp::D: return series_d(a);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series operation");
}

namespace {

PForm defect_at(const DeformationSeries& w, const std::vector<PForm>& dw, std::size_t k,
                std::vector<std::pair<std::size_t, std::size_t>>* terms) {
  PForm sum = PForm::zero(w.vars(), 3);
  const std::size_t K = w.order();
  for (std::size_t l = 0; l <= std::min(k, K); ++l) {
    std::size_t i = k - l;
    if (i > K) continue;
    if (terms && l > 0) terms->emplace_back(i, l);
    if (dw[l].is_zero()) continue;
    sum += wedge(w.coeffs()[i], dw[l]);
  }
  return sum;
}

}  // namespace

IntegrabilityReport integrability_defects(const DeformationSeries& w) {
  require_one_forms(w);
  std::vector<PForm> dw;
  for (const auto& c : w.coeffs()) dw.push_back(exterior_derivative(c));
  const std::size_t last = w.polynomial_in_t() ? 2 * w.order() : w.order();

  IntegrabilityReport report;
  report.exact_in_t = w.polynomial_in_t();
  for (std::size_t k = 0; k <= last; ++k) {
    report.defects.push_back(defect_at(w, dw, k, nullptr));
    if (!report.first_nonzero && !report.defects.back().is_zero()) report.first_nonzero = k;
  }
  return report;
}

std::vector<std::size_t> degree_bound_violations(const DeformationSeries& w) {
  std::vector<std::size_t> out;
  const int bound = w.coeffs().front().degree();
  for (std::size_t j = 1; j < w.coeffs().size(); ++j)
    if (w.coeffs()[j].degree() > bound) out.push_back(j);
  return out;
}

std::vector<DeformationEquation> deformation_equations(const DeformationSeries& w, const Polynomial& f) {
  require_one_forms(w);
  require_same_context(w.vars(), f.vars(), "deformation equations");
  PForm df = PForm::differential(f);
  if (!(w.coeffs().front() == df))
    throw Error(ErrorKind::HypothesisViolation, "omega_0 is not df", (w.coeffs().front() - df).to_string());

  std::vector<PForm> dw;
  for (const auto& c : w.coeffs()) dw.push_back(exterior_derivative(c));
  const std::size_t last = w.polynomial_in_t() ? 2 * w.order() : w.order();

  std::vector<DeformationEquation> out;
  for (std::size_t k = 1; k <= last; ++k) {
    DeformationEquation eq;
    eq.order = k;
    eq.value = defect_at(w, dw, k, &eq.terms);
    eq.holds = eq.value.is_zero();
    if (eq.terms.empty()) continue;
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace foliage
