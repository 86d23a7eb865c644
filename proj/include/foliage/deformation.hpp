#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foliage/form.hpp"

namespace foliage {

/// Power series sum_j t^j coeffs[j] with p-form coefficients.
///
/// A series is either polynomial in t (every coefficient past K is zero, so
/// statements about it hold for all t) or truncated (coefficients past K are
/// unknown, so only orders <= K are meaningful).
class FormSeries {
 public:
  FormSeries() = default;
  explicit FormSeries(std::vector<PForm> coeffs, bool polynomial_in_t = true);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<PForm>& coeffs() const { return coeffs_; }
  /// Coefficient of t^j; zero past the end of a polynomial series.
  PForm coefficient(std::size_t j) const;
  int p() const { return coeffs_.front().p(); }
  const Variables& vars() const { return coeffs_.front().vars(); }
  bool polynomial_in_t() const { return polynomial_; }

  /// Sum of coeffs[j] * t^j for a given scalar t.
  PForm at(const GaussianRational& t) const;
  FormSeries truncated(std::size_t order) const;

  friend bool operator==(const FormSeries&, const FormSeries&) = default;

 private:
  std::vector<PForm> coeffs_;
  bool polynomial_ = true;
};

/// A deformation omega_t = omega_0 + sum t^j omega_j of 1-forms.
using DeformationSeries = FormSeries;

/// Throws InvalidArgument unless every coefficient is a 1-form.
void require_one_forms(const FormSeries& w);

enum class SeriesOp { Add, Wedge, D };

FormSeries series_add(const FormSeries& a, const FormSeries& b);
/// Cauchy product of wedges.
FormSeries series_wedge(const FormSeries& a, const FormSeries& b);
FormSeries series_d(const FormSeries& a);
/// Dispatches on op; b is ignored for D.
FormSeries series_arith(const FormSeries& a, const FormSeries& b, SeriesOp op);

struct IntegrabilityReport {
  /// defects[k] is the t^k coefficient of omega_t ^ d omega_t.
  std::vector<PForm> defects;
  std::optional<std::size_t> first_nonzero;
  /// True when the input is polynomial in t and every order was checked, so
  /// integrability holds (or fails) for all t rather than up to order K.
  bool exact_in_t = false;

  bool integrable() const { return !first_nonzero.has_value(); }
};

IntegrabilityReport integrability_defects(const DeformationSeries& w);

/// Orders j whose coefficient has larger degree than omega_0.
std::vector<std::size_t> degree_bound_violations(const DeformationSeries& w);

struct DeformationEquation {
  std::size_t order = 0;
  /// Pairs (i, l) contributing omega_i ^ d omega_l; l = 0 never appears since
  /// d omega_0 = d df = 0.
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  PForm value;
  bool holds = false;
};

/// The identities sum_{i+l=k} omega_i ^ d omega_l = 0 for k >= 1 with
/// omega_0 = df. Throws HypothesisViolation if omega_0 != df.
std::vector<DeformationEquation> deformation_equations(const DeformationSeries& w, const Polynomial& f);

}  // namespace foliage
