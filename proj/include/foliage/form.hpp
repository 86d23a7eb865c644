#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foliage/polynomial.hpp"

namespace foliage {

/// Strictly increasing tuple of variable indices (i1 < ... < ip) naming the
/// basis element dx_{i1} ^ ... ^ dx_{ip}.
using FormIndex = std::vector<std::size_t>;

/// Differential p-form with polynomial coefficients. Only strictly increasing
/// index tuples are stored and zero coefficients are dropped, so structural
/// equality is mathematical equality.
class PForm {
 public:
  using ComponentMap = std::map<FormIndex, Polynomial>;

  PForm() = default;
  PForm(Variables vars, int p);

  static PForm zero(const Variables& vars, int p) { return PForm(vars, p); }
  /// The 0-form with coefficient f.
  static PForm function(const Polynomial& f);
  /// d f as a 1-form.
  static PForm differential(const Polynomial& f);
  /// coeff * dx_{index[0]} ^ ... in any index order; the sign of the sorting
  /// permutation is applied and repeated indices give zero.
  static PForm basis(const Variables& vars, std::vector<std::size_t> index, const Polynomial& coeff);
  /// 1-form sum_i coeffs[i] dx_i.
  static PForm one_form(const Variables& vars, std::span<const Polynomial> coeffs);

  int p() const { return p_; }
  const Variables& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const ComponentMap& components() const { return components_; }
  Polynomial component(const FormIndex& index) const;
  /// Coefficient of dx_i of a 1-form.
  Polynomial coefficient(std::size_t i) const { return component({i}); }

  bool is_zero() const { return components_.empty(); }
  /// Max coefficient degree; kDegreeOfZero for the zero form.
  int degree() const;
  int low_degree() const;
  bool is_homogeneous() const;
  /// Splits by coefficient degree.
  std::map<int, PForm> homogeneous_components() const;

  PForm operator-() const;
  PForm& operator+=(const PForm& o);
  PForm& operator-=(const PForm& o);
  PForm& operator*=(const GaussianRational& c);
  PForm& operator*=(const Polynomial& g);

  friend PForm operator+(PForm a, const PForm& b) { return a += b; }
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator*(PForm a, const GaussianRational& c) { return a *= c; }
  friend PForm operator*(const GaussianRational& c, PForm a) { return a *= c; }
  friend PForm operator*(const Polynomial& g, PForm a) { return a *= g; }
  friend bool operator==(const PForm& a, const PForm& b) {
    return a.p_ == b.p_ && a.vars_ == b.vars_ && a.components_ == b.components_;
  }

  /// Component values at a point, keyed like components().
  std::map<FormIndex, Complex> evaluate(std::span<const Complex> point) const;

  std::string to_string() const;

  void add_component(const FormIndex& index, const Polynomial& coeff);

 private:
  int p_ = 0;
  Variables vars_;
  ComponentMap components_;
};

/// "dx^dy" style key for a basis element; "1" for the 0-form basis.
std::string component_key(const Variables& vars, const FormIndex& index);
/// Inverse of component_key.
FormIndex parse_component_key(const Variables& vars, const std::string& key);

/// d. On top-degree forms the result is the zero (p+1)-form.
PForm exterior_derivative(const PForm& omega);
PForm wedge(const PForm& a, const PForm& b);
/// sigma^*(alpha) where alpha lives in sigma.size() variables and sigma
/// maps the target context (sigma's variables) into alpha's space.
PForm pullback(std::span<const Polynomial> sigma, const PForm& alpha);
/// omega(R) for the radial field R = sum x_i d/dx_i. omega must be a 1-form.
Polynomial radial_contraction(const PForm& omega);

/// sum_k lambda_k df_k / f_k.
class LogForm {
 public:
  struct Term {
    GaussianRational lambda;
    Polynomial factor;
  };

  LogForm() = default;
  explicit LogForm(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  const Variables& vars() const;
  /// Product of all factors.
  Polynomial denominator() const;
  /// f * sum lambda_k df_k/f_k with f = denominator(); polynomial by construction.
  PForm cleared() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace foliage
