#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliage/gaussian_rational.hpp"

namespace foliage {

using Complex = std::complex<double>;
using Variables = std::vector<std::string>;

/// Degree of the zero polynomial (and of the zero form).
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... > xn. This is the term order used by division and by the
/// canonical serialization order.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact Gaussian-rational coefficients over an
/// ordered list of variable names. No zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}
  Polynomial(Variables vars, TermMap terms);

  static Polynomial constant(const Variables& vars, const GaussianRational& c);
  static Polynomial variable(const Variables& vars, std::size_t index);
  static Polynomial monomial(const Variables& vars, Monomial m, const GaussianRational& c = 1);

  const Variables& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kDegreeOfZero for the zero polynomial.
  int degree() const;
  /// Smallest total degree of a term; kDegreeOfZero for zero.
  int low_degree() const;
  bool is_homogeneous(int m) const;
  bool is_homogeneous() const;

  GaussianRational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const GaussianRational& leading_coefficient() const;
  GaussianRational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  /// Substitutes sigma[i] for variable i. The result lives in sigma's context.
  Polynomial compose(std::span<const Polynomial> sigma) const;

  Complex evaluate(std::span<const Complex> point) const;

  /// Splits into homogeneous pieces keyed by degree. Zero maps to {}.
  std::map<int, Polynomial> homogeneous_components() const;
  Polynomial homogeneous_part(int degree) const;

  std::string to_string() const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const GaussianRational& c);

 private:
  Variables vars_;
  TermMap terms_;
};

/// Throws ContextMismatch unless a and b share variables.
void require_same_context(const Variables& a, const Variables& b, const char* what);

/// Graded-lex long division of g by f. Requires f != 0.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& g, const Polynomial& f);

/// q with g = f*q when f divides g exactly, otherwise nullopt. Requires f != 0.
std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f);
inline bool divides(const Polynomial& f, const Polynomial& g) { return exact_quotient(g, f).has_value(); }

/// All monomials in n variables with min_degree <= total degree <= max_degree,
/// in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree, int min_degree = 0);

}  // namespace foliage
