#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foliage/deformation.hpp"
#include "foliage/relative_cohomology.hpp"

namespace foliage {

struct FourierTerm {
  int m = 0;
  Complex coeff;
  friend bool operator==(const FourierTerm&, const FourierTerm&) = default;
};

/// Closed loop s -> (x_1(s), ..., x_n(s)), s in [0, 2pi], each coordinate a
/// finite Fourier sum  x_k(s) = sum_m c_{k,m} e^{i m s}. The loop is meant to
/// lie on the fiber f = c; residency is checked against f wherever a
/// computation depends on it.
class Cycle {
 public:
  Cycle() = default;
  Cycle(std::vector<std::vector<FourierTerm>> coords, Complex fiber_value, double fiber_tolerance);

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<std::vector<FourierTerm>>& coords() const { return coords_; }
  Complex fiber_value() const { return c_; }
  double fiber_tolerance() const { return tol_; }

  std::vector<Complex> point(double s) const;
  std::vector<Complex> velocity(double s) const;
  /// Same loop started at s = shift (every coefficient rotated by e^{i m shift}).
  Cycle phase_shifted(double shift) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<std::vector<FourierTerm>> coords_;
  Complex c_;
  double tol_ = 1e-9;
};

struct QuadratureOptions {
  double tol = 1e-10;
  std::size_t n_start = 64;
  std::size_t n_max = std::size_t{1} << 16;
  double pole_guard = 1e-8;
  double winding_acceptance = 0.01;
  /// A period is treated as nonzero (an obstruction) above this magnitude.
  double zero_tolerance = 1e-8;
};

/// Throws ResidencyFailure unless max |f(gamma(s)) - c| < fiber tolerance over
/// `nodes` equispaced samples.
void verify_residency(const Cycle& gamma, const Polynomial& f, std::size_t nodes);

/// The loop gamma(s) = anchor + eps e^{is} e_i + eps e^{-is} e_j with
/// eps^2 * R = c, where R = f(anchor with x_i = x_j = 1). Valid only where f
/// restricted to the (x_i, x_j)-plane through the anchor is R x_i x_j.
Cycle standard_torus_cycle(const FactoredFiber& fiber, Complex c, std::pair<std::size_t, std::size_t> plane,
                           const std::vector<Complex>& anchor, double fiber_tolerance = 0);

struct PeriodValue {
  Complex value;
  /// |I_2N - I_N| at the accepted resolution.
  double error = 0;
  std::size_t nodes = 0;
};

/// Trapezoid rule with node doubling for the loop integral of a 1-form. When
/// `fiber` is given, residency on f = c is checked at the accepted nodes.
PeriodValue period(const PForm& omega, const Cycle& gamma, const QuadratureOptions& opts = {},
                   const Polynomial* fiber = nullptr);

struct LogPeriod {
  /// sum_k lambda_k w_k, exact.
  GaussianRational coefficient;
  std::vector<long> windings;
  /// Quadrature estimates of the winding numbers before rounding.
  std::vector<Complex> raw_windings;
  /// 2 pi i * coefficient.
  Complex value() const;
};

/// Winding numbers w_k of f_k o gamma around 0 via the argument principle,
/// rounded to integers, then 2 pi i sum lambda_k w_k assembled exactly.
LogPeriod log_period_exact(const LogForm& theta, const Cycle& gamma, const QuadratureOptions& opts = {});

struct CyclePeriod {
  Complex value;
  double error = 0;
  /// (1/c) * value, the period of omega_j / f on the fiber.
  Complex value_over_f;
};

struct OrderPeriods {
  std::size_t order = 0;
  std::vector<CyclePeriod> per_cycle;
};

struct PeriodReport {
  std::vector<OrderPeriods> orders;
  /// First order with a period above the zero tolerance.
  std::optional<std::size_t> obstruction_order;
};

/// Periods of omega_j over every cycle for j = 1..K, stopping at the first
/// obstructed order. Each omega_j must be relatively closed up to and
/// including the obstruction order (NotRelativelyClosed otherwise).
PeriodReport obstruction_series(const DeformationSeries& w, const FactoredFiber& fiber,
                                const std::vector<Cycle>& cycles, const QuadratureOptions& opts = {});

}  // namespace foliage
