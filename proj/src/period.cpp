#include "foliage/period.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

// Trapezoid rule on [0, 2pi] with node doubling. integrand(s) is evaluated at
// s = 2pi k / N. Only the new odd nodes are evaluated after each doubling.
template <typename F>
PeriodValue periodic_trapezoid(F&& integrand, const QuadratureOptions& opts) {
  std::size_t n = std::max<std::size_t>(opts.n_start, 2);
  Complex sum(0.0);
  for (std::size_t k = 0; k < n; ++k) sum += integrand(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  Complex estimate = sum * (kTwoPi / static_cast<double>(n));
  while (true) {
    std::size_t n2 = 2 * n;
    if (n2 > opts.n_max)
      throw Error(ErrorKind::NonConvergence, "trapezoid rule did not converge within " + std::to_string(opts.n_max) + " nodes");
    for (std::size_t k = 1; k < n2; k += 2) sum += integrand(kTwoPi * static_cast<double>(k) / static_cast<double>(n2));
    Complex refined = sum * (kTwoPi / static_cast<double>(n2));
    double diff = std::abs(refined - estimate);
    if (diff < opts.tol * std::max(1.0, std::abs(refined))) return {refined, diff, n2};
    estimate = refined;
    n = n2;
  }
}

}  // namespace

Cycle::Cycle(std::vector<std::vector<FourierTerm>> coords, Complex fiber_value, double fiber_tolerance)
    : coords_(std::move(coords)), c_(fiber_value), tol_(fiber_tolerance) {
  if (coords_.empty()) throw Error(ErrorKind::InvalidArgument, "cycle needs at least one coordinate");
  if (!(tol_ > 0)) throw Error(ErrorKind::InvalidArgument, "fiber tolerance must be positive");
}

std::vector<Complex> Cycle::point(double s) const {
  std::vector<Complex> x(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k)
    for (const auto& t : coords_[k]) x[k] += t.coeff * std::polar(1.0, t.m * s);
  return x;
}

std::vector<Complex> Cycle::velocity(double s) const {
  std::vector<Complex> v(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k)
    for (const auto& t : coords_[k]) v[k] += kI * static_cast<double>(t.m) * t.coeff * std::polar(1.0, t.m * s);
  return v;
}

Cycle Cycle::phase_shifted(double shift) const {
  auto coords = coords_;
  for (auto& coord : coords)
    for (auto& t : coord) t.coeff *= std::polar(1.0, t.m * shift);
  return Cycle(std::move(coords), c_, tol_);
}

void verify_residency(const Cycle& gamma, const Polynomial& f, std::size_t nodes) {
  if (gamma.dimension() != f.nvars()) throw Error(ErrorKind::ArityMismatch, "cycle dimension does not match fiber");
  double worst = 0;
  for (std::size_t k = 0; k < nodes; ++k) {
    auto x = gamma.point(kTwoPi * static_cast<double>(k) / static_cast<double>(nodes));
    worst = std::max(worst, std::abs(f.evaluate(x) - gamma.fiber_value()));
  }
  if (!(worst < gamma.fiber_tolerance()))
    throw Error(ErrorKind::ResidencyFailure, "cycle leaves the fiber: max |f - c| = " + std::to_string(worst));
}

Cycle standard_torus_cycle(const FactoredFiber& fiber, Complex c, std::pair<std::size_t, std::size_t> plane,
                           const std::vector<Complex>& anchor, double fiber_tolerance) {
  const auto [i, j] = plane;
  const std::size_t n = fiber.vars().size();
  if (anchor.size() != n) throw Error(ErrorKind::ArityMismatch, "anchor dimension does not match fiber");
  if (i >= n || j >= n || i == j) throw Error(ErrorKind::InvalidArgument, "plane must name two distinct coordinates");
  if (anchor[i] != Complex(0.0) || anchor[j] != Complex(0.0))
    throw Error(ErrorKind::InvalidArgument, "anchor must lie on x_i = x_j = 0");
  if (c == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "cycles live on a nonsingular fiber c != 0");
  if (fiber_tolerance <= 0) fiber_tolerance = 1e-9 * std::max(1.0, std::abs(c));

  auto probe = anchor;
  probe[i] = probe[j] = 1.0;
  Complex residual = fiber.product().evaluate(probe);
  if (std::abs(residual) < 1e-14) throw Error(ErrorKind::ResidencyFailure, "fiber is not locally x_i x_j in this plane");
  Complex eps = std::sqrt(c / residual);

  std::vector<std::vector<FourierTerm>> coords(n);
  for (std::size_t k = 0; k < n; ++k)
    if (anchor[k] != Complex(0.0)) coords[k].push_back({0, anchor[k]});
  coords[i].push_back({1, eps});
  coords[j].push_back({-1, eps});
  Cycle gamma(std::move(coords), c, fiber_tolerance);
  verify_residency(gamma, fiber.product(), 256);
  return gamma;
}

PeriodValue period(const PForm& omega, const Cycle& gamma, const QuadratureOptions& opts, const Polynomial* fiber) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "periods are defined for 1-forms");
  if (gamma.dimension() != omega.nvars()) throw Error(ErrorKind::ArityMismatch, "cycle dimension does not match form");
  PeriodValue out = periodic_trapezoid(
      [&](double s) {
        auto x = gamma.point(s);
        auto v = gamma.velocity(s);
        Complex g(0.0);
        for (const auto& [index, c] : omega.components()) g += c.evaluate(x) * v[index[0]];
        return g;
      },
      opts);
  if (fiber) verify_residency(gamma, *fiber, out.nodes);
  return out;
}

Complex LogPeriod::value() const { return kTwoPi * kI * coefficient.to_complex(); }

LogPeriod log_period_exact(const LogForm& theta, const Cycle& gamma, const QuadratureOptions& opts) {
  if (gamma.dimension() != theta.vars().size()) throw Error(ErrorKind::ArityMismatch, "cycle dimension does not match form");
  LogPeriod out;
  for (const auto& term : theta.terms()) {
    const Polynomial& fk = term.factor;
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < fk.nvars(); ++i) grad.push_back(fk.derivative(i));
    PeriodValue pv = periodic_trapezoid(
        [&](double s) {
          auto x = gamma.point(s);
          auto v = gamma.velocity(s);
          Complex value = fk.evaluate(x);
          if (!(std::abs(value) > opts.pole_guard))
            throw Error(ErrorKind::PoleProximity, "cycle passes within " + std::to_string(std::abs(value)) + " of " +
                                                      fk.to_string() + " = 0");
          Complex dvalue(0.0);
          for (std::size_t i = 0; i < grad.size(); ++i) dvalue += grad[i].evaluate(x) * v[i];
          return dvalue / value;
        },
        opts);
    Complex raw = pv.value / (kTwoPi * kI);
    double rounded = std::round(raw.real());
    if (std::abs(raw - Complex(rounded, 0.0)) > opts.winding_acceptance)
      throw Error(ErrorKind::WindingAmbiguity, "winding estimate " + std::to_string(raw.real()) + "+" +
                                                   std::to_string(raw.imag()) + "i is not near an integer");
    long w = static_cast<long>(rounded);
    out.windings.push_back(w);
    out.raw_windings.push_back(raw);
    out.coefficient += term.lambda * GaussianRational(w);
  }
  return out;
}

PeriodReport obstruction_series(const DeformationSeries& w, const FactoredFiber& fiber,
                                const std::vector<Cycle>& cycles, const QuadratureOptions& opts) {
  require_one_forms(w);
  require_same_context(w.vars(), fiber.vars(), "obstruction series");
  for (const auto& gamma : cycles)
    if (gamma.fiber_value() == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "cycles must lie on a fiber c != 0");

  PeriodReport report;
  const Polynomial& f = fiber.product();
  for (std::size_t j = 1; j <= w.order(); ++j) {
    const PForm& wj = w.coeffs()[j];
    if (auto rc = relatively_closed(wj, f); !rc.closed)
      throw Error(ErrorKind::NotRelativelyClosed, "omega_" + std::to_string(j) + " is not closed on the fibers",
                  rc.defect.to_string());
    OrderPeriods order{j, {}};
    bool obstructed = false;
    for (const auto& gamma : cycles) {
      PeriodValue pv = period(wj, gamma, opts, &f);
      order.per_cycle.push_back({pv.value, pv.error, pv.value / gamma.fiber_value()});
      obstructed = obstructed || std::abs(pv.value) > opts.zero_tolerance;
    }
    report.orders.push_back(std::move(order));
    if (obstructed) {
      report.obstruction_order = j;
      break;
    }
  }
  return report;
}

}  // namespace foliage
