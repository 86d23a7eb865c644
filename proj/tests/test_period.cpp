#include "doctest.h"

#include <numbers>

#include "foliage/period.hpp"
#include "property_checks.hpp"

using namespace foliage;
using namespace foliage::testing;

namespace {

const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("standard torus cycles") {
  SUBCASE("xy, c = 1") {
    auto v = xy();
    FactoredFiber fiber({var(v, 0), var(v, 1)});
    Cycle gamma = standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0, 0.0});
    CHECK(gamma.coords()[0] == std::vector<FourierTerm>{{1, 1.0}});
    CHECK(gamma.coords()[1] == std::vector<FourierTerm>{{-1, 1.0}});
  }
  SUBCASE("xyz through (0,0,1)") {
    auto v = xyz();
    FactoredFiber fiber({var(v, 0), var(v, 1), var(v, 2)});
    Cycle gamma = standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0, 0.0, 1.0});
    CHECK(gamma.coords()[0] == std::vector<FourierTerm>{{1, 1.0}});
    CHECK(gamma.coords()[1] == std::vector<FourierTerm>{{-1, 1.0}});
    CHECK(gamma.coords()[2] == std::vector<FourierTerm>{{0, 1.0}});
  }
  SUBCASE("eps^2 = c") {
    auto v = xy();
    FactoredFiber fiber({var(v, 0), var(v, 1)});
    Complex c(2.0, -1.0);
    Cycle gamma = standard_torus_cycle(fiber, c, {0, 1}, {0.0, 0.0});
    Complex eps = gamma.coords()[0][0].coeff;
    CHECK(std::abs(eps * eps - c) < 1e-15);
  }
  SUBCASE("non-monomial fiber is rejected") {
    auto v = xy();
    FactoredFiber fiber({var(v, 0).pow(2) + var(v, 1).pow(2)});
    CHECK(error_kind([&] { standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0, 0.0}); }) == ErrorKind::ResidencyFailure);
  }
  SUBCASE("cone times hyperplane has no coordinate torus") {
    auto v = xyzw();
    FactoredFiber cone({var(v, 0).pow(2) + var(v, 1).pow(2) + var(v, 2).pow(2), var(v, 3)});
    CHECK(error_kind([&] { standard_torus_cycle(cone, 1.0, {1, 3}, {1.0, 0.0, 0.0, 0.0}); }) ==
          ErrorKind::ResidencyFailure);
  }
  SUBCASE("bad arguments") {
    auto v = xy();
    FactoredFiber fiber({var(v, 0), var(v, 1)});
    CHECK(error_kind([&] { standard_torus_cycle(fiber, 0.0, {0, 1}, {0.0, 0.0}); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { standard_torus_cycle(fiber, 1.0, {0, 0}, {0.0, 0.0}); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { standard_torus_cycle(fiber, 1.0, {0, 1}, {1.0, 0.0}); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0}); }) == ErrorKind::ArityMismatch);
  }
  SUBCASE("every built-in torus lies on its fiber") {
    for (const auto& tc : builtin_tori())
      for (Complex c : {Complex(1.0), Complex(4.0), Complex(2.0, -1.0)})
        CHECK_NOTHROW(verify_residency(standard_torus_cycle(tc.fiber, c, tc.plane, tc.anchor), tc.fiber.product(), 512));
  }
}

TEST_CASE("period of the example family's order-one term") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  FactoredFiber fiber({x, y});
  for (GaussianRational lambda : {q(0), q(2), gi(3, 1), q(-1)}) {
    PForm omega1 = dx(v, 1, x) - dx(v, 0, y * lambda);
    for (Complex c : {Complex(1.0), Complex(4.0), Complex(2.0, -1.0)}) {
      Cycle gamma = standard_torus_cycle(fiber, c, {0, 1}, {0.0, 0.0});
      PeriodValue pv = period(omega1, gamma, {}, &fiber.product());
      Complex expected = -kTwoPiI * (1.0 + lambda.to_complex());
      CHECK(std::abs(pv.value / c - expected) < 1e-9);
    }
  }
}

TEST_CASE("y dx on xy = 1 matches the winding formula") {
  auto v = xy();
  FactoredFiber fiber({var(v, 0), var(v, 1)});
  Cycle gamma = standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0, 0.0});
  PeriodValue pv = period(dx(v, 0, var(v, 1)), gamma);
  LogPeriod lp = log_period_exact(LogForm({{1, var(v, 0)}}), gamma);
  CHECK(lp.windings == std::vector<long>{1});
  CHECK(std::abs(pv.value - kTwoPiI) < 1e-12);
  CHECK(std::abs(pv.value - gamma.fiber_value() * lp.value()) < 1e-12);
}

TEST_CASE("log_period_exact") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  SUBCASE("dx/x around a single loop") {
    Cycle gamma({{{1, 1.0}}, {{0, 3.0}}}, 3.0, 1e-9);
    LogPeriod lp = log_period_exact(LogForm({{1, x}}), gamma);
    CHECK(lp.coefficient == GaussianRational(1));
    CHECK(std::abs(lp.value() - kTwoPiI) < 1e-15);
  }
  SUBCASE("dy/y - lambda dx/x on the torus") {
    GaussianRational lambda = gi(3, 1);
    FactoredFiber fiber({x, y});
    Cycle gamma = standard_torus_cycle(fiber, Complex(2.0, -1.0), {0, 1}, {0.0, 0.0});
    LogPeriod lp = log_period_exact(LogForm({{1, y}, {-lambda, x}}), gamma);
    CHECK(lp.windings == std::vector<long>{-1, 1});
    CHECK(lp.coefficient == -(GaussianRational(1) + lambda));
  }
  SUBCASE("loop not encircling the pole") {
    Cycle gamma({{{0, 2.0}, {1, 0.5}}, {{0, 1.0}}}, 2.0, 1e-9);
    LogPeriod lp = log_period_exact(LogForm({{1, x}}), gamma);
    CHECK(lp.windings == std::vector<long>{0});
    CHECK(lp.coefficient.is_zero());
  }
  SUBCASE("pole on the loop") {
    Cycle gamma({{{0, 1.0}, {1, 1.0}}, {{0, 1.0}}}, 1.0, 1e-9);
    CHECK(error_kind([&] { log_period_exact(LogForm({{1, x}}), gamma); }) == ErrorKind::PoleProximity);
  }
  SUBCASE("unresolved winding estimate") {
    // Close to the pole with a loose tolerance: the rule stops early, far
    // from the integer value.
    Cycle gamma({{{0, 1.0}, {1, 0.99}}, {{0, 1.0}}}, 1.0, 1e-9);
    QuadratureOptions loose;
    loose.n_start = 4;
    loose.tol = 10.0;
    CHECK(error_kind([&] { log_period_exact(LogForm({{1, x}}), gamma, loose); }) == ErrorKind::WindingAmbiguity);
  }
}

TEST_CASE("exact forms have vanishing periods") {
  RandomPolys gen(1111);
  auto tori = builtin_tori();
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const auto& tc = tori[k % tori.size()];
    Cycle gamma = standard_torus_cycle(tc.fiber, Complex(1.0 + k % 3, 0.5 * (k % 2)), tc.plane, tc.anchor);
    Polynomial h = gen.poly(tc.fiber.vars(), 4, 6);
    worst = std::max(worst, std::abs(period(d(h), gamma).value));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("quadrature and winding formula agree on cleared generators") {
  for (const auto& tc : builtin_tori()) {
    for (Complex c : {Complex(1.0), Complex(4.0), Complex(2.0, -1.0)}) {
      Cycle gamma = standard_torus_cycle(tc.fiber, c, tc.plane, tc.anchor);
      for (std::size_t j = 0; j < tc.fiber.rank(); ++j) {
        PeriodValue pv = period(tc.fiber.cleared_generator(j), gamma, {}, &tc.fiber.product());
        LogPeriod lp = log_period_exact(tc.fiber.generator(j), gamma);
        CHECK(rel(pv.value, c * lp.value()) < 1e-9);
        for (Complex raw : lp.raw_windings) CHECK(std::abs(raw - std::round(raw.real())) < 1e-6);
      }
    }
  }
}

TEST_CASE("periods are stable under reparametrization") {
  auto v = xyz();
  FactoredFiber fiber({var(v, 0), var(v, 1), var(v, 2)});
  Cycle gamma = standard_torus_cycle(fiber, Complex(2.0, 1.0), {0, 1}, {0.0, 0.0, 1.0});
  PForm omega = fiber.cleared_generator(0) * q(3) + d(var(v, 0).pow(2) * var(v, 1)) - fiber.cleared_generator(1);
  Complex base = period(omega, gamma).value;
  for (double shift : {0.3, 1.0, 2.5, 5.9}) {
    Cycle shifted = gamma.phase_shifted(shift);
    CHECK(std::abs(shifted.point(0.0)[0] - gamma.point(shift)[0]) < 1e-15);
    CHECK(rel(period(omega, shifted).value, base) < 1e-10);
  }
}

TEST_CASE("period errors") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  Cycle off({{{1, 1.0}}, {{-1, 2.0}}}, 1.0, 1e-9);
  Polynomial f = x * y;
  CHECK(error_kind([&] { period(dx(v, 0, y), off, {}, &f); }) == ErrorKind::ResidencyFailure);
  CHECK(error_kind([&] { period(PForm::function(x), off); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { period(dx(xyz(), 0, var(xyz(), 1)), off); }) == ErrorKind::ArityMismatch);
  QuadratureOptions tight;
  tight.n_max = 64;
  CHECK(error_kind([&] { period(dx(v, 0, y), off, tight); }) == ErrorKind::NonConvergence);
  CHECK(error_kind([&] { Cycle({}, 1.0, 1e-9); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("obstruction series") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  FactoredFiber fiber({x, y});
  std::vector<Cycle> cycles{standard_torus_cycle(fiber, 1.0, {0, 1}, {0.0, 0.0}),
                            standard_torus_cycle(fiber, Complex(2.0, -1.0), {0, 1}, {0.0, 0.0})};
  SUBCASE("exact family") {
    RandomPolys gen(1212);
    DeformationSeries w({d(x * y), d(gen.poly(v, 2, 4)), d(gen.poly(v, 2, 4))});
    auto report = obstruction_series(w, fiber, cycles);
    CHECK_FALSE(report.obstruction_order.has_value());
    CHECK(report.orders.size() == 2);
    for (const auto& o : report.orders)
      for (const auto& cp : o.per_cycle) CHECK(std::abs(cp.value) < 1e-10);
  }
  SUBCASE("example family with lambda = 2") {
    DeformationSeries w({d(x * y), dx(v, 1, x) - dx(v, 0, y * q(2))});
    auto report = obstruction_series(w, fiber, cycles);
    REQUIRE(report.obstruction_order);
    CHECK(*report.obstruction_order == 1);
    for (const auto& cp : report.orders[0].per_cycle) CHECK(std::abs(cp.value_over_f + 3.0 * kTwoPiI) < 1e-9);
  }
  SUBCASE("example family with lambda = -1") {
    DeformationSeries w({d(x * y), dx(v, 1, x) + dx(v, 0, y)});
    CHECK_FALSE(obstruction_series(w, fiber, cycles).obstruction_order.has_value());
  }
  SUBCASE("order not closed on the fibers") {
    auto v3 = xyz();
    FactoredFiber f3({var(v3, 0), var(v3, 1), var(v3, 2)});
    DeformationSeries w({d(f3.product()), dx(v3, 0, var(v3, 1))});
    CHECK(error_kind([&] { obstruction_series(w, f3, {}); }) == ErrorKind::NotRelativelyClosed);
  }
}
