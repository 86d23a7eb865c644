#include "doctest.h"

#include "foliage/errors.hpp"
#include "foliage/form.hpp"
#include "test_helpers.hpp"

using namespace foliage;
using namespace foliage::testing;

TEST_CASE("exterior derivative on worked examples") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  CHECK(d(x * y) == dx(v, 0, y) + dx(v, 1, x));
  CHECK(exterior_derivative(dx(v, 0, y) + dx(v, 1, x)).is_zero());

  GaussianRational lambda = gi(3, 1);
  PForm omega = dx(v, 1, x) - dx(v, 0, y * lambda);
  PForm expected = PForm::basis(v, {0, 1}, cst(v, GaussianRational(1) + lambda));
  CHECK(exterior_derivative(omega) == expected);
}

TEST_CASE("exterior derivative of a function matches central differences") {
  auto v = xyz();
  RandomPolys gen(5);
  const double h = 1e-5;
  for (int k = 0; k < 20; ++k) {
    Polynomial f = gen.poly(v, 4, 6);
    auto pt = gen.point(3);
    auto df = d(f).evaluate(pt);
    for (std::size_t i = 0; i < 3; ++i) {
      auto plus = pt, minus = pt;
      plus[i] += h;
      minus[i] -= h;
      Complex fd = (f.evaluate(plus) - f.evaluate(minus)) / (2 * h);
      Complex exact = df.count({i}) ? df.at({i}) : Complex{};
      CHECK(std::abs(fd - exact) < 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("top-degree forms differentiate to zero") {
  auto v = xy();
  PForm top = PForm::basis(v, {0, 1}, var(v, 0).pow(3));
  PForm dtop = exterior_derivative(top);
  CHECK(dtop.is_zero());
  CHECK(dtop.p() == 3);
}

TEST_CASE("wedge on worked examples") {
  auto v = xy();
  Polynomial one = cst(v, 1), x = var(v, 0), y = var(v, 1);
  CHECK(wedge(dx(v, 0, one), dx(v, 0, one)).is_zero());
  CHECK(wedge(dx(v, 0, one), dx(v, 1, one)) == -wedge(dx(v, 1, one), dx(v, 0, one)));
  PForm lhs = wedge(dx(v, 0, y) + dx(v, 1, x), dx(v, 1, x));
  CHECK(lhs == PForm::basis(v, {0, 1}, x * y));
  CHECK(wedge(PForm::basis(v, {0, 1}, one), dx(v, 0, one)).is_zero());
  CHECK_THROWS_AS(wedge(dx(v, 0, one), dx(xyz(), 0, cst(xyz(), 1))), Error);
}

TEST_CASE("basis sorts indices with sign") {
  auto v = xyz();
  Polynomial one = cst(v, 1);
  CHECK(PForm::basis(v, {2, 0, 1}, one) == PForm::basis(v, {0, 1, 2}, one));
  CHECK(PForm::basis(v, {1, 0, 2}, one) == -PForm::basis(v, {0, 1, 2}, one));
  CHECK(PForm::basis(v, {1, 1}, one).is_zero());
}

TEST_CASE("pullback on worked examples") {
  SUBCASE("identity map") {
    auto v = xy();
    std::vector<Polynomial> sigma{var(v, 0), var(v, 1)};
    PForm alpha = d(var(v, 0) * var(v, 1));
    CHECK(pullback(sigma, alpha) == alpha);
  }
  SUBCASE("y dx pulls back to f2 df1") {
    auto uv = xy();
    auto v = xyzw();
    Polynomial x = var(v, 0), y = var(v, 1), z = var(v, 2), w = var(v, 3);
    Polynomial f1 = x.pow(2) + y * z, f2 = w;
    std::vector<Polynomial> sigma{f1, f2};
    PForm alpha = dx(uv, 0, var(uv, 1));
    CHECK(pullback(sigma, alpha) == f2 * d(f1));
  }
  SUBCASE("scaling a degree-one coefficient") {
    auto v = xyz();
    GaussianRational t = q(3);
    std::vector<Polynomial> sigma{var(v, 0) * t, var(v, 1) * t, var(v, 2) * t};
    PForm alpha = dx(v, 1, var(v, 0));
    CHECK(pullback(sigma, alpha) == alpha * (t * t));
  }
  SUBCASE("arity mismatch") {
    auto v = xyz();
    std::vector<Polynomial> sigma{var(v, 0)};
    CHECK_THROWS_AS(pullback(sigma, d(var(xy(), 0))), Error);
  }
}

TEST_CASE("radial contraction") {
  auto v = xyz();
  Polynomial x = var(v, 0), y = var(v, 1), z = var(v, 2);
  CHECK(radial_contraction(d(x * y * z)) == x * y * z * q(3));
  CHECK(radial_contraction(dx(v, 1, x) - dx(v, 0, y)).is_zero());
  CHECK(radial_contraction(dx(v, 0, y) + dx(v, 1, x * q(2))) == x * y * q(3));
  CHECK_THROWS_AS(radial_contraction(PForm::basis(v, {0, 1}, x)), Error);
}

TEST_CASE("form evaluation") {
  auto v = xy();
  auto values = dx(v, 1, var(v, 0)).evaluate(std::vector<Complex>{{1, 1}, {2, 0}});
  REQUIRE(values.size() == 1);
  CHECK(values.at({1}) == Complex(1, 1));
}

TEST_CASE("degrees of forms") {
  auto v = xyz();
  Polynomial f = var(v, 0) * var(v, 1) * var(v, 2);
  CHECK(d(f).degree() == 2);
  CHECK(PForm(v, 1).degree() == kDegreeOfZero);
  CHECK(d(f).is_homogeneous());
  CHECK_FALSE((d(f) + dx(v, 0, cst(v, 1))).is_homogeneous());
  auto parts = (d(f) + dx(v, 0, cst(v, 1))).homogeneous_components();
  CHECK(parts.size() == 2);
  CHECK(parts.at(2) == d(f));
}

TEST_CASE("component keys") {
  auto v = xyz();
  CHECK(component_key(v, {0, 2}) == "dx^dz");
  CHECK(component_key(v, {}) == "1");
  CHECK(parse_component_key(v, "dx^dz") == FormIndex{0, 2});
  CHECK(parse_component_key(v, "1") == FormIndex{});
  CHECK_THROWS_AS(parse_component_key(v, "dz^dx"), Error);
  CHECK_THROWS_AS(parse_component_key(v, "dq"), Error);
}

TEST_CASE("logarithmic forms clear to polynomial forms") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  GaussianRational lambda = q(5, 2);
  LogForm theta({{1, y}, {-lambda, x}});
  CHECK(theta.denominator() == x * y);
  CHECK(theta.cleared() == dx(v, 1, x) - dx(v, 0, y * lambda));
}
