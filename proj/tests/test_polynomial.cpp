#include "doctest.h"

#include "foliage/errors.hpp"
#include "foliage/polynomial.hpp"
#include "test_helpers.hpp"

using namespace foliage;
using namespace foliage::testing;

TEST_CASE("poly_arith: additive inverse and difference of squares") {
  auto v = xyz();
  Polynomial x = var(v, 0), y = var(v, 1);
  CHECK((x * y + (-(x * y))).is_zero());
  CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
}

TEST_CASE("poly_arith: product checked by evaluation at sample points") {
  auto v = xyz();
  Polynomial x = var(v, 0), y = var(v, 1), z = var(v, 2);
  Polynomial a = x.pow(2) * y, b = x * z.pow(3);
  Polynomial prod = a * b;
  CHECK(prod == Polynomial::monomial(v, Monomial({3, 1, 3})));
  RandomPolys gen(11);
  for (int k = 0; k < 3; ++k) {
    auto pt = gen.point(3, 2.0);
    std::complex<double> expected = pt[0] * pt[0] * pt[0] * pt[1] * std::pow(pt[2], 3);
    CHECK(std::abs(prod.evaluate(pt) - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    CHECK(std::abs(prod.evaluate(pt) - a.evaluate(pt) * b.evaluate(pt)) < 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("context mismatch is an error") {
  Polynomial x = var(xyz(), 0), u = var(xy(), 0);
  CHECK_THROWS_AS(x + u, Error);
  CHECK_THROWS_AS(x * u, Error);
}

TEST_CASE("degree of zero is the sentinel and orders below everything") {
  Polynomial zero(xyz());
  CHECK(zero.degree() == kDegreeOfZero);
  CHECK(zero.degree() < cst(xyz(), 1).degree());
  CHECK(zero.is_homogeneous(4));
}

TEST_CASE("divides") {
  auto v = xyz();
  Polynomial x = var(v, 0), y = var(v, 1), z = var(v, 2);
  SUBCASE("xy | x^2 y^2") {
    auto qt = exact_quotient(x.pow(2) * y.pow(2), x * y);
    REQUIRE(qt);
    CHECK(*qt == x * y);
  }
  SUBCASE("xy does not divide 2x^2") {
    // 2x^2 is the dx^dy coefficient of dh ^ df for h = x^2, f = xy.
    CHECK_FALSE(divides(x * y, x.pow(2) * q(2)));
  }
  SUBCASE("constructed product") {
    Polynomial f = x.pow(2) + y.pow(2) + z.pow(2);
    auto qt = exact_quotient(f * (x + cst(v, 1)), f);
    REQUIRE(qt);
    CHECK(*qt == x + cst(v, 1));
  }
  SUBCASE("division identity holds for random inputs") {
    RandomPolys gen(3);
    for (int k = 0; k < 50; ++k) {
      Polynomial g = gen.poly(v, 4, 5), f = gen.poly(v, 2, 3);
      if (f.is_zero()) continue;
      auto [qt, r] = divide(g, f);
      CHECK(qt * f + r == g);
      CHECK(exact_quotient(g * f, f) == std::optional<Polynomial>(g));
    }
  }
}

TEST_CASE("homogeneous components") {
  auto v = xyz();
  Polynomial x = var(v, 0), y = var(v, 1), z = var(v, 2);
  auto parts = (x.pow(2) + x * y + z).homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == z);
  CHECK(parts.at(2) == x.pow(2) + x * y);
  CHECK(Polynomial(v).homogeneous_components().empty());

  // Binomial expansion of (x+1)^3.
  auto cube = (x + cst(v, 1)).pow(3).homogeneous_components();
  REQUIRE(cube.size() == 4);
  CHECK(cube.at(0) == cst(v, 1));
  CHECK(cube.at(1) == x * q(3));
  CHECK(cube.at(2) == x.pow(2) * q(3));
  CHECK(cube.at(3) == x.pow(3));
}

TEST_CASE("evaluate") {
  Polynomial p = var(xy(), 0) * var(xy(), 1);
  std::vector<Complex> pt{{2, 0}, {0, 3}};
  CHECK(p.evaluate(pt) == Complex(0, 6));
  auto v = xyz();
  Polynomial s = var(v, 0).pow(2) + var(v, 1).pow(2) + var(v, 2).pow(2);
  std::vector<Complex> e1{{1, 0}, {0, 0}, {0, 0}};
  CHECK(s.evaluate(e1) == Complex(1, 0));
  CHECK_THROWS_AS(s.evaluate(pt), Error);
}

TEST_CASE("evaluate is a ring homomorphism") {
  RandomPolys gen(17);
  auto v = xyzw();
  for (int k = 0; k < 200; ++k) {
    Polynomial a = gen.poly(v, 3, 4), b = gen.poly(v, 3, 4);
    auto pt = gen.point(4);
    Complex ea = a.evaluate(pt), eb = b.evaluate(pt);
    double scale = std::max({1.0, std::abs(ea) * std::abs(eb), std::abs(ea) + std::abs(eb)});
    CHECK(std::abs((a * b).evaluate(pt) - ea * eb) < 1e-12 * scale);
    CHECK(std::abs((a + b).evaluate(pt) - (ea + eb)) < 1e-12 * scale);
  }
}

TEST_CASE("composition and derivative") {
  auto v = xy();
  Polynomial x = var(v, 0), y = var(v, 1);
  Polynomial p = x.pow(2) * y + y;
  std::vector<Polynomial> sigma{x + y, x * y};
  CHECK(p.compose(sigma) == (x + y).pow(2) * (x * y) + x * y);
  CHECK(p.derivative(0) == x * y * q(2));
  CHECK(p.derivative(1) == x.pow(2) + cst(v, 1));
  CHECK_THROWS_AS(p.compose(std::vector<Polynomial>{x}), Error);
}

TEST_CASE("monomial enumeration is graded-lex sorted and complete") {
  auto ms = monomials_up_to(3, 2);
  CHECK(ms.size() == 10);
  CHECK(std::is_sorted(ms.begin(), ms.end(), GrlexLess{}));
  CHECK(monomials_up_to(4, 3, 3).size() == 20);
}
