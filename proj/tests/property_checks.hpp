#pragma once

#include <vector>

#include "foliage/period.hpp"
#include "test_helpers.hpp"

// Randomized identity checks shared by the unit tests and the acceptance
// binary. Each returns the number of failing cases out of `cases`.
namespace foliage::testing {

inline Variables property_context(int k) { return k % 2 ? xyzw() : xyz(); }

inline GaussianRational parity_sign(int p) { return GaussianRational(p % 2 ? -1 : 1); }

inline int count_ddzero_failures(int cases, std::uint64_t seed) {
  RandomPolys gen(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    auto v = property_context(k);
    PForm a = k % 3 == 0 ? PForm::function(gen.poly(v, 4, 6)) : gen.form(v, 1 + k % 2, 4, 4);
    if (!exterior_derivative(exterior_derivative(a)).is_zero()) ++failures;
  }
  return failures;
}

// d(a ^ b) = da ^ b + (-1)^p a ^ db.
inline int count_leibniz_failures(int cases, std::uint64_t seed) {
  RandomPolys gen(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    auto v = property_context(k);
    int p = k % 3, q = 1 + (k / 3) % 2;
    PForm a = p == 0 ? PForm::function(gen.poly(v, 4, 4)) : gen.form(v, p, 4, 3);
    PForm b = gen.form(v, q, 4, 3);
    PForm lhs = exterior_derivative(wedge(a, b));
    PForm rhs = wedge(exterior_derivative(a), b) + wedge(a, exterior_derivative(b)) * parity_sign(p);
    if (lhs != rhs) ++failures;
  }
  return failures;
}

// a ^ b = (-1)^{pq} b ^ a.
inline int count_anticommutativity_failures(int cases, std::uint64_t seed) {
  RandomPolys gen(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    auto v = property_context(k);
    int p = 1 + k % 2, q = 1 + (k / 2) % 2;
    PForm a = gen.form(v, p, 3, 3), b = gen.form(v, q, 3, 3);
    if (wedge(a, b) != wedge(b, a) * parity_sign(p * q)) ++failures;
  }
  return failures;
}

// df(R) = m f for f homogeneous of degree m in 1..5.
inline int count_euler_failures(int cases, std::uint64_t seed) {
  RandomPolys gen(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    auto v = property_context(k);
    int m = 1 + k % 5;
    Polynomial f = gen.homogeneous(v, m, 5);
    if (radial_contraction(PForm::differential(f)) != f * GaussianRational(m)) ++failures;
  }
  return failures;
}

// sigma^* d = d sigma^* and sigma^*(a ^ b) = sigma^* a ^ sigma^* b; a case
// fails if either identity does.
inline int count_pullback_failures(int cases, std::uint64_t seed) {
  RandomPolys gen(seed);
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    auto target = property_context(k);
    auto source = k % 3 == 0 ? xy() : xyz();
    std::vector<Polynomial> sigma;
    for (std::size_t i = 0; i < source.size(); ++i) sigma.push_back(gen.poly(target, 2, 3));
    PForm a = gen.form(source, 1, 2, 3);
    PForm b = k % 2 ? gen.form(source, 1, 2, 2) : PForm::function(gen.poly(source, 2, 3));
    bool d_ok = pullback(sigma, exterior_derivative(a)) == exterior_derivative(pullback(sigma, a));
    bool wedge_ok = pullback(sigma, wedge(a, b)) == wedge(pullback(sigma, a), pullback(sigma, b));
    if (!d_ok || !wedge_ok) ++failures;
  }
  return failures;
}

struct TorusSpec {
  FactoredFiber fiber;
  std::pair<std::size_t, std::size_t> plane;
  std::vector<Complex> anchor;
};

/// Coordinate-crossing fibers with a torus in each listed plane.
inline std::vector<TorusSpec> builtin_tori() {
  auto v2 = xy(), v3 = xyz(), v4 = xyzw();
  FactoredFiber cross({var(v2, 0), var(v2, 1)});
  FactoredFiber triple({var(v3, 0), var(v3, 1), var(v3, 2)});
  FactoredFiber quad({var(v4, 0), var(v4, 1), var(v4, 2), var(v4, 3)});
  return {
      {cross, {0, 1}, {0.0, 0.0}},
      {triple, {0, 1}, {0.0, 0.0, 1.0}},
      {triple, {1, 2}, {Complex(2.0, -1.0), 0.0, 0.0}},
      {triple, {0, 2}, {0.0, Complex(0.5, 0.5), 0.0}},
      {quad, {2, 3}, {1.0, Complex(0.0, 1.0), 0.0, 0.0}},
  };
}

}  // namespace foliage::testing
