#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "foliage/errors.hpp"
#include "foliage/form.hpp"

namespace foliage::testing {

inline Variables xyz() { return {"x", "y", "z"}; }
inline Variables xy() { return {"x", "y"}; }
inline Variables xyzw() { return {"x", "y", "z", "w"}; }

inline Polynomial var(const Variables& v, std::size_t i) { return Polynomial::variable(v, i); }
inline Polynomial cst(const Variables& v, const GaussianRational& c) { return Polynomial::constant(v, c); }
inline GaussianRational q(long num, long den = 1) { return GaussianRational::frac(num, den); }
inline GaussianRational gi(long re, long im) { return {mpq_class(re), mpq_class(im)}; }

inline PForm d(const Polynomial& f) { return PForm::differential(f); }
inline PForm dx(const Variables& v, std::size_t i, const Polynomial& coeff) { return PForm::basis(v, {i}, coeff); }

/// Small random polynomials with Gaussian-integer / small-rational
/// coefficients, used by the property suites.
class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

  GaussianRational scalar() {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3), pick(0, 3);
    GaussianRational re = GaussianRational::frac(num(rng_), den(rng_));
    if (pick(rng_) == 0) return re + GaussianRational::frac(num(rng_), den(rng_)) * GaussianRational::i();
    return re;
  }

  GaussianRational nonzero_scalar() {
    GaussianRational s;
    do s = scalar();
    while (s.is_zero());
    return s;
  }

  Polynomial poly(const Variables& v, int max_degree, int max_terms, int min_degree = 0) {
    std::uniform_int_distribution<int> terms(1, max_terms), deg(min_degree, max_degree);
    Polynomial p(v);
    int count = terms(rng_);
    for (int k = 0; k < count; ++k) p.add_term(monomial(v.size(), deg(rng_)), scalar());
    return p;
  }

  Polynomial homogeneous(const Variables& v, int degree, int max_terms) {
    Polynomial p(v);
    std::uniform_int_distribution<int> terms(1, max_terms);
    while (p.is_zero()) {
      int count = terms(rng_);
      for (int k = 0; k < count; ++k) p.add_term(monomial(v.size(), degree), scalar());
    }
    return p;
  }

  PForm form(const Variables& v, int p, int max_degree, int max_terms) {
    PForm out(v, p);
    std::uniform_int_distribution<std::size_t> comps(1, 3);
    std::size_t count = comps(rng_);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<std::size_t> index(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) index[i] = i;
      std::shuffle(index.begin(), index.end(), rng_);
      index.resize(static_cast<std::size_t>(p));
      out += PForm::basis(v, index, poly(v, max_degree, max_terms));
    }
    return out;
  }

  Monomial monomial(std::size_t n, int degree) {
    std::vector<unsigned> e(n, 0);
    std::uniform_int_distribution<std::size_t> slot(0, n - 1);
    for (int k = 0; k < degree; ++k) ++e[slot(rng_)];
    return Monomial(std::move(e));
  }

  std::vector<std::complex<double>> point(std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<std::complex<double>> x(n);
    for (auto& xi : x) xi = {u(rng_), u(rng_)};
    return x;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs fn and returns the kind of the foliage::Error it throws, if any.
template <class Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace foliage::testing
