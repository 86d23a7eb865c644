#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>

namespace foliage {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// mpq_class keeps both parts canonical (reduced, positive denominator) after
/// every arithmetic operation; constructors from strings canonicalize too.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational frac(long num, long den) { return {mpq_class(num, den), mpq_class(0)}; }
  /// Parses "p/q" or "p" for each part.
  static GaussianRational parse(const std::string& re, const std::string& im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

}  // namespace foliage
