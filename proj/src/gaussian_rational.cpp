#include "foliage/gaussian_rational.hpp"

#include <stdexcept>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  std::string text = s;
  // mpq_set_str rejects a leading '+' and surrounding whitespace.
  if (!text.empty() && text.front() == '+') text.erase(text.begin());
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  std::string s = "(" + re_.get_str();
  s += sgn(im_) > 0 ? "+" : "-";
  s += mpq_class(abs(im_)).get_str() + "*i)";
  return s;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.to_string(); }

}  // namespace foliage
