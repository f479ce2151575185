#include "hsfact/scalar.hpp"

#include <stdexcept>

namespace hsfact {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("fraction: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.real());
  if (sgn(z.real()) == 0) return to_string(z.imag()) + "*i";
  return to_string(z.real()) + (sgn(z.imag()) > 0 ? "+" : "") + to_string(z.imag()) + "*i";
}

}  // namespace hsfact
