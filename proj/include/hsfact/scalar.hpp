#pragma once

#include <gmpxx.h>

#include <string>

namespace hsfact {

using Rational = mpq_class;

/// Renders a rational as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

/// num/den in lowest terms. mpq_class(num, den) does not reduce, and GMP
/// comparisons assume reduced operands.
Rational fraction(long num, long den);

/// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

/// Exact element a + b*i of Q(i).
///
/// The odd-dimensional gamma matrices need i, so every spinor-valued
/// quantity in the numeric layer lives over the Gaussian rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// this += a * b without temporaries on the real fast path.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic on (re, im); only for use as an ordering key.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const GaussianRational& z);

}  // namespace hsfact
