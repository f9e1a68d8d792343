#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace germ {

/// Base error for everything the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// Exact Gaussian rational a + b*i with a, b in Q.
///
/// Real scalars are the special case b = 0; every arithmetic operation keeps
/// a fast path for that case since most germs in practice are real.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}    // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational re, Rational im = 0);

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }
  double to_double() const { return re_.get_d(); }

  /// Canonical text: "3/2", "-i", "2*i", "(1 - 2*i)".
  std::string str() const;
  /// True when str() needs no parentheses inside a product.
  bool is_atomic() const { return is_real() || sgn(re_) == 0; }

 private:
  Rational re_;
  Rational im_;
};

/// Exact square root of a non-negative rational, if it is a rational.
bool rational_sqrt(const Rational& q, Rational& out);
/// Exact k-th root of a rational (real root; negative input allowed for odd k).
bool rational_root(const Rational& q, unsigned k, Rational& out);
/// A square root in Q(i), if one exists.
bool gaussian_sqrt(const Scalar& z, Scalar& out);
/// A k-th root in Q(i), if the bounded search finds one.
bool gaussian_root(const Scalar& z, unsigned k, Scalar& out);

Scalar pow(const Scalar& base, unsigned e);

}  // namespace germ
