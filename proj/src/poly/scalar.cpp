#include "germ/poly/scalar.hpp"

#include <sstream>

namespace germ {

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Rational Scalar::norm() const { return re_ * re_ + im_ * im_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_real()) return Scalar(Rational(1) / re_);
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string imag;
  Rational abs_im = abs(im_);
  if (abs_im == 1) {
    imag = "i";
  } else {
    imag = rational_str(abs_im) + "*i";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  std::ostringstream os;
  os << "(" << rational_str(re_) << (sgn(im_) < 0 ? " - " : " + ") << imag << ")";
  return os.str();
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

bool rational_root(const Rational& q, unsigned k, Rational& out) {
  if (k == 0) return false;
  if (k == 1) {
    out = q;
    return true;
  }
  bool negative = sgn(q) < 0;
  if (negative && k % 2 == 0) return false;
  mpz_class n = abs(q.get_num());
  mpz_class d = q.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return false;
  out = Rational(negative ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

bool gaussian_sqrt(const Scalar& z, Scalar& out) {
  if (z.is_zero()) {
    out = Scalar();
    return true;
  }
  if (z.is_real()) {
    Rational r;
    if (sgn(z.re()) >= 0) {
      if (!rational_sqrt(z.re(), r)) return false;
      out = Scalar(r);
    } else {
      if (!rational_sqrt(-z.re(), r)) return false;
      out = Scalar(Rational(0), r);
    }
    return true;
  }
  Rational modulus;
  if (!rational_sqrt(z.norm(), modulus)) return false;
  Rational x;
  if (!rational_sqrt((z.re() + modulus) / 2, x) || sgn(x) == 0) return false;
  Rational y = z.im() / (2 * x);
  out = Scalar(x, y);
  return out * out == z;
}

bool gaussian_root(const Scalar& z, unsigned k, Scalar& out) {
  if (k == 0) return false;
  if (k == 1 || z.is_zero()) {
    out = z;
    return true;
  }
  Scalar cur = z;
  unsigned odd = k;
  while (odd % 2 == 0) {
    Scalar s;
    if (!gaussian_sqrt(cur, s)) return false;
    cur = s;
    odd /= 2;
  }
  if (odd == 1) {
    out = cur;
    return true;
  }
  Rational r;
  if (cur.is_real()) {
    if (!rational_root(cur.re(), odd, r)) return false;
    out = Scalar(r);
    return true;
  }
  if (sgn(cur.re()) == 0) {
    // (+-i)^odd = i*cur.im sign bookkeeping: i^odd = i when odd = 1 mod 4.
    if (!rational_root(cur.im(), odd, r)) return false;
    Scalar unit = (odd % 4 == 1) ? Scalar::imaginary_unit() : -Scalar::imaginary_unit();
    out = unit * Scalar(r);
    return pow(out, k) == z;
  }
  return false;
}

Scalar pow(const Scalar& base, unsigned e) {
  Scalar result(1);
  Scalar b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace germ
