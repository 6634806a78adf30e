#ifndef DGAP_COMPLEX_HPP
#define DGAP_COMPLEX_HPP

#include <algorithm>
#include <string>
#include <utility>

#include "dgap/real.hpp"

namespace dgap {

// Arbitrary-precision complex scalar: a pair of Reals. Houses every complex
// quantity downstream (z, lambda, series values, matrix entries).
class Complex {
public:
  explicit Complex(int prec_bits) : re_(prec_bits), im_(prec_bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, int prec_bits) : re_(re, prec_bits), im_(im, prec_bits) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(re_.precision_bits()) {}

  static Complex zero(int prec_bits) { return Complex(prec_bits); }
  static Complex one(int prec_bits) { return Complex(1.0, 0.0, prec_bits); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  int precision_bits() const {
    return std::max(re_.precision_bits(), im_.precision_bits());
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex conj() const {
    Complex r(*this);
    r.im_.negate();
    return r;
  }

  Real abs() const { return hypot(re_, im_); }

  // |re| + |im|; cheap norm for balancing and thresholds.
  Real abs1() const { return dgap::abs(re_) + dgap::abs(im_); }

  // ---- arithmetic ----
  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator*=(const Real& s) { re_ *= s; im_ *= s; return *this; }
  Complex& operator*=(long k) { re_ *= k; im_ *= k; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }
  Complex& operator/=(long k) { re_ /= k; im_ /= k; return *this; }

  void negate() { re_.negate(); im_.negate(); }

  friend Complex operator+(const Complex& x, const Complex& y) {
    return Complex(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend Complex operator-(const Complex& x, const Complex& y) {
    return Complex(x.re_ - y.re_, x.im_ - y.im_);
  }
  friend Complex operator-(const Complex& x) {
    Complex r(x);
    r.negate();
    return r;
  }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return Complex(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend Complex operator*(const Complex& x, const Real& s) {
    return Complex(x.re_ * s, x.im_ * s);
  }
  friend Complex operator*(const Real& s, const Complex& x) { return x * s; }
  friend Complex operator*(const Complex& x, long k) { return Complex(x.re_ * k, x.im_ * k); }
  friend Complex operator*(long k, const Complex& x) { return x * k; }

  friend Complex operator/(const Complex& x, const Complex& y) {
    // (x * conj(y)) / |y|^2; MPFR's exponent range makes the naive form safe.
    Real den = y.re_ * y.re_ + y.im_ * y.im_;
    return Complex((x.re_ * y.re_ + x.im_ * y.im_) / den,
                   (x.im_ * y.re_ - x.re_ * y.im_) / den);
  }
  friend Complex operator/(const Complex& x, const Real& s) {
    return Complex(x.re_ / s, x.im_ / s);
  }
  friend Complex operator/(const Complex& x, long k) { return Complex(x.re_ / k, x.im_ / k); }

  friend bool operator==(const Complex& x, const Complex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const Complex& x, const Complex& y) { return !(x == y); }

  std::string to_string(int sig_digits = 30) const {
    std::string s = re_.to_scientific(sig_digits);
    std::string t = im_.to_scientific(sig_digits);
    if (t[0] != '-') s += "+";
    return s + t + "i";
  }

private:
  Real re_, im_;
};

// Principal square root: branch cut on the negative real axis, Re(result) >= 0.
inline Complex sqrt(const Complex& z) {
  const int bits = z.precision_bits();
  if (z.is_zero()) return Complex(bits);
  Real r = z.abs();
  if (z.re().sign() >= 0) {
    Real u = sqrt(ldexp2(r + z.re(), -1));
    Real v = z.im() / ldexp2(u, 1);
    return Complex(std::move(u), std::move(v));
  }
  Real q = sqrt(ldexp2(r - z.re(), -1));  // q > 0
  Real u = abs(z.im()) / ldexp2(q, 1);
  if (z.im().sign() < 0) q.negate();
  return Complex(std::move(u), std::move(q));
}

// Principal logarithm: log|z| + i arg(z), arg in (-pi, pi].
inline Complex log(const Complex& z) {
  return Complex(log(z.abs()), atan2(z.im(), z.re()));
}

}  // namespace dgap

#endif  // DGAP_COMPLEX_HPP
