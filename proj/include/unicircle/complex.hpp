#ifndef UNICIRCLE_COMPLEX_HPP
#define UNICIRCLE_COMPLEX_HPP

#include "unicircle/real.hpp"

namespace unicircle {

// Complex number over two Reals. Operation precision follows the Real rules
// (max of operand precisions, round to nearest).
class Complex {
 public:
  Complex() = default;
  explicit Complex(Precision prec) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(long re, long im, Precision prec) : re_(re, prec), im_(im, prec) {}

  // e^{i theta} at theta's precision.
  static Complex unit(const Real& theta) {
    Real s(theta.precision());
    Real c(theta.precision());
    sin_cos(s, c, theta);
    return Complex(std::move(c), std::move(s));
  }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }

  Precision precision() const { return std::max(re_.precision(), im_.precision()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Real abs() const { return hypot(re_, im_); }
  Real norm() const { return re_ * re_ + im_ * im_; }
  Complex conj() const { return Complex(re_, -im_); }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }

  friend Complex operator*(const Complex& a, const Complex& b) {
    Precision p = std::max(a.precision(), b.precision());
    Real re(p), im(p);
    mpfr_fmms(re.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_fmma(im.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    return Complex(std::move(re), std::move(im));
  }

  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex(a.re_ * s, a.im_ * s);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }

  friend Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    Precision p = std::max(a.precision(), b.precision());
    Real den(p);
    mpfr_fmma(den.raw(), b.re_.raw(), b.re_.raw(), b.im_.raw(), b.im_.raw(), MPFR_RNDN);
    Real re(p), im(p);
    mpfr_fmma(re.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_fmms(im.raw(), a.im_.raw(), b.re_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    return Complex(re / den, im / den);
  }

  friend Complex operator/(const Complex& a, const Real& s) {
    return Complex(a.re_ / s, a.im_ / s);
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  // Integer power by binary exponentiation; n may be negative.
  Complex pow_int(long n) const {
    Precision p = precision();
    if (n == 0) return Complex(1, 0, p);
    Complex base = *this;
    bool invert = n < 0;
    unsigned long e = invert ? -(unsigned long)n : (unsigned long)n;
    Complex acc(1, 0, p);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    if (invert) return Complex(1, 0, p) / acc;
    return acc;
  }

 private:
  Real re_;
  Real im_;
};

inline Complex conj(const Complex& a) { return a.conj(); }

// exp(re) * (cos(im) + i sin(im)).
inline Complex exp(const Complex& z) {
  Real m = exp(z.real());
  Complex u = Complex::unit(z.imag());
  return u * m;
}

}  // namespace unicircle

#endif
