#ifndef UNICIRCLE_REAL_HPP
#define UNICIRCLE_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace unicircle {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 64;

// Fixed-precision real number backed by an mpfr_t. Every value carries its
// own precision; binary operations compute at the wider of the two operand
// precisions, rounded to nearest. All operations are deterministic: the same
// inputs at the same precision produce bit-identical results.
class Real {
 public:
  Real() : Real(kDefaultPrecision) {}

  explicit Real(Precision prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_zero(v_, 1);
  }

  Real(long value, Precision prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  static Real from_double(double value, Precision prec) {
    Real r(prec);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      if (!v_[0]._mpfr_d) mpfr_init2(v_, mpfr_get_prec(o.v_));
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) {
      if (v_[0]._mpfr_d) mpfr_clear(v_);
      v_[0] = o.v_[0];
      o.v_[0]._mpfr_d = nullptr;
    }
    return *this;
  }

  ~Real() {
    if (v_[0]._mpfr_d) mpfr_clear(v_);
  }

  static Real pi(Precision prec);
  // Parses a decimal string ("1.5", "-2.25e-10", ...). Throws on malformed
  // or non-finite input.
  static Real from_decimal(std::string_view s, Precision prec);
  static Real from_rational(const mpq_class& q, Precision prec);
  static Real from_integer(const mpz_class& z, Precision prec);
  // 2^e, exact.
  static Real pow2(long e, Precision prec);

  Precision precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string that re-reads to the identical binary value at this
  // value's precision.
  std::string to_decimal() const;
  // Display string with a fixed number of significant digits.
  std::string to_string(size_t digits = 20) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
  Real& operator/=(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }

  void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator*(const Real& a, long b) { return scalar(a, b, mpfr_mul_si); }
  friend Real operator*(long a, const Real& b) { return scalar(b, a, mpfr_mul_si); }
  friend Real operator/(const Real& a, long b) { return scalar(a, b, mpfr_div_si); }
  friend Real operator+(const Real& a, long b) { return scalar(a, b, mpfr_add_si); }
  friend Real operator-(const Real& a, long b) { return scalar(a, b, mpfr_sub_si); }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  static Precision checked(Precision prec) {
    if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
      throw std::invalid_argument("precision out of range");
    }
    return prec;
  }

  template <typename Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  template <typename Op>
  static Real scalar(const Real& a, long b, Op op) {
    Real r(a.precision());
    op(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real pow(const Real& base, const Real& expo);
Real pown(const Real& base, long n);
Real cos(const Real& a);
Real sin(const Real& a);
void sin_cos(Real& s, Real& c, const Real& theta);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& a);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

}  // namespace unicircle

#endif
