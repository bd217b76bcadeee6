#include "unicircle/real.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

namespace unicircle {

Real Real::pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::from_decimal(std::string_view s, Precision prec) {
  Real r(prec);
  std::string buf(s);
  if (buf.empty()) throw std::invalid_argument("empty decimal string");
  char* end = nullptr;
  if (mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN) == 0 && end == buf.c_str()) {
    throw std::invalid_argument("malformed decimal string: " + buf);
  }
  if (end != buf.c_str() + buf.size()) {
    throw std::invalid_argument("trailing characters in decimal string: " + buf);
  }
  if (!r.is_finite()) {
    throw std::invalid_argument("non-finite value not allowed: " + buf);
  }
  return r;
}

Real Real::from_rational(const mpq_class& q, Precision prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& z, Precision prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, Precision prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

namespace {

// Formats the (digits, exponent) pair from mpfr_get_str as d.ddd...e<exp>.
std::string format_sci(const char* digits, mpfr_exp_t exp10) {
  std::string d(digits);
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d = d.substr(1);
  }
  // Strip useless trailing zeros (the leading digit always stays).
  size_t last = d.find_last_not_of('0');
  if (last == std::string::npos) last = 0;
  d = d.substr(0, last + 1);
  std::ostringstream out;
  out << sign << d[0];
  if (d.size() > 1) out << '.' << d.substr(1);
  out << 'e' << (exp10 - 1);
  return out.str();
}

}  // namespace

std::string Real::to_decimal() const {
  if (!is_finite()) throw std::invalid_argument("cannot serialize non-finite value");
  if (is_zero()) return mpfr_signbit(v_) ? "-0" : "0";
  mpfr_exp_t exp10 = 0;
  // n = 0 requests enough digits for an exact round trip at this precision.
  char* s = mpfr_get_str(nullptr, &exp10, 10, 0, v_, MPFR_RNDN);
  std::string out = format_sci(s, exp10);
  mpfr_free_str(s);
  return out;
}

std::string Real::to_string(size_t digits) const {
  if (is_nan()) return "nan";
  if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  std::string out = format_sci(s, exp10);
  mpfr_free_str(s);
  return out;
}

namespace {

template <typename Op>
Real unary(const Real& a, Op op) {
  Real r(a.precision());
  op(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& a) { return unary(a, mpfr_abs); }
Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
Real exp(const Real& a) { return unary(a, mpfr_exp); }
Real log(const Real& a) { return unary(a, mpfr_log); }
Real cos(const Real& a) { return unary(a, mpfr_cos); }
Real sin(const Real& a) { return unary(a, mpfr_sin); }

Real floor(const Real& a) {
  Real r(a.precision());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real pow(const Real& base, const Real& expo) {
  Real r(std::max(base.precision(), expo.precision()));
  mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
  return r;
}

Real pown(const Real& base, long n) {
  Real r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), n, MPFR_RNDN);
  return r;
}

void sin_cos(Real& s, Real& c, const Real& theta) {
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

}  // namespace unicircle
