#include "unicircle/poly.hpp"

#include <nlohmann/json.hpp>

namespace unicircle {

Real default_structural_tol(Precision prec) {
  return Real::pow2(-static_cast<long>(prec) / 2, 64);
}

Polynomial::Polynomial(Precision prec) : prec_(prec) {
  if (prec < kMinPrecision) throw std::invalid_argument("precision_bits must be >= 64");
}

Polynomial::Polynomial(std::vector<Complex> coeffs, Precision prec) : prec_(prec) {
  if (prec < kMinPrecision) throw std::invalid_argument("precision_bits must be >= 64");
  coeffs_.reserve(coeffs.size());
  for (auto& c : coeffs) {
    if (!c.is_finite()) throw std::invalid_argument("non-finite coefficient");
    Real re(prec), im(prec);
    mpfr_set(re.raw(), c.real().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), c.imag().raw(), MPFR_RNDN);
    coeffs_.emplace_back(std::move(re), std::move(im));
  }
  normalize();
}

Polynomial Polynomial::from_int_coeffs(const std::vector<long>& coeffs, Precision prec) {
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v, 0, prec);
  return Polynomial(std::move(c), prec);
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Complex& Polynomial::coeff(size_t j) const {
  static const Complex zero(kMinPrecision);
  if (j >= coeffs_.size()) return zero;
  return coeffs_[j];
}

const Complex& Polynomial::leading() const {
  if (is_zero()) throw ZeroPolynomialError();
  return coeffs_.back();
}

bool Polynomial::real_coefficients(const Real& tol) const {
  for (const auto& c : coeffs_) {
    if (abs(c.imag()) > tol) return false;
  }
  return true;
}

Real Polynomial::max_abs_coeff() const {
  Real m(0L, prec_);
  for (const auto& c : coeffs_) m = max(m, c.abs());
  return m;
}

Complex Polynomial::evaluate(const Complex& z) const {
  Precision wp = std::max(prec_, z.precision());
  if (is_zero()) return Complex(wp);
  // Horner with two fused ops per step; temporaries reused across the loop.
  Real are(wp), aim(wp), tre(wp), tim(wp);
  mpfr_set(are.raw(), coeffs_.back().real().raw(), MPFR_RNDN);
  mpfr_set(aim.raw(), coeffs_.back().imag().raw(), MPFR_RNDN);
  for (size_t j = coeffs_.size() - 1; j-- > 0;) {
    mpfr_fmms(tre.raw(), are.raw(), z.real().raw(), aim.raw(), z.imag().raw(), MPFR_RNDN);
    mpfr_fmma(tim.raw(), are.raw(), z.imag().raw(), aim.raw(), z.real().raw(), MPFR_RNDN);
    mpfr_add(are.raw(), tre.raw(), coeffs_[j].real().raw(), MPFR_RNDN);
    mpfr_add(aim.raw(), tim.raw(), coeffs_[j].imag().raw(), MPFR_RNDN);
  }
  return Complex(std::move(are), std::move(aim));
}

Real Polynomial::abs_on_circle(const Real& theta) const {
  return evaluate(Complex::unit(theta)).abs();
}

Polynomial Polynomial::derivative() const {
  if (is_zero()) throw ZeroPolynomialError();
  std::vector<Complex> d;
  d.reserve(coeffs_.size() - 1);
  for (size_t j = 1; j < coeffs_.size(); ++j) {
    Real re(prec_), im(prec_);
    mpfr_mul_ui(re.raw(), coeffs_[j].real().raw(), j, MPFR_RNDN);
    mpfr_mul_ui(im.raw(), coeffs_[j].imag().raw(), j, MPFR_RNDN);
    d.emplace_back(std::move(re), std::move(im));
  }
  return Polynomial(std::move(d), prec_);
}

Polynomial Polynomial::star() const {
  if (is_zero()) throw ZeroPolynomialError();
  std::vector<Complex> s(coeffs_.rbegin(), coeffs_.rend());
  for (auto& c : s) c = c.conj();
  return Polynomial(std::move(s), prec_);
}

Polynomial Polynomial::scaled(const Complex& factor) const {
  std::vector<Complex> s;
  s.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.push_back(c * factor);
  return Polynomial(std::move(s), std::max(prec_, factor.precision()));
}

Polynomial Polynomial::scaled(const Real& factor) const {
  std::vector<Complex> s;
  s.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.push_back(c * factor);
  return Polynomial(std::move(s), std::max(prec_, factor.precision()));
}

Polynomial Polynomial::shifted(int s) const {
  if (s < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  std::vector<Complex> c(static_cast<size_t>(s), Complex(prec_));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c), prec_);
}

Polynomial Polynomial::deflate_origin(int* origin_multiplicity) const {
  size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m].is_zero()) ++m;
  if (origin_multiplicity) *origin_multiplicity = static_cast<int>(m);
  std::vector<Complex> c(coeffs_.begin() + m, coeffs_.end());
  return Polynomial(std::move(c), prec_);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Precision wp = std::max(a.prec_, b.prec_);
  std::vector<Complex> c;
  size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  c.reserve(n);
  for (size_t j = 0; j < n; ++j) c.push_back(a.coeff(j) + b.coeff(j));
  return Polynomial(std::move(c), wp);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Precision wp = std::max(a.prec_, b.prec_);
  std::vector<Complex> c;
  size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  c.reserve(n);
  for (size_t j = 0; j < n; ++j) c.push_back(a.coeff(j) - b.coeff(j));
  return Polynomial(std::move(c), wp);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Precision wp = std::max(a.prec_, b.prec_);
  if (a.is_zero() || b.is_zero()) return Polynomial(wp);
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(wp));
  Real t(wp);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      const Complex& x = a.coeffs_[i];
      const Complex& y = b.coeffs_[j];
      Complex& acc = c[i + j];
      mpfr_fmms(t.raw(), x.real().raw(), y.real().raw(), x.imag().raw(), y.imag().raw(),
                MPFR_RNDN);
      mpfr_add(acc.real().raw(), acc.real().raw(), t.raw(), MPFR_RNDN);
      mpfr_fmma(t.raw(), x.real().raw(), y.imag().raw(), x.imag().raw(), y.real().raw(),
                MPFR_RNDN);
      mpfr_add(acc.imag().raw(), acc.imag().raw(), t.raw(), MPFR_RNDN);
    }
  }
  return Polynomial(std::move(c), wp);
}

Real max_coeff_distance(const Polynomial& a, const Polynomial& b) {
  Real m(0L, std::max(a.prec_, b.prec_));
  size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (size_t j = 0; j < n; ++j) m = max(m, (a.coeff(j) - b.coeff(j)).abs());
  return m;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json j;
  j["precision_bits"] = static_cast<long>(prec_);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    coeffs.push_back({c.real().to_decimal(), c.imag().to_decimal()});
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("precision_bits") || !j.contains("coeffs")) {
    throw std::invalid_argument("polynomial JSON needs precision_bits and coeffs");
  }
  long prec = j.at("precision_bits").get<long>();
  if (prec < kMinPrecision) throw std::invalid_argument("precision_bits must be >= 64");
  std::vector<Complex> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("coefficient must be a [re, im] pair of decimal strings");
    }
    Real re = Real::from_decimal(entry[0].get<std::string>(), prec);
    Real im = Real::from_decimal(entry[1].get<std::string>(), prec);
    coeffs.emplace_back(std::move(re), std::move(im));
  }
  return Polynomial(std::move(coeffs), prec);
}

DetectResult detect_self_inversive(const Polynomial& p, const Real& tol) {
  if (p.is_zero()) throw ZeroPolynomialError();
  DetectResult result;
  const int d = p.degree();
  const Complex& a0 = p.coeff(0);
  const Complex& ad = p.coeff(d);
  if (a0.is_zero()) {
    result.rejection = DetectRejection{0, "A_0 = 0 with A_d != 0 (epsilon would force |A_0| = |A_d|)"};
    return result;
  }
  Complex eps = a0 / ad.conj();
  if (abs(eps.abs() - Real(1, eps.precision())) > tol) {
    result.rejection = DetectRejection{0, "|A_0| != |A_d|, no unit-modulus epsilon exists"};
    return result;
  }
  for (int j = 0; j <= d; ++j) {
    Real defect = (p.coeff(j) - eps * p.coeff(d - j).conj()).abs();
    if (defect > tol) {
      result.rejection = DetectRejection{j, "coefficient symmetry fails at index " + std::to_string(j)};
      return result;
    }
  }
  result.form = SelfInversiveForm{p, eps, tol};
  return result;
}

DetectResult detect_self_inversive(const Polynomial& p) {
  return detect_self_inversive(p, default_structural_tol(p.precision()));
}

Polynomial construct_theorem1(const Polynomial& h, int d, const Complex& lambda) {
  if (h.is_zero()) throw ZeroPolynomialError();
  const int n = h.degree();
  if (d <= n) throw std::invalid_argument("degree constraint d>n violated");
  Real unit_defect = abs(lambda.abs() - Real(1, lambda.precision()));
  if (unit_defect > default_structural_tol(std::max(h.precision(), lambda.precision()))) {
    throw std::invalid_argument("lambda must have modulus 1");
  }
  return h.shifted(d - n) + h.star().scaled(lambda);
}

DerivativeDecomposition derivative_decomposition(const SelfInversiveForm& P) {
  const int d = P.poly.degree();
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Polynomial h = P.poly.derivative().scaled(Real(1, P.poly.precision()) / Real(d, P.poly.precision()));
  return DerivativeDecomposition{std::move(h), P.epsilon};
}

}  // namespace unicircle
