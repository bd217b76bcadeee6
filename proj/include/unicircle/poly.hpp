#ifndef UNICIRCLE_POLY_HPP
#define UNICIRCLE_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unicircle/complex.hpp"

namespace unicircle {

// Thrown by analysis operations that reject the zero polynomial.
class ZeroPolynomialError : public std::invalid_argument {
 public:
  ZeroPolynomialError() : std::invalid_argument("zero input") {}
};

// Structural tolerance separating representation error from genuine
// structural failure: 2^(-prec/2).
Real default_structural_tol(Precision prec);

// Complex polynomial with coefficients stored ascending by power at a fixed
// precision (>= 64 bits). Coefficients are normalized to the declared
// precision on construction and trailing exact zeros are trimmed, so a
// nonzero polynomial always has a nonzero leading coefficient. The zero
// polynomial is representable (empty coefficient vector, degree -1).
class Polynomial {
 public:
  Polynomial() : Polynomial(kDefaultPrecision) {}
  explicit Polynomial(Precision prec);
  Polynomial(std::vector<Complex> coeffs, Precision prec);

  // Convenience for tests and small constructions: real integer coefficients.
  static Polynomial from_int_coeffs(const std::vector<long>& coeffs,
                                    Precision prec = kDefaultPrecision);

  Precision precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  // Coefficient of z^j; exact zero beyond the stored degree.
  const Complex& coeff(size_t j) const;
  const Complex& leading() const;

  bool real_coefficients(const Real& tol) const;
  Real max_abs_coeff() const;

  // Horner evaluation at max(polynomial precision, z precision).
  Complex evaluate(const Complex& z) const;
  // |p(e^{i theta})|.
  Real abs_on_circle(const Real& theta) const;

  // These reject the zero polynomial.
  Polynomial derivative() const;
  // Reverse-conjugate relative to the stored degree n:
  // star(h)(z) = z^n conj(h)(1/conj(z)); coefficient j = conj(coeff n-j).
  Polynomial star() const;

  Polynomial scaled(const Complex& factor) const;
  Polynomial scaled(const Real& factor) const;
  // z^s * p for s >= 0.
  Polynomial shifted(int s) const;
  // Strips z^m where m is the number of low-order exact-zero coefficients;
  // reports m through origin_multiplicity when non-null.
  Polynomial deflate_origin(int* origin_multiplicity = nullptr) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  // Coefficient convolution at the max of both precisions.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  // Largest |difference| between coefficients of equal index.
  friend Real max_coeff_distance(const Polynomial& a, const Polynomial& b);

  // {"precision_bits": N, "coeffs": [["re","im"], ...]} with exact
  // round-trip decimal strings, ascending by power.
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void normalize();

  std::vector<Complex> coeffs_;
  Precision prec_;
};

// A polynomial together with its verified unit-modulus constant epsilon:
// P(z) = epsilon z^d conj(P)(1/conj(z)), i.e. A_j = epsilon conj(A_{d-j}).
struct SelfInversiveForm {
  Polynomial poly;
  Complex epsilon;
  Real tol;
};

struct DetectRejection {
  int failing_index;
  std::string reason;
};

struct DetectResult {
  std::optional<SelfInversiveForm> form;
  std::optional<DetectRejection> rejection;
  bool ok() const { return form.has_value(); }
};

// Computes epsilon = A_0 / conj(A_d) and verifies A_j = epsilon conj(A_{d-j})
// for all j within tol. On failure reports the first failing index.
DetectResult detect_self_inversive(const Polynomial& p, const Real& tol);
DetectResult detect_self_inversive(const Polynomial& p);

// z^{d-n} h(z) + lambda h*(z) for d > n = deg h and |lambda| = 1. The result
// is self-inversive with epsilon = lambda.
Polynomial construct_theorem1(const Polynomial& h, int d, const Complex& lambda);

struct DerivativeDecomposition {
  Polynomial h;
  Complex lambda;
};

// h = P'/d, lambda = epsilon; construct_theorem1(h, d, lambda) reproduces P.
DerivativeDecomposition derivative_decomposition(const SelfInversiveForm& P);

}  // namespace unicircle

#endif
