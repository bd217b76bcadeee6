#ifndef UNICIRCLE_FAMILIES_HPP
#define UNICIRCLE_FAMILIES_HPP

#include <nlohmann/json_fwd.hpp>

#include "unicircle/certify.hpp"
#include "unicircle/poly.hpp"

namespace unicircle {

enum class FamilyId { P, Q, W, Y, S };

const char* family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);

// q_j and delta_j, j = 0..k, normalized zeta/eta products:
//   P: q_j = zeta(2j) zeta(2k-2j) / zeta(2k),        delta_j = q_j - zeta(2j)
//   Q: q_j = eta0(2j) eta0(2k-2j) / eta0(2k-1),      delta_j = q_j - eta0(2j)
//   W: q_j = eta(2j) eta(2k-2j) / eta(2k),           delta_j = eta(2j) - q_j
struct FamilySequences {
  FamilyId family;
  int k = 0;
  std::vector<Real> q;
  std::vector<Real> delta;
};

FamilySequences sequences(FamilyId family, int k, Precision prec);

// The degree-2k polynomial of the Bernoulli convolution plus the
// zeta(2k-1)(z^{2k-1} + (-1)^k z) tail, built from the equivalent
// zeta-product form. Leading coefficient -zeta(2k)/pi.
Polynomial build_P(int k, Precision prec);
// Same polynomial from the Bernoulli-binomial form, kept as an independent
// cross-check path (exact rational inner coefficients).
Polynomial build_P_bernoulli(int k, Precision prec);
// Monic M_k = -pi/zeta(2k) (z^2+1) P_k, degree 2k+2.
Polynomial build_M(int k, Precision prec);

Polynomial build_Q(int k, Precision prec);
// Monic N_k = Q_k (z^2+1) / (2^{2k-1} eta0(2k-1)), degree 2k+1.
Polynomial build_N(int k, Precision prec);
Polynomial build_W(int k, Precision prec);
// Monic V_k = pi/(2^{2k} eta(2k)) W_k (z^2+1), degree 2k+2.
Polynomial build_V(int k, Precision prec);
Polynomial build_Y(int k, Precision prec);
Polynomial build_S(int k, Precision prec);

Polynomial build_family(FamilyId family, int k, Precision prec);
// M, N or V for families P, Q, W.
Polynomial monic_base_of(FamilyId family, int k, Precision prec);

// Main polynomial h_r (independent of k). P needs r >= 2, Q/W accept r >= 1.
Polynomial h_r_of(FamilyId family, int r, Precision prec);
// Error polynomial e_r, degree k-1; needs k >= 2r (P also k >= 3).
Polynomial e_r_of(FamilyId family, int k, int r, Precision prec);

// Lemma-2-shaped split of the monic base: base (N_k: base/z) equals
// z^{a} h_r + lambda z^{b} h_r* + z^{c} e_r + lambda z^{d} e_r* with the
// family's exponents. Reconstruction mismatch beyond tol is a hard error.
struct FamilyDecomposition {
  FamilyId family;
  int k = 0;
  int r = 0;
  Polynomial h_r;
  Polynomial e_r;
  Complex lambda;  // (-1)^k
  Polynomial monic_base;
  Real reconstruction_error;
  nlohmann::json to_json() const;
};

FamilyDecomposition decompose(FamilyId family, int k, int r, Precision prec);

// Paper constants for the per-family certificate.
struct FamilyCertParams {
  int r = 0;
  const char* c = nullptr;        // Lemma-2 threshold
  const char* e_bound = nullptr;  // proven |e_r| bound on the circle
  int min_k = 0;                  // smallest k the certificate covers
};

FamilyCertParams default_cert_params(FamilyId family);  // P, Q, W only

// Lemma-2 certificate whose assembled polynomial is exactly the monic base
// (M_k, V_k) or its origin-deflated quotient (N_k / z).
Lemma2Certificate family_certificate(FamilyId family, int k, int r, const Real& c, long samples,
                                     Precision prec, long verify_cap_degree);

struct RamanujanResult {
  Real residual;
  Real tail_bound;
};

// | P_k(z)/(2 z^k) - [(-z)^{-(k-1)} S1(N) - z^{k-1} S2(N)] | where S1, S2
// are the truncated exponential series; requires Re z > 0.
RamanujanResult ramanujan_residual(int k, const Complex& z, int terms, Precision prec);

// z^k (z^3 - z - 1) + (z^3 + z^2 - 1).
Polynomial counterexample_poly(int k, Precision prec);

struct ScanRow {
  std::string part;
  int k = 0;
  int j = 0;  // also carries r for the summed parts
  Real lhs;
  Real rhs;
  Real margin;  // rhs - lhs
  bool ok = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::string> notes;
  int violations = 0;
  nlohmann::json to_json() const;
  std::string to_csv() const;  // columns: part,k,j,lhs,rhs,margin
};

// Every displayed inequality of Lemma 3 evaluated over its stated domain for
// k in [k_min, k_max] (part (i) over n = 2..2*k_max).
ScanReport lemma3_scan(int k_min, int k_max, Precision prec);
// Lemma 5 for both eta0 and eta. Part (iv) for eta0 is scanned from j = 2:
// the printed j = 1 case is numerically false (q_1 ~ eta0(2) = 1.2337
// exceeds 1 + 2^{2-2k}) and the paper only uses j >= 2 downstream.
ScanReport lemma5_scan(int k_min, int k_max, Precision prec);
// Certified max of |e_4| on the circle <= 0.019 for k in [max(k_min,11), k_max].
ScanReport lemma6_scan(int k_min, int k_max, long samples, Precision prec);

struct FamilyVerifyRow {
  FamilyId family;
  int k = 0;
  bool built = false;
  bool direct_checked = false;
  bool direct_ok = false;
  Real max_modulus_deviation;
  int origin_multiplicity = 0;
  bool cert_checked = false;
  bool cert_ok = false;
  bool pass = false;
  std::string note;
  nlohmann::json to_json() const;
};

// One k of the verify-family driver: build, direct root check on the
// origin-deflated polynomial, and the Lemma-2 certificate where the family
// provides one (P: k >= 11, Q: k >= 8, W: k >= 6).
FamilyVerifyRow verify_family_k(FamilyId family, int k, Precision prec, const Real& root_tol,
                                long samples, long verify_cap_degree);

}  // namespace unicircle

#endif
