#ifndef UNICIRCLE_ROOTFIND_HPP
#define UNICIRCLE_ROOTFIND_HPP

#include <nlohmann/json_fwd.hpp>

#include "unicircle/poly.hpp"

namespace unicircle {

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct RootReport {
  std::vector<Complex> roots;          // all roots with multiplicity, len = degree
  std::vector<Real> residuals;         // |p(root_i)| / |A_d|
  Real max_modulus_deviation;          // max_i | |root_i| - 1 |
  Real residual_threshold;             // residual_i <= this when converged
  int iterations = 0;
  bool converged = false;
  int origin_multiplicity = 0;         // exact roots at z = 0 (deflated)
  int noise_floor_frozen = 0;          // roots accepted at the evaluation noise
                                       // floor (cluster diagnostic)
  nlohmann::json to_json() const;
};

// All complex roots via Aberth-Ehrlich simultaneous iteration with
// deterministic initial guesses on the Cauchy-bound circle, angles
// 2 pi j / d + 0.4. A root is accepted when its correction falls below
// 2^(-wp/2) or its residual reaches the evaluation noise floor. Never throws
// on non-convergence; the report says converged = false instead.
RootReport all_roots(const Polynomial& p, Precision prec, int max_iter = 400);

Real default_unimodularity_tol(Precision prec);  // 2^(-prec/3)

struct UnimodularityVerdict {
  bool verdict = false;
  Real max_modulus_deviation;
  RootReport report;
};

// verdict = (max | |root|-1 | <= tol). Throws ConvergenceError when the
// solver did not converge.
UnimodularityVerdict unimodularity(const Polynomial& p, const Real& tol, Precision prec,
                                   int max_iter = 400);

// max |root|; 0 for a constant-free monomial. Throws on non-convergence.
Real max_root_modulus(const Polynomial& p, Precision prec, int max_iter = 400);

// True iff every root of P' lies within distance tol of the convex hull of
// the roots of P (Gauss-Lucas containment).
bool convex_hull_containment(const Polynomial& p, const Real& tol, Precision prec,
                             int max_iter = 400);

}  // namespace unicircle

#endif
