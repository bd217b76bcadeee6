#ifndef UNICIRCLE_CERTIFY_HPP
#define UNICIRCLE_CERTIFY_HPP

#include <nlohmann/json_fwd.hpp>

#include "unicircle/poly.hpp"
#include "unicircle/rootfind.hpp"

namespace unicircle {

// sum_j j |A_j|: an upper bound for |d/dtheta p(e^{i theta})| on the unit
// circle (and for |p'| on the closed unit disk).
Real lipschitz_constant(const Polynomial& p);

// Certified one-sided bound on |p| over |z| = 1 from a uniform theta-grid
// plus the Lipschitz slack pi/samples:
//   min:  certified_bound = sampled_extremum - lipschitz * pi/samples
//   max:  certified_bound = sampled_extremum + lipschitz * pi/samples
struct CircleBound {
  enum class Kind { min, max };
  Kind kind = Kind::min;
  Real sampled_extremum;
  Real theta_at;
  Real lipschitz;
  long samples = 0;
  Real certified_bound;
  nlohmann::json to_json() const;
};

inline constexpr long kExploratorySamples = 1L << 12;
inline constexpr long kCertificateSamples = 1L << 18;

// Samples |p(e^{i theta})| on a uniform grid (folded to [0, pi] for real
// coefficients), golden-section refines around the best sample. samples >= 64.
CircleBound certified_min_on_circle(const Polynomial& p, long samples);
CircleBound certified_max_on_circle(const Polynomial& p, long samples);

// Doubling grids from 1024 up to the cap, stopping as soon as the certified
// bound clears the target (>= target for min, <= target for max).
CircleBound certified_min_adaptive(const Polynomial& p, const Real& target, long samples_cap);
CircleBound certified_max_adaptive(const Polynomial& p, const Real& target, long samples_cap);

// Certificate for Lemma-2-shaped constructions: if |h| >= c > 0 on the
// circle, |e| <= c on the circle, h has all roots strictly inside, and
// k > max(deg h, deg e), then z^{2k-n} h + z^k e + lambda (h* + z^{k-m} e*)
// has all its zeros on the unit circle.
struct Lemma2Certificate {
  Polynomial h;
  Polynomial e;
  Complex lambda;
  long k = 0;
  Real c;
  CircleBound h_min_bound;
  CircleBound e_max_bound;
  bool h_roots_inside = false;
  Real h_max_root_modulus;
  bool valid = false;
  std::string diagnostic;
  int assembled_degree = 0;
  // Present when the assembled polynomial was cross-checked by root finding
  // (degree <= verify_cap).
  std::optional<bool> assembled_unimodular;
  std::optional<Real> assembled_deviation;
  nlohmann::json to_json() const;
};

// The polynomial the certificate vouches for; e may be the zero polynomial.
Polynomial lemma2_polynomial(const Polynomial& h, const Polynomial& e, const Complex& lambda,
                             long k);

// samples is the grid cap for both bounds (adaptive doubling below it).
// e_target, when given, makes the e-bound refine past c down to that value
// (used to reproduce the paper's sharper error bounds). A bound that
// straddles c at the cap yields valid = false with an "insufficient
// samples" diagnostic, never a false positive.
Lemma2Certificate lemma2_certificate(const Polynomial& h, const Polynomial& e,
                                     const Complex& lambda, long k, const Real& c,
                                     long samples = kCertificateSamples,
                                     const std::optional<Real>& tol = std::nullopt,
                                     long verify_cap_degree = 80,
                                     const std::optional<Real>& e_target = std::nullopt);

}  // namespace unicircle

#endif
