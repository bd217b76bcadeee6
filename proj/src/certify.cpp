#include "unicircle/certify.hpp"

#include <mutex>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace unicircle {

Real lipschitz_constant(const Polynomial& p) {
  Real sum(0L, p.precision());
  for (size_t j = 1; j < p.coeffs().size(); ++j) {
    sum += Real(static_cast<long>(j), p.precision()) * p.coeffs()[j].abs();
  }
  return sum;
}

namespace {

struct GridScan {
  Real best_value;
  Real best_theta;
};

// Scans |p(e^{i theta})| over a uniform grid of `samples` angles on the full
// circle; real-coefficient p is folded to [0, pi]. The unit point is rotated
// incrementally and re-synchronized periodically.
GridScan scan_circle(const Polynomial& p, long samples, bool want_min, Precision wp) {
  const Real two_pi = Real::pi(wp) * Real(2, wp);
  const Real step = two_pi / Real(samples, wp);
  const bool fold = p.real_coefficients(Real::pow2(-static_cast<long>(wp) + 8, wp));
  const long count = fold ? samples / 2 + 1 : samples;

  const Complex omega = Complex::unit(step);
  Complex u(1, 0, wp);
  GridScan out{p.evaluate(u).abs(), Real(0L, wp)};
  for (long i = 1; i < count; ++i) {
    if (i % 256 == 0) {
      u = Complex::unit(step * Real(i, wp));
    } else {
      u = u * omega;
    }
    Real v = p.evaluate(u).abs();
    if (want_min ? (v < out.best_value) : (v > out.best_value)) {
      out.best_value = v;
      out.best_theta = step * Real(i, wp);
    }
  }
  return out;
}

// Golden-section refinement of |p(e^{i theta})| in [lo, hi].
void refine(const Polynomial& p, bool want_min, Real lo, Real hi, Real* value, Real* theta) {
  const Precision wp = lo.precision();
  auto f = [&](const Real& t) { return p.abs_on_circle(t); };
  auto better = [&](const Real& a, const Real& b) { return want_min ? a <= b : a >= b; };
  Real gr = (sqrt(Real(5, wp)) - Real(1, wp)) / 2;
  Real x1 = hi - gr * (hi - lo);
  Real x2 = lo + gr * (hi - lo);
  Real f1 = f(x1);
  Real f2 = f(x2);
  for (int it = 0; it < 96; ++it) {
    if (better(f1, f2)) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  const Real& fb = better(f1, f2) ? f1 : f2;
  const Real& xb = better(f1, f2) ? x1 : x2;
  if (better(fb, *value)) {
    *value = fb;
    *theta = xb;
  }
}

CircleBound bound_on_circle(const Polynomial& p, long samples, CircleBound::Kind kind) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (samples < 64) throw std::invalid_argument("samples must be >= 64");
  const Precision wp = p.precision() + 16;
  const Polynomial pw(p.coeffs(), wp);
  const bool want_min = kind == CircleBound::Kind::min;

  GridScan scan = scan_circle(pw, samples, want_min, wp);
  Real step = Real::pi(wp) * Real(2, wp) / Real(samples, wp);
  refine(pw, want_min, scan.best_theta - step, scan.best_theta + step, &scan.best_value,
         &scan.best_theta);

  CircleBound b;
  b.kind = kind;
  b.sampled_extremum = scan.best_value;
  b.theta_at = scan.best_theta;
  b.lipschitz = lipschitz_constant(pw);
  b.samples = samples;
  Real slack = b.lipschitz * Real::pi(wp) / Real(samples, wp);
  b.certified_bound = want_min ? scan.best_value - slack : scan.best_value + slack;
  return b;
}

// Cache keyed by the exact coefficient serialization; the same polynomial
// bound is requested for every k in a family sweep.
std::mutex cache_mutex;
std::unordered_map<std::string, CircleBound> bound_cache;

CircleBound bound_cached(const Polynomial& p, long samples, CircleBound::Kind kind) {
  std::string key = (kind == CircleBound::Kind::min ? "min|" : "max|") +
                    std::to_string(samples) + "|" + std::to_string(p.precision()) + "|" +
                    p.to_json().dump();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = bound_cache.find(key);
    if (it != bound_cache.end()) return it->second;
  }
  CircleBound b = bound_on_circle(p, samples, kind);
  std::lock_guard<std::mutex> lock(cache_mutex);
  bound_cache.emplace(std::move(key), b);
  return b;
}

CircleBound bound_adaptive(const Polynomial& p, const Real& target, long samples_cap,
                           CircleBound::Kind kind) {
  if (samples_cap < 64) throw std::invalid_argument("samples cap must be >= 64");
  long s = std::min(1024L, samples_cap);
  for (;;) {
    CircleBound b = bound_cached(p, s, kind);
    bool good = kind == CircleBound::Kind::min ? b.certified_bound >= target
                                               : b.certified_bound <= target;
    if (good || s >= samples_cap) return b;
    s = std::min(s * 2, samples_cap);
  }
}

}  // namespace

CircleBound certified_min_on_circle(const Polynomial& p, long samples) {
  return bound_on_circle(p, samples, CircleBound::Kind::min);
}

CircleBound certified_max_on_circle(const Polynomial& p, long samples) {
  return bound_on_circle(p, samples, CircleBound::Kind::max);
}

CircleBound certified_min_adaptive(const Polynomial& p, const Real& target, long samples_cap) {
  return bound_adaptive(p, target, samples_cap, CircleBound::Kind::min);
}

CircleBound certified_max_adaptive(const Polynomial& p, const Real& target, long samples_cap) {
  return bound_adaptive(p, target, samples_cap, CircleBound::Kind::max);
}

Polynomial lemma2_polynomial(const Polynomial& h, const Polynomial& e, const Complex& lambda,
                             long k) {
  const int n = h.degree();
  Polynomial out = h.shifted(static_cast<int>(2 * k) - n) + h.star().scaled(lambda);
  if (!e.is_zero()) {
    const int m = e.degree();
    out = out + e.shifted(static_cast<int>(k)) +
          e.star().shifted(static_cast<int>(k) - m).scaled(lambda);
  }
  return out;
}

Lemma2Certificate lemma2_certificate(const Polynomial& h, const Polynomial& e,
                                     const Complex& lambda, long k, const Real& c, long samples,
                                     const std::optional<Real>& tol, long verify_cap_degree,
                                     const std::optional<Real>& e_target) {
  if (h.is_zero()) throw ZeroPolynomialError();
  if (c <= 0L) throw std::invalid_argument("c must be positive");
  const Precision wp = h.precision();
  const Real structural_tol = tol.value_or(default_structural_tol(wp));
  if (abs(lambda.abs() - Real(1, wp)) > structural_tol) {
    throw std::invalid_argument("lambda must have modulus 1");
  }
  const int n = h.degree();
  const int m = e.is_zero() ? -1 : e.degree();
  if (k <= std::max(n, m)) {
    throw std::invalid_argument("k must exceed max(deg h, deg e)");
  }

  Lemma2Certificate cert;
  cert.h = h;
  cert.e = e;
  cert.lambda = lambda;
  cert.k = k;
  cert.c = c;

  cert.h_min_bound = bound_adaptive(h, c, samples, CircleBound::Kind::min);
  if (e.is_zero()) {
    cert.e_max_bound.kind = CircleBound::Kind::max;
    cert.e_max_bound.sampled_extremum = Real(0L, wp);
    cert.e_max_bound.theta_at = Real(0L, wp);
    cert.e_max_bound.lipschitz = Real(0L, wp);
    cert.e_max_bound.samples = 0;
    cert.e_max_bound.certified_bound = Real(0L, wp);
  } else {
    Real target = e_target ? min(c, *e_target) : c;
    cert.e_max_bound = bound_adaptive(e, target, samples, CircleBound::Kind::max);
  }

  RootReport hr = all_roots(h, wp);
  cert.h_max_root_modulus = Real(0L, wp);
  for (const auto& r : hr.roots) cert.h_max_root_modulus = max(cert.h_max_root_modulus, r.abs());

  std::string diag;
  if (!hr.converged) {
    diag = "h root solve did not converge";
  } else if (cert.h_min_bound.certified_bound > 0L) {
    // With min |h| >= b > 0 on the circle and |h'| <= L on the closed disk,
    // no root of h can lie within b/(2L) of |z| = 1 from the inside.
    Real L = max(lipschitz_constant(h), Real(1, wp));
    Real margin = min(cert.h_min_bound.certified_bound / (L * Real(2, wp)),
                      Real(1, wp) / Real(2, wp));
    if (cert.h_max_root_modulus <= Real(1, wp) - margin) {
      cert.h_roots_inside = true;
    } else {
      diag = "boundary degeneracy: h has a root within the exclusion band of |z| = 1";
    }
  } else {
    diag = "certified min of |h| on the circle is not positive";
  }

  bool h_ok = cert.h_min_bound.certified_bound >= c;
  bool e_ok = cert.e_max_bound.certified_bound <= c;
  cert.valid = h_ok && e_ok && cert.h_roots_inside;

  if (!cert.valid && diag.empty()) {
    if (!h_ok && cert.h_min_bound.sampled_extremum >= c) {
      diag = "insufficient samples: sampled min |h| clears c but the certified bound does not";
    } else if (!e_ok && cert.e_max_bound.sampled_extremum <= c) {
      diag = "insufficient samples: sampled max |e| clears c but the certified bound does not";
    } else if (!h_ok) {
      diag = "min |h| on the circle is below c";
    } else {
      diag = "max |e| on the circle exceeds c";
    }
  }
  cert.diagnostic = diag;

  Polynomial assembled = lemma2_polynomial(h, e, lambda, k);
  cert.assembled_degree = assembled.degree();
  if (cert.valid && verify_cap_degree > 0 && assembled.degree() <= verify_cap_degree) {
    UnimodularityVerdict uv = unimodularity(assembled, default_unimodularity_tol(wp) , wp);
    cert.assembled_unimodular = uv.verdict;
    cert.assembled_deviation = uv.max_modulus_deviation;
  }
  return cert;
}

nlohmann::json CircleBound::to_json() const {
  nlohmann::json j;
  j["kind"] = kind == Kind::min ? "min" : "max";
  j["sampled_extremum"] = sampled_extremum.to_decimal();
  j["theta_at"] = theta_at.to_decimal();
  j["lipschitz"] = lipschitz.to_decimal();
  j["samples"] = samples;
  j["certified_bound"] = certified_bound.to_decimal();
  return j;
}

nlohmann::json Lemma2Certificate::to_json() const {
  nlohmann::json j;
  j["schema"] = "unicircle/1";
  j["valid"] = valid;
  j["k"] = k;
  j["c"] = c.to_decimal();
  j["lambda"] = {lambda.real().to_decimal(), lambda.imag().to_decimal()};
  j["h"] = h.to_json();
  j["e"] = e.to_json();
  j["h_min_bound"] = h_min_bound.to_json();
  j["e_max_bound"] = e_max_bound.to_json();
  j["h_roots_inside"] = h_roots_inside;
  j["h_max_root_modulus"] = h_max_root_modulus.to_decimal();
  j["assembled_degree"] = assembled_degree;
  if (assembled_unimodular) j["assembled_unimodular"] = *assembled_unimodular;
  if (assembled_deviation) j["assembled_deviation"] = assembled_deviation->to_decimal();
  if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
  return j;
}

}  // namespace unicircle
