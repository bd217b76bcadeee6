#include "unicircle/rootfind.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace unicircle {

Real default_unimodularity_tol(Precision prec) {
  return Real::pow2(-static_cast<long>(prec) / 3, 64);
}

namespace {

// |p| evaluated with absolute coefficients at radius r; upper bound for the
// evaluation noise scale of p near |z| = r.
Real abs_horner(const std::vector<Real>& absc, const Real& r) {
  Real acc = absc.back();
  for (size_t j = absc.size() - 1; j-- > 0;) {
    acc *= r;
    acc += absc[j];
  }
  return acc;
}

}  // namespace

RootReport all_roots(const Polynomial& p, Precision prec, int max_iter) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() < 1) throw std::invalid_argument("all_roots needs degree >= 1");

  const Precision wp = std::max(prec, p.precision());
  int origin_mult = 0;
  const Polynomial q(p.deflate_origin(&origin_mult).coeffs(), wp);
  const int dq = q.degree();

  RootReport rep;
  rep.origin_multiplicity = origin_mult;
  rep.max_modulus_deviation = Real(0L, wp);
  rep.residual_threshold = Real(0L, wp);
  rep.converged = true;

  std::vector<Complex> zs;
  zs.reserve(static_cast<size_t>(p.degree()));
  for (int i = 0; i < origin_mult; ++i) zs.emplace_back(wp);

  if (dq >= 1) {
    const Polynomial qd = q.derivative();
    std::vector<Real> absc;
    absc.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) absc.push_back(c.abs());

    // Cauchy bound 1 + max |B_j / B_d| for the initial circle.
    Real radius(1, wp);
    for (int j = 0; j < dq; ++j) radius = max(radius, Real(1, wp) + absc[j] / absc[dq]);

    const Real two_pi = Real::pi(wp) * Real(2, wp);
    const Real offset = Real(2, wp) / Real(5, wp);
    std::vector<Complex> z;
    z.reserve(static_cast<size_t>(dq));
    for (int j = 0; j < dq; ++j) {
      Real theta = two_pi * Real(j, wp) / Real(dq, wp) + offset;
      z.push_back(Complex::unit(theta) * radius);
    }

    const Real conv_tol = Real::pow2(-static_cast<long>(wp) / 2, wp);
    const Real noise_scale = Real::pow2(-static_cast<long>(wp), wp) * Real(4 * dq + 4, wp);
    const Real small_ev = Real::pow2(-static_cast<long>(wp) / 4, wp);
    const Real nudge = Real::pow2(-static_cast<long>(wp) / 2 + 4, wp);

    std::vector<bool> frozen(static_cast<size_t>(dq), false);
    std::vector<bool> by_noise(static_cast<size_t>(dq), false);
    int done = 0;

    if (dq == 1) {
      z[0] = -(q.coeff(0) / q.coeff(1));
      frozen[0] = true;
      done = 1;
    }

    Real sre(wp), sim(wp), dre(wp), dim(wp), den(wp), t(wp);
    int iter = 0;
    while (done < dq && iter < max_iter) {
      ++iter;
      for (int i = 0; i < dq; ++i) {
        if (frozen[i]) continue;
        Complex ev = q.evaluate(z[i]);
        Real evabs = ev.abs();
        if (evabs.is_zero()) {
          frozen[i] = true;
          ++done;
          continue;
        }
        if (evabs < small_ev) {
          Real noise = noise_scale * abs_horner(absc, z[i].abs());
          if (evabs <= noise) {
            frozen[i] = true;
            by_noise[i] = true;
            ++done;
            continue;
          }
        }
        Complex evd = qd.evaluate(z[i]);
        if (evd.is_zero()) {
          // Saddle point; deterministic nudge off it.
          z[i] += Complex(nudge * Real(i + 1, wp), nudge);
          continue;
        }
        Complex newton = ev / evd;
        // S = sum_{j != i} 1/(z_i - z_j), accumulated in place.
        mpfr_set_zero(sre.raw(), 1);
        mpfr_set_zero(sim.raw(), 1);
        for (int j = 0; j < dq; ++j) {
          if (j == i) continue;
          mpfr_sub(dre.raw(), z[i].real().raw(), z[j].real().raw(), MPFR_RNDN);
          mpfr_sub(dim.raw(), z[i].imag().raw(), z[j].imag().raw(), MPFR_RNDN);
          mpfr_fmma(den.raw(), dre.raw(), dre.raw(), dim.raw(), dim.raw(), MPFR_RNDN);
          if (mpfr_zero_p(den.raw())) continue;  // coincident iterate, skip
          mpfr_div(t.raw(), dre.raw(), den.raw(), MPFR_RNDN);
          mpfr_add(sre.raw(), sre.raw(), t.raw(), MPFR_RNDN);
          mpfr_div(t.raw(), dim.raw(), den.raw(), MPFR_RNDN);
          mpfr_sub(sim.raw(), sim.raw(), t.raw(), MPFR_RNDN);
        }
        Complex denom = Complex(1, 0, wp) - newton * Complex(sre, sim);
        Complex w = denom.is_zero() ? newton : newton / denom;
        z[i] -= w;
        if (w.abs() <= conv_tol * max(Real(1, wp), z[i].abs())) {
          frozen[i] = true;
          ++done;
        }
      }
    }
    rep.iterations = iter;
    rep.converged = (done == dq);
    for (int i = 0; i < dq; ++i) {
      if (by_noise[i]) ++rep.noise_floor_frozen;
      zs.push_back(z[i]);
    }
  }

  // Residuals and thresholds against the original polynomial.
  const Polynomial pw(p.coeffs(), wp);
  const Polynomial pd = pw.degree() >= 1 ? pw.derivative() : Polynomial(wp);
  std::vector<Real> absp;
  absp.reserve(pw.coeffs().size());
  for (const auto& c : pw.coeffs()) absp.push_back(c.abs());
  const Real lead = pw.leading().abs();
  const Real conv_tol = Real::pow2(-static_cast<long>(wp) / 2, wp);
  const Real noise_scale = Real::pow2(-static_cast<long>(wp), wp) * Real(4 * pw.degree() + 4, wp);
  const Real one(1, wp);

  for (const auto& root : zs) {
    Real rabs = root.abs();
    rep.roots.push_back(root);
    rep.residuals.push_back(pw.evaluate(root).abs() / lead);
    rep.max_modulus_deviation = max(rep.max_modulus_deviation, abs(rabs - one));
    Real dabs = pd.is_zero() ? Real(0L, wp) : pd.evaluate(root).abs();
    Real bound = (noise_scale * abs_horner(absp, rabs) +
                  Real(8, wp) * conv_tol * max(one, rabs) * dabs) /
                 lead;
    rep.residual_threshold = max(rep.residual_threshold, bound);
  }
  return rep;
}

UnimodularityVerdict unimodularity(const Polynomial& p, const Real& tol, Precision prec,
                                   int max_iter) {
  UnimodularityVerdict v;
  v.report = all_roots(p, prec, max_iter);
  if (!v.report.converged) {
    throw ConvergenceError("root finding did not converge within iteration budget");
  }
  v.max_modulus_deviation = v.report.max_modulus_deviation;
  v.verdict = v.max_modulus_deviation <= tol;
  return v;
}

Real max_root_modulus(const Polynomial& p, Precision prec, int max_iter) {
  RootReport rep = all_roots(p, prec, max_iter);
  if (!rep.converged) {
    throw ConvergenceError("root finding did not converge within iteration budget");
  }
  Real m(0L, std::max(prec, p.precision()));
  for (const auto& r : rep.roots) m = max(m, r.abs());
  return m;
}

namespace {

struct Point {
  Real x;
  Real y;
};

Real cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Point& a, const Point& b) {
  int c = mpfr_cmp(a.x.raw(), b.x.raw());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.y.raw(), b.y.raw()) < 0;
}

// Andrew's monotone chain; returns the hull counterclockwise, collinear
// points dropped. Degenerate inputs give a 1- or 2-point "hull".
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Real dist_point_segment(const Point& q, const Point& a, const Point& b) {
  Real abx = b.x - a.x;
  Real aby = b.y - a.y;
  Real len2 = abx * abx + aby * aby;
  if (len2.is_zero()) return hypot(q.x - a.x, q.y - a.y);
  Real tproj = ((q.x - a.x) * abx + (q.y - a.y) * aby) / len2;
  Real zero(0L, tproj.precision());
  Real one(1, tproj.precision());
  tproj = max(zero, min(one, tproj));
  Real px = a.x + tproj * abx;
  Real py = a.y + tproj * aby;
  return hypot(q.x - px, q.y - py);
}

// Inside the hull or within distance tol of its boundary.
bool hull_contains(const std::vector<Point>& hull, const Point& q, const Real& tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hypot(q.x - hull[0].x, q.y - hull[0].y) <= tol;
  if (hull.size() == 2) return dist_point_segment(q, hull[0], hull[1]) <= tol;
  bool inside = true;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, q).sign() < 0) {
      inside = false;
      break;
    }
  }
  if (inside) return true;
  Real best = dist_point_segment(q, hull.back(), hull.front());
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    best = min(best, dist_point_segment(q, hull[i], hull[i + 1]));
  }
  return best <= tol;
}

}  // namespace

bool convex_hull_containment(const Polynomial& p, const Real& tol, Precision prec,
                             int max_iter) {
  if (p.degree() < 2) throw std::invalid_argument("convex_hull_containment needs degree >= 2");
  RootReport rp = all_roots(p, prec, max_iter);
  RootReport rd = all_roots(p.derivative(), prec, max_iter);
  if (!rp.converged || !rd.converged) {
    throw ConvergenceError("root finding did not converge within iteration budget");
  }
  std::vector<Point> pts;
  pts.reserve(rp.roots.size());
  for (const auto& r : rp.roots) pts.push_back(Point{r.real(), r.imag()});
  std::vector<Point> hull = convex_hull(std::move(pts));
  for (const auto& r : rd.roots) {
    if (!hull_contains(hull, Point{r.real(), r.imag()}, tol)) return false;
  }
  return true;
}

nlohmann::json RootReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "unicircle/1";
  j["converged"] = converged;
  j["iterations"] = iterations;
  j["origin_multiplicity"] = origin_multiplicity;
  j["noise_floor_frozen"] = noise_floor_frozen;
  j["max_modulus_deviation"] = max_modulus_deviation.to_decimal();
  j["residual_threshold"] = residual_threshold.to_decimal();
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : roots) rs.push_back({r.real().to_decimal(), r.imag().to_decimal()});
  j["roots"] = std::move(rs);
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : residuals) res.push_back(r.to_decimal());
  j["residuals"] = std::move(res);
  return j;
}

}  // namespace unicircle
