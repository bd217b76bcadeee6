#include "unicircle/criteria.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace unicircle {

const char* criterion_name(CriterionId id) {
  switch (id) {
    case CriterionId::cohn: return "cohn";
    case CriterionId::lakatos: return "lakatos";
    case CriterionId::lakatos_losonczi_half: return "lakatos_losonczi_half";
    case CriterionId::lakatos_losonczi_alpha: return "lakatos_losonczi_alpha";
    case CriterionId::smyth_inf_mu: return "smyth_inf_mu";
    case CriterionId::schinzel: return "schinzel";
  }
  return "?";
}

CriterionId criterion_from_name(const std::string& name) {
  for (CriterionId id : {CriterionId::cohn, CriterionId::lakatos,
                         CriterionId::lakatos_losonczi_half, CriterionId::lakatos_losonczi_alpha,
                         CriterionId::smyth_inf_mu, CriterionId::schinzel}) {
    if (name == criterion_name(id)) return id;
  }
  throw std::invalid_argument("unknown criterion: " + name);
}

namespace {

// Margins within rounding distance of zero snap to exactly zero, so that
// equality cases (margin mathematically 0) report holds with margin 0.
Real snap(const Real& margin, const Real& scale, Precision wp) {
  Real eq_tol = (scale + Real(1, wp)) * Real::pow2(-static_cast<long>(wp) / 2, wp);
  if (abs(margin) <= eq_tol) return Real(0L, wp);
  return margin;
}

bool reciprocal_real(const SelfInversiveForm& P) {
  return P.poly.real_coefficients(P.tol) &&
         (P.epsilon - Complex(1, 0, P.epsilon.precision())).abs() <= P.tol;
}

}  // namespace

CriterionVerdict cohn(const SelfInversiveForm& P, const Real& tol, Precision prec) {
  if (P.poly.degree() < 1) throw std::invalid_argument("cohn needs degree >= 1");
  CriterionVerdict v;
  v.id = CriterionId::cohn;
  v.is_iff = true;
  const Precision wp = std::max(prec, P.poly.precision());
  Polynomial pd = P.poly.derivative();
  Real max_mod(0L, wp);
  if (pd.degree() >= 1) max_mod = max_root_modulus(pd, prec);
  v.margin = Real(1, wp) + tol - max_mod;
  v.holds = max_mod <= Real(1, wp) + tol;
  v.note = "max |P' root| = " + max_mod.to_string(25);
  return v;
}

CriterionVerdict lakatos(const SelfInversiveForm& P) {
  CriterionVerdict v;
  v.id = CriterionId::lakatos;
  const Precision wp = P.poly.precision();
  v.margin = Real(0L, wp);
  if (!reciprocal_real(P)) {
    v.applicable = false;
    v.note = "not applicable: needs a real-coefficient reciprocal polynomial";
    return v;
  }
  const int d = P.poly.degree();
  const Complex& ad = P.poly.coeff(d);
  Real sum(0L, wp);
  for (int j = 0; j <= d; ++j) sum += (P.poly.coeff(j) - ad).abs();
  Real lead = ad.abs();
  v.margin = snap(lead - sum, lead + sum, wp);
  v.holds = v.margin >= 0L;
  v.strict = v.margin > 0L;
  return v;
}

CriterionVerdict lakatos_losonczi_half(const SelfInversiveForm& P) {
  CriterionVerdict v;
  v.id = CriterionId::lakatos_losonczi_half;
  const Precision wp = P.poly.precision();
  const int d = P.poly.degree();
  Real sum(0L, wp);
  for (int j = 1; j <= d - 1; ++j) sum += P.poly.coeff(j).abs();
  sum /= 2;
  Real lead = P.poly.coeff(d).abs();
  v.margin = snap(lead - sum, lead + sum, wp);
  v.holds = v.margin >= 0L;
  return v;
}

namespace {

Real alpha_margin(const SelfInversiveForm& P, const Real& alpha) {
  const Precision wp = std::max(P.poly.precision(), alpha.precision());
  const int d = P.poly.degree();
  const Complex& ad = P.poly.coeff(d);
  Complex shrunk = ad * (Real(1, wp) - alpha);
  Real sum(0L, wp);
  for (int j = 1; j <= d - 1; ++j) sum += (P.poly.coeff(j) - shrunk).abs();
  return (Real(1, wp) + alpha) * ad.abs() - sum;
}

}  // namespace

CriterionVerdict lakatos_losonczi_alpha(const SelfInversiveForm& P, const Real& alpha) {
  if (alpha < 0L || alpha > 1L) throw std::invalid_argument("alpha must be in [0, 1]");
  CriterionVerdict v;
  v.id = CriterionId::lakatos_losonczi_alpha;
  const Precision wp = std::max(P.poly.precision(), alpha.precision());
  v.alpha = alpha;
  v.margin = Real(0L, wp);
  if (!reciprocal_real(P)) {
    v.applicable = false;
    v.note = "not applicable: needs a real-coefficient reciprocal polynomial";
    return v;
  }
  Real m = alpha_margin(P, alpha);
  v.margin = snap(m, P.poly.max_abs_coeff() * Real(P.poly.degree() + 1, wp), wp);
  v.holds = v.margin >= 0L;
  return v;
}

CriterionVerdict best_alpha(const SelfInversiveForm& P, int grid_size) {
  if (grid_size < 3) throw std::invalid_argument("grid_size must be >= 3");
  CriterionVerdict v;
  v.id = CriterionId::lakatos_losonczi_alpha;
  const Precision wp = P.poly.precision();
  v.margin = Real(0L, wp);
  if (!reciprocal_real(P)) {
    v.applicable = false;
    v.note = "not applicable: needs a real-coefficient reciprocal polynomial";
    return v;
  }
  Real best_a(0L, wp);
  Real best_m = alpha_margin(P, best_a);
  for (int i = 1; i < grid_size; ++i) {
    Real a = Real(i, wp) / Real(grid_size - 1, wp);
    Real m = alpha_margin(P, a);
    if (m > best_m) {
      best_m = m;
      best_a = a;
    }
  }
  // The margin is concave in alpha (linear minus a sum of convex terms), so
  // ternary search in the bracketing cell converges to the maximizer.
  Real step = Real(1, wp) / Real(grid_size - 1, wp);
  Real lo = max(Real(0L, wp), best_a - step);
  Real hi = min(Real(1, wp), best_a + step);
  for (int it = 0; it < 96; ++it) {
    Real third = (hi - lo) / 3;
    Real m1 = lo + third;
    Real m2 = hi - third;
    if (alpha_margin(P, m1) < alpha_margin(P, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  Real mid = (lo + hi) / 2;
  Real mm = alpha_margin(P, mid);
  if (mm > best_m) {
    best_m = mm;
    best_a = mid;
  }
  v.alpha = best_a;
  v.margin = snap(best_m, P.poly.max_abs_coeff() * Real(P.poly.degree() + 1, wp), wp);
  v.holds = v.margin >= 0L;
  return v;
}

Real smyth_value(const Polynomial& P, const Complex& mu) {
  if (P.is_zero()) throw ZeroPolynomialError();
  const Precision wp = std::max(P.precision(), mu.precision());
  const int d = P.degree();
  Real sum(0L, wp);
  for (int j = 0; j <= d - 1; ++j) sum += (P.coeff(j) - mu * P.coeff(j + 1)).abs();
  return sum / 2;
}

CriterionVerdict smyth_inf_mu(const SelfInversiveForm& P, int grid_size) {
  if (grid_size < 4) throw std::invalid_argument("grid_size must be >= 4");
  CriterionVerdict v;
  v.id = CriterionId::smyth_inf_mu;
  const Precision wp = P.poly.precision();
  const int d = P.poly.degree();
  const Real two_pi = Real::pi(wp) * Real(2, wp);

  auto value_at = [&](const Real& theta) { return smyth_value(P.poly, Complex::unit(theta)); };

  Real best_theta(0L, wp);
  Real grid_best = value_at(best_theta);
  for (int i = 1; i < grid_size; ++i) {
    Real theta = two_pi * Real(i, wp) / Real(grid_size, wp);
    Real val = value_at(theta);
    if (val < grid_best) {
      grid_best = val;
      best_theta = theta;
    }
  }

  // Golden-section refinement in the bracketing cell.
  Real step = two_pi / Real(grid_size, wp);
  Real lo = best_theta - step;
  Real hi = best_theta + step;
  Real gr = (sqrt(Real(5, wp)) - Real(1, wp)) / 2;
  Real x1 = hi - gr * (hi - lo);
  Real x2 = lo + gr * (hi - lo);
  Real f1 = value_at(x1);
  Real f2 = value_at(x2);
  for (int it = 0; it < 96; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = value_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = value_at(x2);
    }
  }
  Real refined = min(f1, f2);
  Real refined_theta = f1 <= f2 ? x1 : x2;
  if (refined < grid_best) {
    grid_best = refined;
    best_theta = refined_theta;
  }

  // d/dtheta of the objective is bounded by 1/2 sum_{j>=1} |A_j|.
  Real lip(0L, wp);
  for (int j = 1; j <= d; ++j) lip += P.poly.coeff(j).abs();
  lip /= 2;
  Real pi_over_grid = Real::pi(wp) / Real(grid_size, wp);

  Real lead = P.poly.coeff(d).abs();
  v.mu = Complex::unit(best_theta);
  v.inf_upper_bound = grid_best;
  v.inf_lower_bound = grid_best - lip * pi_over_grid;
  v.margin = snap(lead - grid_best, lead + grid_best, wp);
  v.holds = v.margin >= 0L;
  return v;
}

namespace {

struct WeightedPoint {
  Complex p;
  Real w;
};

Real fermat_cost(const std::vector<WeightedPoint>& pts, const Real& fixed, const Complex& c) {
  Real sum = fixed;
  for (const auto& t : pts) sum += t.w * (c - t.p).abs();
  return sum;
}

Real median_of(std::vector<Real> xs) {
  std::sort(xs.begin(), xs.end());
  size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

// Weiszfeld iteration for the weighted Fermat point of pts; seeded at the
// coordinate-wise median. Returns the best of the iterate, every vertex,
// and the caller-provided extra candidates.
Complex weiszfeld(const std::vector<WeightedPoint>& pts, const Real& fixed, int iters,
                  const std::vector<Complex>& extra, Precision wp, Real* best_cost) {
  std::vector<Real> xs, ys;
  xs.reserve(pts.size());
  ys.reserve(pts.size());
  for (const auto& t : pts) {
    xs.push_back(t.p.real());
    ys.push_back(t.p.imag());
  }
  Complex c(median_of(std::move(xs)), median_of(std::move(ys)));
  const Real tiny = Real::pow2(-static_cast<long>(wp) + 16, wp);
  const Real step_tol = Real::pow2(-static_cast<long>(wp) / 4, wp);
  for (int it = 0; it < iters; ++it) {
    Complex num(wp);
    Real den(0L, wp);
    for (const auto& t : pts) {
      Real r = (c - t.p).abs();
      if (r < tiny) r = tiny;  // vertex singularity, smoothed by one ulp-scale
      Real wr = t.w / r;
      num += t.p * wr;
      den += wr;
    }
    Complex next = num / Complex(den, Real(0L, wp));
    Real step = (next - c).abs();
    c = next;
    if (step <= step_tol * max(Real(1, wp), c.abs())) break;
  }
  Complex best = c;
  Real cost = fermat_cost(pts, fixed, c);
  for (const auto& t : pts) {
    Real vc = fermat_cost(pts, fixed, t.p);
    if (vc < cost) {
      cost = vc;
      best = t.p;
    }
  }
  for (const auto& e : extra) {
    Real ec = fermat_cost(pts, fixed, e);
    if (ec < cost) {
      cost = ec;
      best = e;
    }
  }
  *best_cost = cost;
  return best;
}

}  // namespace

CriterionVerdict schinzel(const SelfInversiveForm& P, int mu_grid, int c_iters) {
  if (mu_grid < 4) throw std::invalid_argument("mu_grid must be >= 4");
  CriterionVerdict v;
  v.id = CriterionId::schinzel;
  const Precision wp = P.poly.precision();
  const int d = P.poly.degree();
  const Complex& ad = P.poly.coeff(d);
  const Real lead = ad.abs();
  const Real two_pi = Real::pi(wp) * Real(2, wp);
  const Complex one(1, 0, wp);

  auto solve_mu = [&](const Complex& mu, Real* cost) {
    // F(c) = sum_j |c A_j - mu^{d-j} A_d|; points p_j = mu^{d-j} A_d / A_j
    // weighted by |A_j| where A_j != 0, plus |A_d| per vanished coefficient.
    std::vector<WeightedPoint> pts;
    Real fixed(0L, wp);
    Complex mu_pow(1, 0, wp);  // mu^{d-j} built from j = d downward
    std::vector<Complex> targets(static_cast<size_t>(d) + 1, Complex(wp));
    for (int j = d; j >= 0; --j) {
      targets[static_cast<size_t>(j)] = mu_pow * ad;
      mu_pow = mu_pow * mu;
    }
    for (int j = 0; j <= d; ++j) {
      const Complex& aj = P.poly.coeff(j);
      if (aj.is_zero()) {
        fixed += targets[static_cast<size_t>(j)].abs();
      } else {
        pts.push_back(WeightedPoint{targets[static_cast<size_t>(j)] / aj, aj.abs()});
      }
    }
    std::vector<Complex> extra = {one, Complex(wp)};
    return weiszfeld(pts, fixed, c_iters, extra, wp, cost);
  };

  Real best_theta(0L, wp);
  Real best_cost(0L, wp);
  Complex best_c = solve_mu(one, &best_cost);
  for (int i = 1; i < mu_grid; ++i) {
    Real theta = two_pi * Real(i, wp) / Real(mu_grid, wp);
    Real cost(0L, wp);
    Complex c = solve_mu(Complex::unit(theta), &cost);
    if (cost < best_cost) {
      best_cost = cost;
      best_c = c;
      best_theta = theta;
    }
  }

  // Golden-section refinement of mu around the best grid angle.
  Real step = two_pi / Real(mu_grid, wp);
  Real lo = best_theta - step;
  Real hi = best_theta + step;
  Real gr = (sqrt(Real(5, wp)) - Real(1, wp)) / 2;
  auto cost_at = [&](const Real& theta) {
    Real cost(0L, wp);
    solve_mu(Complex::unit(theta), &cost);
    return cost;
  };
  Real x1 = hi - gr * (hi - lo);
  Real x2 = lo + gr * (hi - lo);
  Real f1 = cost_at(x1);
  Real f2 = cost_at(x2);
  for (int it = 0; it < 48; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cost_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cost_at(x2);
    }
  }
  Real rt = f1 <= f2 ? x1 : x2;
  Real rcost(0L, wp);
  Complex rc = solve_mu(Complex::unit(rt), &rcost);
  if (rcost < best_cost) {
    best_cost = rcost;
    best_c = rc;
    best_theta = rt;
  }

  v.mu = Complex::unit(best_theta);
  v.c = best_c;
  v.inf_upper_bound = best_cost;
  v.margin = snap(lead - best_cost, lead + best_cost, wp);
  v.holds = v.margin >= 0L;
  return v;
}

ObservationScan observation_scan(const Polynomial& h, const Complex& lambda, int d_max,
                                 const Real& tol, Precision prec) {
  if (h.is_zero()) throw ZeroPolynomialError();
  ObservationScan scan;
  for (int d = h.degree() + 1; d <= d_max; ++d) {
    Polynomial P = construct_theorem1(h, d, lambda);
    ObservationRow row;
    row.d = d;
    RootReport rep = all_roots(P, prec);
    row.solved = rep.converged;
    row.max_modulus_deviation = rep.max_modulus_deviation;
    row.unimodular = rep.converged && rep.max_modulus_deviation <= tol;
    if (row.solved && !row.unimodular && !scan.first_failing_d) scan.first_failing_d = d;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

nlohmann::json CriterionVerdict::to_json() const {
  nlohmann::json j;
  j["criterion"] = criterion_name(id);
  j["holds"] = holds;
  j["applicable"] = applicable;
  j["is_iff"] = is_iff;
  j["margin"] = margin.to_decimal();
  if (strict) j["strict"] = *strict;
  nlohmann::json w = nlohmann::json::object();
  if (mu) w["mu"] = {mu->real().to_decimal(), mu->imag().to_decimal()};
  if (c) w["c"] = {c->real().to_decimal(), c->imag().to_decimal()};
  if (alpha) w["alpha"] = alpha->to_decimal();
  if (inf_upper_bound) w["inf_upper_bound"] = inf_upper_bound->to_decimal();
  if (inf_lower_bound) w["inf_lower_bound"] = inf_lower_bound->to_decimal();
  if (!w.empty()) j["witness"] = std::move(w);
  if (!note.empty()) j["note"] = note;
  return j;
}

nlohmann::json ObservationScan::to_json() const {
  nlohmann::json j;
  j["schema"] = "unicircle/1";
  if (first_failing_d) {
    j["first_failing_d"] = *first_failing_d;
  } else {
    j["first_failing_d"] = nullptr;
  }
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"d", r.d},
                         {"solved", r.solved},
                         {"unimodular", r.unimodular},
                         {"max_modulus_deviation", r.max_modulus_deviation.to_decimal()}});
  }
  j["rows"] = std::move(rows_json);
  return j;
}

}  // namespace unicircle
