#ifndef UNICIRCLE_CRITERIA_HPP
#define UNICIRCLE_CRITERIA_HPP

#include <nlohmann/json_fwd.hpp>

#include "unicircle/poly.hpp"
#include "unicircle/rootfind.hpp"

namespace unicircle {

enum class CriterionId {
  cohn,
  lakatos,
  lakatos_losonczi_half,
  lakatos_losonczi_alpha,
  smyth_inf_mu,
  schinzel,
};

const char* criterion_name(CriterionId id);
CriterionId criterion_from_name(const std::string& name);

// Verdict of one sufficient condition (or Cohn's iff criterion), with the
// witness that realizes it. margin >= 0 whenever holds; margins within
// rounding distance of zero are snapped to zero so equality cases report
// exactly 0.
struct CriterionVerdict {
  CriterionId id;
  bool holds = false;
  bool applicable = true;
  bool is_iff = false;
  Real margin;
  std::optional<bool> strict;           // lakatos: strict inequality => simple zeros
  std::optional<Complex> mu;
  std::optional<Complex> c;
  std::optional<Real> alpha;
  std::optional<Real> inf_upper_bound;  // certified upper bound on the inf
  std::optional<Real> inf_lower_bound;  // Lipschitz lower bound over the grid
  std::string note;
  nlohmann::json to_json() const;
};

// Cohn: holds iff P' has all zeros in |z| <= 1 + tol. Exact criterion
// (is_iff). Throws ConvergenceError if the solver fails on P'.
CriterionVerdict cohn(const SelfInversiveForm& P, const Real& tol, Precision prec);

// Lakatos: real reciprocal P with |A_d| >= sum_j |A_j - A_d|. Not applicable
// to complex / non-reciprocal input.
CriterionVerdict lakatos(const SelfInversiveForm& P);

// Lakatos-Losonczi: |A_d| >= 1/2 sum_{j=1}^{d-1} |A_j|.
CriterionVerdict lakatos_losonczi_half(const SelfInversiveForm& P);

// Lakatos-Losonczi alpha condition: |(1+alpha) A_d| >= sum_{j=1}^{d-1}
// |A_j - (1-alpha) A_d| for 0 <= alpha <= 1; reciprocal P.
CriterionVerdict lakatos_losonczi_alpha(const SelfInversiveForm& P, const Real& alpha);
// Scans alpha on a uniform grid then refines by ternary search on the
// (concave) margin.
CriterionVerdict best_alpha(const SelfInversiveForm& P, int grid_size);

// 1/2 sum_{j=0}^{d-1} |A_j - mu A_{j+1}| for |mu| = 1.
Real smyth_value(const Polynomial& P, const Complex& mu);
// Witness search for |A_d| >= 1/2 inf_{|mu|=1} sum |A_j - mu A_{j+1}|:
// samples mu = e^{i theta} on grid_size points, golden-section refines the
// best. Reports a certified upper bound on the inf (any witness suffices)
// and a Lipschitz lower bound over the grid.
CriterionVerdict smyth_inf_mu(const SelfInversiveForm& P, int grid_size = 4096);

// Schinzel: |A_d| >= inf_{c, |mu|=1} sum_j |c A_j - mu^{d-j} A_d|. For each
// mu on the grid the inner minimization over c is a weighted geometric
// median solved by Weiszfeld iteration; (c, mu) = (1, 1) is always tried.
CriterionVerdict schinzel(const SelfInversiveForm& P, int mu_grid = 256, int c_iters = 50);

struct ObservationRow {
  int d = 0;
  bool solved = false;
  bool unimodular = false;
  Real max_modulus_deviation;
};

struct ObservationScan {
  std::optional<int> first_failing_d;
  std::vector<ObservationRow> rows;
  nlohmann::json to_json() const;
};

// Builds construct_theorem1(h, d, lambda) for d = deg h + 1 .. d_max and
// tests unimodularity; returns the smallest failing d, if any. Per-d solver
// failures are recorded, never fatal.
ObservationScan observation_scan(const Polynomial& h, const Complex& lambda, int d_max,
                                 const Real& tol, Precision prec);

}  // namespace unicircle

#endif
