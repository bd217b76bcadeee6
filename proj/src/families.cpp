#include "unicircle/families.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "unicircle/rootfind.hpp"
#include "unicircle/special.hpp"

namespace unicircle {

using special::eta0;
using special::eta0_even;
using special::eta_even;
using special::l_chi4;
using special::zeta;
using special::zeta_even;

const char* family_name(FamilyId f) {
  switch (f) {
    case FamilyId::P: return "P";
    case FamilyId::Q: return "Q";
    case FamilyId::W: return "W";
    case FamilyId::Y: return "Y";
    case FamilyId::S: return "S";
  }
  return "?";
}

FamilyId family_from_name(const std::string& name) {
  if (name == "P" || name == "p") return FamilyId::P;
  if (name == "Q" || name == "q") return FamilyId::Q;
  if (name == "W" || name == "w") return FamilyId::W;
  if (name == "Y" || name == "y") return FamilyId::Y;
  if (name == "S" || name == "s") return FamilyId::S;
  throw std::invalid_argument("unknown family: " + name + " (expected P, Q, W, Y or S)");
}

namespace {

Real sign_real(int k, Precision wp) { return Real(k % 2 == 0 ? 1 : -1, wp); }

std::vector<Complex> zero_coeffs(size_t n, Precision wp) {
  return std::vector<Complex>(n, Complex(wp));
}

void add_at(std::vector<Complex>& c, size_t idx, const Real& v) {
  c[idx] = Complex(c[idx].real() + v, c[idx].imag());
}

}  // namespace

FamilySequences sequences(FamilyId family, int k, Precision prec) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const Precision wp = prec + 32;
  FamilySequences out;
  out.family = family;
  out.k = k;
  out.q.reserve(static_cast<size_t>(k) + 1);
  out.delta.reserve(static_cast<size_t>(k) + 1);

  std::vector<Real> base;
  base.reserve(static_cast<size_t>(k) + 1);
  Real denom(wp);
  switch (family) {
    case FamilyId::P:
      for (int j = 0; j <= k; ++j) base.push_back(zeta_even(2 * j, wp).value);
      denom = base.back();
      break;
    case FamilyId::Q:
      for (int j = 0; j <= k; ++j) base.push_back(eta0_even(2 * j, wp).value);
      denom = eta0(static_cast<unsigned>(2 * k - 1), wp).value;
      break;
    case FamilyId::W:
      for (int j = 0; j <= k; ++j) base.push_back(eta_even(2 * j, wp).value);
      denom = base.back();
      break;
    default:
      throw std::invalid_argument("sequences are defined for families P, Q, W");
  }
  for (int j = 0; j <= k; ++j) {
    Real q = base[static_cast<size_t>(j)] * base[static_cast<size_t>(k - j)] / denom;
    Real d = family == FamilyId::W ? base[static_cast<size_t>(j)] - q
                                   : q - base[static_cast<size_t>(j)];
    out.q.push_back(std::move(q));
    out.delta.push_back(std::move(d));
  }
  return out;
}

Polynomial build_P(int k, Precision prec) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  auto c = zero_coeffs(static_cast<size_t>(2 * k) + 1, wp);
  const Real sk = sign_real(k, wp);
  const Real two_over_pi = Real(2, wp) / pi;
  for (int j = 0; j <= k; ++j) {
    Real v = sk * two_over_pi * zeta_even(2 * j, wp).value * zeta_even(2 * (k - j), wp).value;
    if (j % 2 == 1) v.negate();
    add_at(c, static_cast<size_t>(2 * j), v);
  }
  if (k >= 2) {
    // For k = 1 the tail zeta(2k-1)(z^{2k-1} + (-1)^k z) cancels identically.
    Real z_odd = zeta(static_cast<unsigned>(2 * k - 1), wp).value;
    add_at(c, static_cast<size_t>(2 * k - 1), z_odd);
    add_at(c, 1, sk * z_odd);
  }
  return Polynomial(std::move(c), prec);
}

Polynomial build_P_bernoulli(int k, Precision prec) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const Precision wp = prec + 32;
  const Real two_pi = special::pi_value(wp) * Real(2, wp);
  const Real prefactor =
      pown(two_pi, 2 * k - 1) / Real::from_integer(special::factorial(2 * k), wp);
  auto c = zero_coeffs(static_cast<size_t>(2 * k) + 1, wp);
  for (int j = 0; j <= k; ++j) {
    mpq_class r = special::bernoulli(2 * j) * special::bernoulli(2 * (k - j)) *
                  mpq_class(special::binomial(2 * k, 2 * j));
    if (j % 2 == 1) r = -r;
    add_at(c, static_cast<size_t>(2 * j), prefactor * Real::from_rational(r, wp));
  }
  if (k >= 2) {
    Real z_odd = zeta(static_cast<unsigned>(2 * k - 1), wp).value;
    add_at(c, static_cast<size_t>(2 * k - 1), z_odd);
    add_at(c, 1, sign_real(k, wp) * z_odd);
  }
  return Polynomial(std::move(c), prec);
}

Polynomial build_M(int k, Precision prec) {
  const Precision wp = prec + 32;
  Polynomial pk = build_P(k, wp);
  Polynomial z2p1 = Polynomial::from_int_coeffs({1, 0, 1}, wp);
  Real scale = -(special::pi_value(wp) / zeta_even(2 * k, wp).value);
  Polynomial m = (z2p1 * pk).scaled(scale);
  return Polynomial(m.coeffs(), prec);
}

Polynomial build_Q(int k, Precision prec) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  auto c = zero_coeffs(static_cast<size_t>(2 * k), wp);
  const Real sk = sign_real(k, wp);
  const Real pref = Real::pow2(2 * k + 1, wp) / pi;
  for (int j = 1; j <= k - 1; ++j) {
    Real v = sk * pref * eta0_even(2 * j, wp).value * eta0_even(2 * (k - j), wp).value;
    if (j % 2 == 1) v.negate();
    add_at(c, static_cast<size_t>(2 * j), v);
  }
  Real odd = Real::pow2(2 * k - 1, wp) * eta0(static_cast<unsigned>(2 * k - 1), wp).value;
  add_at(c, static_cast<size_t>(2 * k - 1), odd);
  add_at(c, 1, sk * odd);
  return Polynomial(std::move(c), prec);
}

Polynomial build_N(int k, Precision prec) {
  const Precision wp = prec + 32;
  Polynomial qk = build_Q(k, wp);
  Polynomial z2p1 = Polynomial::from_int_coeffs({1, 0, 1}, wp);
  Real scale = Real(1, wp) /
               (Real::pow2(2 * k - 1, wp) * eta0(static_cast<unsigned>(2 * k - 1), wp).value);
  Polynomial n = (z2p1 * qk).scaled(scale);
  return Polynomial(n.coeffs(), prec);
}

Polynomial build_W(int k, Precision prec) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  auto c = zero_coeffs(static_cast<size_t>(2 * k) + 1, wp);
  const Real sk = sign_real(k, wp);
  const Real pref = Real::pow2(2 * k + 1, wp) / pi;
  for (int j = 0; j <= k; ++j) {
    Real v = sk * pref * eta_even(2 * j, wp).value * eta_even(2 * (k - j), wp).value;
    if (j % 2 == 1) v.negate();
    add_at(c, static_cast<size_t>(2 * j), v);
  }
  return Polynomial(std::move(c), prec);
}

Polynomial build_V(int k, Precision prec) {
  const Precision wp = prec + 32;
  Polynomial wk = build_W(k, wp);
  Polynomial z2p1 = Polynomial::from_int_coeffs({1, 0, 1}, wp);
  Real scale = special::pi_value(wp) / (Real::pow2(2 * k, wp) * eta_even(2 * k, wp).value);
  Polynomial v = (z2p1 * wk).scaled(scale);
  return Polynomial(v.coeffs(), prec);
}

Polynomial build_Y(int k, Precision prec) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const Precision wp = prec + 32;
  auto c = zero_coeffs(static_cast<size_t>(k), wp);
  const Real four_sk = sign_real(k, wp) * Real(4, wp);
  for (int j = 1; j <= k - 1; ++j) {
    add_at(c, static_cast<size_t>(j),
           four_sk * eta0_even(2 * j, wp).value * eta0_even(2 * (k - j), wp).value);
  }
  return Polynomial(std::move(c), prec);
}

Polynomial build_S(int k, Precision prec) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  auto c = zero_coeffs(static_cast<size_t>(k) + 1, wp);
  // Solve the display for S_k: prefactor (-1)^k 4 (2k)! (2/pi)^{2k+2}.
  Real pref = sign_real(k, wp) * Real(4, wp) *
              Real::from_integer(special::factorial(2 * k), wp) *
              pown(Real(2, wp) / pi, 2 * k + 2);
  for (int j = 0; j <= k; ++j) {
    add_at(c, static_cast<size_t>(j),
           pref * l_chi4(static_cast<unsigned>(2 * j + 1), wp).value *
               l_chi4(static_cast<unsigned>(2 * (k - j) + 1), wp).value);
  }
  return Polynomial(std::move(c), prec);
}

Polynomial build_family(FamilyId family, int k, Precision prec) {
  switch (family) {
    case FamilyId::P: return build_P(k, prec);
    case FamilyId::Q: return build_Q(k, prec);
    case FamilyId::W: return build_W(k, prec);
    case FamilyId::Y: return build_Y(k, prec);
    case FamilyId::S: return build_S(k, prec);
  }
  throw std::invalid_argument("bad family");
}

Polynomial monic_base_of(FamilyId family, int k, Precision prec) {
  switch (family) {
    case FamilyId::P: return build_M(k, prec);
    case FamilyId::Q: return build_N(k, prec);
    case FamilyId::W: return build_V(k, prec);
    default:
      throw std::invalid_argument("monic base is defined for families P, Q, W");
  }
}

Polynomial h_r_of(FamilyId family, int r, Precision prec) {
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  switch (family) {
    case FamilyId::P: {
      if (r < 2) throw std::invalid_argument("family P needs r >= 2 (z^{2r-3} term)");
      auto c = zero_coeffs(static_cast<size_t>(2 * r) + 1, wp);
      add_at(c, static_cast<size_t>(2 * r), Real(1, wp));
      add_at(c, static_cast<size_t>(2 * r - 1), -pi);
      add_at(c, static_cast<size_t>(2 * r - 3), -pi);
      for (int j = 1; j <= r; ++j) {
        Real v = Real(2, wp) *
                 (zeta_even(2 * (j - 1), wp).value - zeta_even(2 * j, wp).value);
        if (j % 2 == 1) v.negate();
        add_at(c, static_cast<size_t>(2 * (r - j)), v);
      }
      return Polynomial(std::move(c), prec);
    }
    case FamilyId::Q: {
      if (r < 1) throw std::invalid_argument("r must be >= 1");
      auto c = zero_coeffs(static_cast<size_t>(2 * r) + 1, wp);
      add_at(c, static_cast<size_t>(2 * r), Real(1, wp));
      add_at(c, static_cast<size_t>(2 * r - 2), Real(1, wp));
      const Real four_over_pi = Real(4, wp) / pi;
      for (int j = 1; j <= r; ++j) {
        Real v = four_over_pi *
                 (eta0_even(2 * (j - 1), wp).value - eta0_even(2 * j, wp).value);
        if (j % 2 == 0) v.negate();
        add_at(c, static_cast<size_t>(2 * r - 2 * j + 1), v);
      }
      return Polynomial(std::move(c), prec);
    }
    case FamilyId::W: {
      if (r < 1) throw std::invalid_argument("r must be >= 1");
      auto c = zero_coeffs(static_cast<size_t>(2 * r) + 1, wp);
      add_at(c, static_cast<size_t>(2 * r), Real(1, wp));
      for (int j = 1; j <= r; ++j) {
        Real v = Real(2, wp) *
                 (eta_even(2 * (j - 1), wp).value - eta_even(2 * j, wp).value);
        if (j % 2 == 0) v.negate();
        add_at(c, static_cast<size_t>(2 * (r - j)), v);
      }
      return Polynomial(std::move(c), prec);
    }
    default:
      throw std::invalid_argument("h_r is defined for families P, Q, W");
  }
}

Polynomial e_r_of(FamilyId family, int k, int r, Precision prec) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (k < 2 * r) throw std::invalid_argument("e_r needs k >= 2r");
  const Precision wp = prec + 32;
  const Real pi = special::pi_value(wp);
  FamilySequences seq = sequences(family, k, wp);
  const auto& q = seq.q;
  const auto& delta = seq.delta;

  switch (family) {
    case FamilyId::P: {
      if (r < 2) throw std::invalid_argument("family P needs r >= 2");
      if (k < 3) throw std::invalid_argument("family P needs k >= 3 (z^{k-3} term)");
      auto c = zero_coeffs(static_cast<size_t>(k), wp);
      Real tau = zeta(static_cast<unsigned>(2 * k - 1), wp).value /
                     zeta_even(2 * k, wp).value -
                 Real(1, wp);
      add_at(c, static_cast<size_t>(k - 1), -(pi * tau));
      add_at(c, static_cast<size_t>(k - 3), -(pi * tau));
      for (int j = 1; j <= r; ++j) {
        Real v = Real(2, wp) * (delta[static_cast<size_t>(j - 1)] - delta[static_cast<size_t>(j)]);
        if (j % 2 == 1) v.negate();
        add_at(c, static_cast<size_t>(k - 2 * j), v);
      }
      for (int j = r + 1; 2 * j <= k; ++j) {
        Real v = Real(2, wp) * (q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)]);
        if (j % 2 == 1) v.negate();
        add_at(c, static_cast<size_t>(k - 2 * j), v);
      }
      return Polynomial(std::move(c), prec);
    }
    case FamilyId::Q:
    case FamilyId::W: {
      auto c = zero_coeffs(static_cast<size_t>(k), wp);
      const bool is_q = family == FamilyId::Q;
      const Real four_over_pi = Real(4, wp) / pi;
      for (int j = 1; j <= r; ++j) {
        Real v = delta[static_cast<size_t>(j - 1)] - delta[static_cast<size_t>(j)];
        v = is_q ? four_over_pi * v : -(Real(2, wp) * v);
        if (j % 2 == 0) v.negate();  // (-1)^{j-1}
        add_at(c, static_cast<size_t>(k + 1 - 2 * j), v);
      }
      for (int j = r + 1; 2 * j <= k; ++j) {
        Real v = q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)];
        v = is_q ? four_over_pi * v : Real(2, wp) * v;
        if (j % 2 == 0) v.negate();
        add_at(c, static_cast<size_t>(k + 1 - 2 * j), v);
      }
      return Polynomial(std::move(c), prec);
    }
    default:
      throw std::invalid_argument("e_r is defined for families P, Q, W");
  }
}

FamilyDecomposition decompose(FamilyId family, int k, int r, Precision prec) {
  FamilyDecomposition out;
  out.family = family;
  out.k = k;
  out.r = r;
  out.h_r = h_r_of(family, r, prec);
  out.e_r = e_r_of(family, k, r, prec);
  out.lambda = Complex(k % 2 == 0 ? 1 : -1, 0, prec);
  out.monic_base = monic_base_of(family, k, prec);

  Polynomial hs = out.h_r.star();
  Polynomial es = out.e_r.star();
  Polynomial assembled;
  switch (family) {
    case FamilyId::P:
      assembled = out.h_r.shifted(2 * k + 2 - 2 * r) + hs.scaled(out.lambda) +
                  out.e_r.shifted(k + 2) + es.shifted(1).scaled(out.lambda);
      break;
    case FamilyId::Q:
      assembled = out.h_r.shifted(2 * k + 1 - 2 * r) + hs.shifted(1).scaled(out.lambda) +
                  out.e_r.shifted(k + 1) + es.shifted(2).scaled(out.lambda);
      break;
    case FamilyId::W:
      assembled = out.h_r.shifted(2 * k + 2 - 2 * r) + hs.scaled(out.lambda) +
                  out.e_r.shifted(k + 1) + es.shifted(2).scaled(out.lambda);
      break;
    default:
      throw std::invalid_argument("decompose is defined for families P, Q, W");
  }
  out.reconstruction_error = max_coeff_distance(assembled, out.monic_base);
  if (out.reconstruction_error > default_structural_tol(prec)) {
    throw std::runtime_error("decomposition reconstruction mismatch beyond tolerance: " +
                             out.reconstruction_error.to_string(8));
  }
  return out;
}

FamilyCertParams default_cert_params(FamilyId family) {
  switch (family) {
    case FamilyId::P: return FamilyCertParams{4, "0.020", "0.019", 11};
    case FamilyId::Q: return FamilyCertParams{2, "0.15", "0.14", 8};
    case FamilyId::W: return FamilyCertParams{3, "0.52", "0.5", 6};
    default:
      throw std::invalid_argument("no certificate parameters for this family");
  }
}

Lemma2Certificate family_certificate(FamilyId family, int k, int r, const Real& c, long samples,
                                     Precision prec, long verify_cap_degree) {
  Polynomial h = h_r_of(family, r, prec);
  Polynomial e = e_r_of(family, k, r, prec);
  Complex lambda(k % 2 == 0 ? 1 : -1, 0, prec);
  long K = 0;
  // Shift e so the assembled Lemma-2 polynomial is exactly the monic base
  // (M_k, V_k) or its deflated quotient N_k / z.
  switch (family) {
    case FamilyId::P:
      e = e.shifted(1);
      K = k + 1;
      break;
    case FamilyId::Q:
      K = k;
      break;
    case FamilyId::W:
      K = k + 1;
      break;
    default:
      throw std::invalid_argument("certificates are defined for families P, Q, W");
  }
  std::optional<Real> e_target;
  FamilyCertParams params = default_cert_params(family);
  if (r == params.r) e_target = Real::from_decimal(params.e_bound, prec);
  return lemma2_certificate(h, e, lambda, K, c, samples, std::nullopt, verify_cap_degree,
                            e_target);
}

RamanujanResult ramanujan_residual(int k, const Complex& z, int terms, Precision prec) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  const Precision wp = prec + 32;
  Complex zw(Real(z.real()), Real(z.imag()));
  if (!(zw.real() > 0L)) {
    throw std::domain_error("identity hypothesis violated: need Re(z) > 0");
  }
  const Real two_pi = special::pi_value(wp) * Real(2, wp);
  const Complex one(1, 0, wp);

  auto series = [&](const Complex& w) {
    // sum_{n<=N} 1 / (n^{2k-1} (e^{2 pi n w} - 1))
    Complex sum(wp);
    for (int n = 1; n <= terms; ++n) {
      Complex en = exp(Complex(two_pi * Real(n, wp) * w.real(), two_pi * Real(n, wp) * w.imag()));
      Complex den = (en - one) * pown(Real(n, wp), 2 * k - 1);
      sum += one / den;
    }
    return sum;
  };

  Polynomial pk = build_P(k, wp);
  Complex zk = zw.pow_int(k);
  Complex lhs = pk.evaluate(zw) / (zk * Complex(2, 0, wp));

  Complex s1 = series(zw);
  Complex s2 = series(one / zw);
  Complex zk1 = zw.pow_int(k - 1);
  Complex rhs = (-zw).pow_int(-(k - 1)) * s1 - zk1 * s2;

  // Tail: |e^{2 pi n w} - 1| >= e^{2 pi n Re w} - 1 >= e^{2 pi n Re w}/2 once
  // the exponent exceeds 1, so each tail is below a geometric series.
  auto tail = [&](const Real& re_w) {
    Real x = two_pi * re_w;
    Real ratio = exp(-x);
    Real first = exp(-(x * Real(terms + 1, wp)));
    return Real(2, wp) * first / (Real(1, wp) - ratio);
  };
  Real re_inv = (one / zw).real();
  Real tail_bound = zk1.abs() * tail(re_inv) + (-zw).pow_int(-(k - 1)).abs() * tail(zw.real());

  return RamanujanResult{(lhs - rhs).abs(), tail_bound};
}

Polynomial counterexample_poly(int k, Precision prec) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  Polynomial h = Polynomial::from_int_coeffs({-1, -1, 0, 1}, prec);
  return construct_theorem1(h, k + 3, Complex(-1, 0, prec));
}

namespace {

void add_row(ScanReport& rep, std::string part, int k, int j, Real lhs, Real rhs) {
  ScanRow row;
  row.part = std::move(part);
  row.k = k;
  row.j = j;
  row.margin = rhs - lhs;
  row.ok = lhs < rhs;
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  if (!row.ok) ++rep.violations;
  rep.rows.push_back(std::move(row));
}

Real frac(long num, long den, Precision wp) {
  mpq_class q(num, den);
  q.canonicalize();
  return Real::from_rational(q, wp);
}

}  // namespace

ScanReport lemma3_scan(int k_min, int k_max, Precision prec) {
  if (k_min < 2 || k_max < k_min) throw std::invalid_argument("need 2 <= k_min <= k_max");
  const Precision wp = prec + 32;
  ScanReport rep;
  const Real one(1, wp);
  const Real sym_tol = default_structural_tol(prec);

  // (i) 1 < zeta(n) < 1 + (n+1)/(n-1) 2^{-n}
  for (int n = 2; n <= 2 * k_max; ++n) {
    Real zn = n % 2 == 0 ? zeta_even(static_cast<unsigned>(n), wp).value
                         : zeta(static_cast<unsigned>(n), wp).value;
    add_row(rep, "3i.lower", n, 0, one, zn);
    add_row(rep, "3i.upper", n, 0, zn,
            one + frac(n + 1, n - 1, wp) * Real::pow2(-n, wp));
  }

  for (int k = k_min; k <= k_max; ++k) {
    std::vector<Real> zv;
    zv.reserve(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) zv.push_back(zeta_even(2 * j, wp).value);
    FamilySequences seq = sequences(FamilyId::P, k, wp);
    const auto& q = seq.q;
    const auto& delta = seq.delta;

    // (ii) 0 < zeta(2k-2j)/zeta(2k) - 1 < 3 * 4^{j-k}
    for (int j = 1; j <= k - 1; ++j) {
      Real ratio = zv[static_cast<size_t>(k - j)] / zv[static_cast<size_t>(k)] - one;
      add_row(rep, "3ii.lower", k, j, Real(0L, wp), ratio);
      add_row(rep, "3ii.upper", k, j, ratio, Real(3, wp) * Real::pow2(2 * (j - k), wp));
    }

    // (iii) 0 < zeta(2k-1)/zeta(2k) - 1 < 11/5 * 4^{-k}, k >= 11
    if (k >= 11) {
      Real ratio =
          zeta(static_cast<unsigned>(2 * k - 1), wp).value / zv[static_cast<size_t>(k)] - one;
      add_row(rep, "3iii.lower", k, 0, Real(0L, wp), ratio);
      add_row(rep, "3iii.upper", k, 0, ratio, frac(11, 5, wp) * Real::pow2(-2 * k, wp));
    }

    // (iv) |delta_{j-1} - delta_j| bounds, k >= 4
    if (k >= 4) {
      for (int j = 1; j <= k - 1; ++j) {
        Real lhs = abs(delta[static_cast<size_t>(j - 1)] - delta[static_cast<size_t>(j)]);
        Real rhs = j == 1 ? Real(21, wp) * Real::pow2(-2 * k, wp)
                          : Real(3, wp) * Real::pow2(-2 * k, wp) *
                                (Real::pow2(2 * j, wp) + frac(2 * j - 1, 2 * j - 3, wp));
        add_row(rep, "3iv", k, j, std::move(lhs), std::move(rhs));
      }
    }

    // (v) q symmetry and |q_{j-1} - q_j| bound for 2 <= j <= k/2
    for (int j = 2; 2 * j <= k; ++j) {
      add_row(rep, "3v.sym", k, j,
              abs(q[static_cast<size_t>(j)] - q[static_cast<size_t>(k - j)]), sym_tol);
      Real lhs = abs(q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)]);
      Real rhs = Real(3, wp) * Real::pow2(-2 * k, wp) *
                     (Real::pow2(2 * j, wp) + frac(2 * j - 1, 2 * j - 3, wp)) +
                 frac(2 * j - 1, 2 * j - 3, wp) * Real::pow2(2 - 2 * j, wp);
      add_row(rep, "3v", k, j, std::move(lhs), std::move(rhs));
    }

    // (vi) sum_{j=1}^r |delta_{j-1} - delta_j| < 5 * 4^{r-k}, k >= 4, 4 <= r <= k
    if (k >= 4) {
      Real run(0L, wp);
      for (int j = 1; j <= k; ++j) {
        run += abs(delta[static_cast<size_t>(j - 1)] - delta[static_cast<size_t>(j)]);
        if (j >= 4) {
          add_row(rep, "3vi", k, j, run, Real(5, wp) * Real::pow2(2 * (j - k), wp));
        }
      }
    }

    // (vii) sum_{j=r+1}^{floor(k/2)} |q_{j-1} - q_j| < 5 * 2^{-k} + 12/7 * 4^{-r},
    // k >= 10, r >= 4
    if (k >= 10) {
      int half = k / 2;
      for (int r = 4; r <= half; ++r) {
        Real run(0L, wp);
        for (int j = r + 1; j <= half; ++j) {
          run += abs(q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)]);
        }
        add_row(rep, "3vii", k, r, run,
                Real(5, wp) * Real::pow2(-k, wp) + frac(12, 7, wp) * Real::pow2(-2 * r, wp));
      }
    }
  }
  return rep;
}

ScanReport lemma5_scan(int k_min, int k_max, Precision prec) {
  if (k_min < 2 || k_max < k_min) throw std::invalid_argument("need 2 <= k_min <= k_max");
  const Precision wp = prec + 32;
  ScanReport rep;
  const Real one(1, wp);
  const Real sym_tol = default_structural_tol(prec);
  rep.notes.push_back(
      "5iv for eta0 is scanned from j = 2: the printed j = 1 bound is false "
      "(|q_0 - q_1| = q_1 > eta0(2) > 1 + 2^{2-2k} for k >= 4); the paper only "
      "uses j >= r+1 >= 2.");

  // (i) windows for eta0 and eta
  for (int n = 2; n <= 2 * k_max; ++n) {
    Real e0 = n % 2 == 0 ? eta0_even(static_cast<unsigned>(n), wp).value
                         : eta0(static_cast<unsigned>(n), wp).value;
    Real e1 = n % 2 == 0 ? eta_even(static_cast<unsigned>(n), wp).value
                         : special::eta(static_cast<unsigned>(n), wp).value;
    add_row(rep, "5i.eta0.lower", n, 0, one, e0);
    add_row(rep, "5i.eta0.upper", n, 0, e0, one + Real::pow2(-n, wp));
    add_row(rep, "5i.eta.lower", n, 0, one - Real::pow2(1 - n, wp), e1);
    add_row(rep, "5i.eta.upper", n, 0, e1, one);
  }

  for (int k = k_min; k <= k_max; ++k) {
    for (FamilyId fam : {FamilyId::Q, FamilyId::W}) {
      const bool is_q = fam == FamilyId::Q;
      const char* tag = is_q ? "eta0" : "eta";
      FamilySequences seq = sequences(fam, k, wp);
      const auto& q = seq.q;
      const auto& delta = seq.delta;
      Real denom = is_q ? eta0(static_cast<unsigned>(2 * k - 1), wp).value
                        : eta_even(2 * k, wp).value;

      // (ii) ratio windows
      for (int j = 1; j <= k - 1; ++j) {
        Real num = is_q ? eta0_even(2 * (k - j), wp).value : eta_even(2 * (k - j), wp).value;
        if (is_q) {
          Real ratio = num / denom - one;
          add_row(rep, std::string("5ii.") + tag + ".lower", k, j, Real(0L, wp), ratio);
          add_row(rep, std::string("5ii.") + tag + ".upper", k, j, ratio,
                  Real::pow2(-2 * k + 2 * j, wp));
        } else {
          Real ratio = one - num / denom;
          add_row(rep, std::string("5ii.") + tag + ".lower", k, j, Real(0L, wp), ratio);
          add_row(rep, std::string("5ii.") + tag + ".upper", k, j, ratio,
                  Real::pow2(1 - 2 * k + 2 * j, wp));
        }
      }

      // (iii) 0 < delta_j < 2^{1-2k+2j}
      for (int j = 1; j <= k - 1; ++j) {
        add_row(rep, std::string("5iii.") + tag + ".lower", k, j, Real(0L, wp),
                delta[static_cast<size_t>(j)]);
        add_row(rep, std::string("5iii.") + tag + ".upper", k, j, delta[static_cast<size_t>(j)],
                Real::pow2(1 - 2 * k + 2 * j, wp));
      }

      // (iv) q symmetry and difference bounds
      for (int j = 1; j <= k - 1; ++j) {
        add_row(rep, std::string("5iv.") + tag + ".sym", k, j,
                abs(q[static_cast<size_t>(j)] - q[static_cast<size_t>(k - j)]), sym_tol);
        if (is_q && j == 1) continue;  // printed j = 1 bound is false, see note
        Real lhs = abs(q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)]);
        Real rhs = is_q ? Real::pow2(2 - 2 * j, wp) + Real::pow2(2 - 2 * k + 2 * j, wp)
                        : Real::pow2(4 - 2 * j, wp) + Real::pow2(2 - 2 * k + 2 * j, wp);
        add_row(rep, std::string("5iv.") + tag, k, j, std::move(lhs), std::move(rhs));
      }

      // (v) delta difference sums, r >= 1
      Real run(0L, wp);
      for (int r = 1; r <= k; ++r) {
        run += abs(delta[static_cast<size_t>(r - 1)] - delta[static_cast<size_t>(r)]);
        add_row(rep, std::string("5v.") + tag, k, r, run,
                frac(2, 3, wp) * Real::pow2(2 * (r + 1 - k), wp));
      }

      // (vi) q difference tail sums
      int half = k / 2;
      for (int r = 1; r <= half; ++r) {
        Real tail(0L, wp);
        for (int j = r + 1; j <= half; ++j) {
          tail += abs(q[static_cast<size_t>(j - 1)] - q[static_cast<size_t>(j)]);
        }
        Real rhs = is_q ? frac(4, 3, wp) * (Real::pow2(-2 * r, wp) + Real::pow2(2 - k, wp))
                        : frac(16, 3, wp) * (Real::pow2(-2 * r, wp) + Real::pow2(-k, wp));
        add_row(rep, std::string("5vi.") + tag, k, r, tail, std::move(rhs));
      }
    }
  }
  return rep;
}

ScanReport lemma6_scan(int k_min, int k_max, long samples, Precision prec) {
  if (k_max < k_min) throw std::invalid_argument("need k_min <= k_max");
  ScanReport rep;
  const Precision wp = prec + 32;
  Real bound = Real::from_decimal("0.019", wp);
  int start = std::max(k_min, 11);
  if (start > k_min) {
    rep.notes.push_back("Lemma 6 applies for k >= 11; smaller k skipped.");
  }
  for (int k = start; k <= k_max; ++k) {
    Polynomial e4 = e_r_of(FamilyId::P, k, 4, prec);
    CircleBound b = certified_max_adaptive(e4, bound, samples);
    add_row(rep, "L6", k, 4, b.certified_bound, bound);
  }
  return rep;
}

FamilyVerifyRow verify_family_k(FamilyId family, int k, Precision prec, const Real& root_tol,
                                long samples, long verify_cap_degree) {
  FamilyVerifyRow row;
  row.family = family;
  row.k = k;
  row.max_modulus_deviation = Real(0L, prec);
  try {
    Polynomial p = build_family(family, k, prec);
    row.built = true;

    Polynomial deflated = p.deflate_origin(&row.origin_multiplicity);
    row.direct_checked = true;
    if (deflated.degree() < 1) {
      row.direct_ok = true;
      row.note = "no nontrivial roots";
    } else {
      RootReport rep = all_roots(deflated, prec);
      row.max_modulus_deviation = rep.max_modulus_deviation;
      if (!rep.converged) {
        row.direct_ok = false;
        row.note = "root solve did not converge";
      } else {
        row.direct_ok = rep.max_modulus_deviation <= root_tol;
      }
    }

    if (family == FamilyId::P || family == FamilyId::Q || family == FamilyId::W) {
      FamilyCertParams params = default_cert_params(family);
      if (k >= params.min_k) {
        row.cert_checked = true;
        Lemma2Certificate cert =
            family_certificate(family, k, params.r, Real::from_decimal(params.c, prec), samples,
                               prec, verify_cap_degree);
        row.cert_ok = cert.valid;
        if (!cert.valid) row.note = cert.diagnostic;
      }
    }
    row.pass = row.direct_ok && (!row.cert_checked || row.cert_ok);
  } catch (const std::exception& ex) {
    row.pass = false;
    row.note = ex.what();
  }
  return row;
}

nlohmann::json FamilyDecomposition::to_json() const {
  nlohmann::json j;
  j["schema"] = "unicircle/1";
  j["family"] = family_name(family);
  j["k"] = k;
  j["r"] = r;
  j["lambda"] = {lambda.real().to_decimal(), lambda.imag().to_decimal()};
  j["h_r"] = h_r.to_json();
  j["e_r"] = e_r.to_json();
  j["monic_base"] = monic_base.to_json();
  j["reconstruction_error"] = reconstruction_error.to_decimal();
  return j;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "unicircle/1";
  j["violations"] = violations;
  if (!notes.empty()) j["notes"] = notes;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"part", r.part},
                         {"k", r.k},
                         {"j", r.j},
                         {"lhs", r.lhs.to_decimal()},
                         {"rhs", r.rhs.to_decimal()},
                         {"margin", r.margin.to_decimal()},
                         {"ok", r.ok}});
  }
  j["rows"] = std::move(rows_json);
  return j;
}

std::string ScanReport::to_csv() const {
  std::ostringstream out;
  out << "part,k,j,lhs,rhs,margin\n";
  for (const auto& r : rows) {
    out << r.part << ',' << r.k << ',' << r.j << ',' << r.lhs.to_string(24) << ','
        << r.rhs.to_string(24) << ',' << r.margin.to_string(24) << '\n';
  }
  return out.str();
}

nlohmann::json FamilyVerifyRow::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  j["k"] = k;
  j["built"] = built;
  j["direct_checked"] = direct_checked;
  j["direct_ok"] = direct_ok;
  j["max_modulus_deviation"] = max_modulus_deviation.to_decimal();
  j["origin_multiplicity"] = origin_multiplicity;
  j["cert_checked"] = cert_checked;
  j["cert_ok"] = cert_ok;
  j["pass"] = pass;
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace unicircle
