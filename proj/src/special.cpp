#include "unicircle/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace unicircle {
namespace special {

Real pi_value(Precision prec) {
  return Real::pi(prec + 16);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_table;

std::mutex euler_mutex;
std::vector<mpz_class> euler_table;

}  // namespace

mpq_class bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
  while (bernoulli_table.size() <= n) {
    unsigned m = bernoulli_table.size();
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
    mpq_class sum(0);
    for (unsigned k = 0; k < m; ++k) {
      sum += mpq_class(binomial(m + 1, k)) * bernoulli_table[k];
    }
    mpq_class b = -sum / mpq_class(m + 1);
    b.canonicalize();
    bernoulli_table.push_back(b);
  }
  return bernoulli_table[n];
}

mpz_class euler_number(unsigned n) {
  if (n % 2 == 1) return mpz_class(0);
  std::lock_guard<std::mutex> lock(euler_mutex);
  if (euler_table.empty()) euler_table.emplace_back(1);  // E_0
  // euler_table[i] holds E_{2i}.
  while (euler_table.size() <= n / 2) {
    unsigned m = 2 * euler_table.size();
    // sum_{i even <= m} C(m,i) E_{m-i} = 0  =>  E_m = -sum_{i=2,4,..,m} C(m,i) E_{m-i}
    mpz_class sum(0);
    for (unsigned i = 2; i <= m; i += 2) {
      sum += binomial(m, i) * euler_table[(m - i) / 2];
    }
    euler_table.push_back(-sum);
  }
  return euler_table[n / 2];
}

RealValue zeta_even(unsigned two_k, Precision prec) {
  if (two_k % 2 != 0) throw std::invalid_argument("zeta_even needs an even argument");
  const Precision wp = prec + 32;
  if (two_k == 0) {
    Real v(wp);
    mpfr_set_si_2exp(v.raw(), -1, -1, MPFR_RNDN);  // -1/2 exactly
    return RealValue{v, Real(0L, kMinPrecision)};
  }
  unsigned k = two_k / 2;
  // zeta(2k) = (-1)^{k+1} B_{2k} (2pi)^{2k} / (2 (2k)!)
  mpq_class r = bernoulli(two_k) / (mpq_class(2) * mpq_class(factorial(two_k)));
  if (k % 2 == 0) r = -r;
  Real two_pi = Real::pi(wp + 16);
  two_pi *= 2;
  Real v = Real::from_rational(r, wp) * pown(two_pi, two_k);
  Real bound = abs(v) * Real::pow2(-static_cast<long>(wp) + 6, kMinPrecision);
  return RealValue{std::move(v), std::move(bound)};
}

namespace {

// Chebyshev weights d_k for Borwein's alternating-series acceleration,
// d_k = n sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!), computed exactly.
std::vector<mpq_class> borwein_weights(int n) {
  std::vector<mpq_class> d(static_cast<size_t>(n) + 1);
  mpq_class term(1, n);  // t_0 = (n-1)!/(n! 0!) = 1/n
  mpq_class acc = term;
  d[0] = mpq_class(n) * acc;
  for (int i = 1; i <= n; ++i) {
    // t_i / t_{i-1} = 2 (n+i-1)(n-i+1) / (i (2i-1))
    term *= mpq_class(2L * (n + i - 1) * (n - i + 1), 1L * i * (2 * i - 1));
    acc += term;
    d[static_cast<size_t>(i)] = mpq_class(n) * acc;
  }
  return d;
}

}  // namespace

RealValue zeta(const Real& s, Precision prec) {
  if (s <= 1L) throw std::domain_error("zeta requires s > 1");
  const Precision wp = prec + 32;
  Real sw(wp);
  mpfr_set(sw.raw(), s.raw(), MPFR_RNDN);

  // denom = 1 - 2^{1-s}
  Real denom = Real(1, wp) - pow(Real(2, wp), Real(1, wp) - sw);

  // Term count: (3+sqrt 8)^{-n} below 2^{-(prec+16)} plus a cushion for the
  // 1/denom amplification when s is close to 1.
  double denom_d = denom.to_double();
  double extra_bits = denom_d < 1e-300 ? 1024.0 : std::max(0.0, -std::log2(denom_d));
  int n = static_cast<int>(std::ceil((static_cast<double>(prec) + 24 + extra_bits) / 2.543)) + 4;

  std::vector<mpq_class> d = borwein_weights(n);
  Real dn = Real::from_rational(d[static_cast<size_t>(n)], wp);

  Real sum(0L, wp);
  Real term(wp), kp(wp);
  for (int k = 0; k < n; ++k) {
    mpfr_set_si(kp.raw(), k + 1, MPFR_RNDN);
    mpfr_pow(kp.raw(), kp.raw(), sw.raw(), MPFR_RNDN);  // (k+1)^s
    Real num = Real::from_rational(d[static_cast<size_t>(n)] - d[static_cast<size_t>(k)], wp);
    mpfr_div(term.raw(), num.raw(), kp.raw(), MPFR_RNDN);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Real value = sum / (dn * denom);

  // |eta error| <= 3 (3+sqrt8)^{-n} for real s >= 1; use 16 as cushion and
  // divide by denom, then add the working-precision rounding of the sum.
  Real rho = Real(3, wp) + sqrt(Real(8, wp));
  Real trunc = Real(16, wp) / (pown(rho, n) * denom);
  Real round_err = (abs(value) + Real(1, wp)) * Real::pow2(-static_cast<long>(wp) + 8, 64) *
                   Real(n, wp);
  return RealValue{std::move(value), trunc + round_err};
}

RealValue zeta(unsigned s, Precision prec) { return zeta(Real(static_cast<long>(s), prec), prec); }

namespace {

RealValue scale_zeta(const RealValue& z, const Real& factor) {
  // factor in (0, 1]; error scales with it plus one rounding step.
  Real v = z.value * factor;
  Real bound = z.error_bound * factor + abs(v) * Real::pow2(-v.precision() + 4, 64);
  return RealValue{std::move(v), std::move(bound)};
}

}  // namespace

RealValue eta(const Real& s, Precision prec) {
  if (s <= 1L) throw std::domain_error("eta requires s > 1");
  const Precision wp = prec + 32;
  Real factor = Real(1, wp) - pow(Real(2, wp), Real(1, wp) - s);
  return scale_zeta(zeta(s, prec), factor);
}

RealValue eta(unsigned s, Precision prec) { return eta(Real(static_cast<long>(s), prec), prec); }

RealValue eta0(const Real& s, Precision prec) {
  if (s <= 1L) throw std::domain_error("eta0 requires s > 1");
  const Precision wp = prec + 32;
  Real factor = Real(1, wp) - pow(Real(2, wp), -s);
  return scale_zeta(zeta(s, prec), factor);
}

RealValue eta0(unsigned s, Precision prec) { return eta0(Real(static_cast<long>(s), prec), prec); }

RealValue eta_even(unsigned two_j, Precision prec) {
  const Precision wp = prec + 32;
  if (two_j == 0) {
    // (1 - 2) zeta(0) = 1/2 exactly
    Real v(wp);
    mpfr_set_si_2exp(v.raw(), 1, -1, MPFR_RNDN);
    return RealValue{v, Real(0L, kMinPrecision)};
  }
  Real factor = Real(1, wp) - Real::pow2(1 - static_cast<long>(two_j), wp);
  return scale_zeta(zeta_even(two_j, prec), factor);
}

RealValue eta0_even(unsigned two_j, Precision prec) {
  const Precision wp = prec + 32;
  if (two_j == 0) return RealValue{Real(0L, wp), Real(0L, kMinPrecision)};
  Real factor = Real(1, wp) - Real::pow2(-static_cast<long>(two_j), wp);
  return scale_zeta(zeta_even(two_j, prec), factor);
}

RealValue l_chi4(unsigned odd_s, Precision prec) {
  if (odd_s % 2 == 0) throw std::invalid_argument("l_chi4 needs an odd argument");
  const Precision wp = prec + 32;
  unsigned j = (odd_s - 1) / 2;
  // (-1)^j E_{2j} / (2 (2j)!) (pi/2)^{2j+1}
  mpq_class r = mpq_class(euler_number(2 * j)) / (mpq_class(2) * mpq_class(factorial(2 * j)));
  if (j % 2 == 1) r = -r;
  Real half_pi = Real::pi(wp + 16);
  half_pi /= 2;
  Real v = Real::from_rational(r, wp) * pown(half_pi, static_cast<long>(odd_s));
  Real bound = abs(v) * Real::pow2(-static_cast<long>(wp) + 6, kMinPrecision);
  return RealValue{std::move(v), std::move(bound)};
}

}  // namespace special
}  // namespace unicircle
