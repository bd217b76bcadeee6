// Independent oracles used to pin expected values. These deliberately use
// different algorithms from the library paths they check.

#ifndef UNICIRCLE_TESTS_ORACLES_HPP
#define UNICIRCLE_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "unicircle/real.hpp"

namespace oracles {

// Bernoulli numbers by the Worpitzky double sum
//   B_n = sum_{k=0}^n 1/(k+1) sum_{v=0}^k (-1)^v C(k,v) v^n   (0^0 = 1),
// independent of the binomial-triangle recurrence used in the library.
inline mpq_class bernoulli_worpitzky(unsigned n) {
  mpq_class b(0);
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class inner(0);
    for (unsigned v = 0; v <= k; ++v) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), k, v);
      mpz_class p;
      if (n == 0) {
        p = 1;
      } else {
        mpz_ui_pow_ui(p.get_mpz_t(), v, n);
      }
      if (v % 2 == 0) {
        inner += c * p;
      } else {
        inner -= c * p;
      }
    }
    b += mpq_class(inner) / mpq_class(k + 1);
  }
  b.canonicalize();
  return b;
}

// Zigzag (alternating-permutation) numbers by the boustrophedon transform of
// (1, 0, 0, ...); the even entries are the secant numbers |E_{2n}|, so
// E_{2n} = (-1)^n zigzag(2n).
inline mpz_class euler_boustrophedon(unsigned n) {
  if (n % 2 == 1) return mpz_class(0);
  std::vector<mpz_class> prev{mpz_class(1)};
  for (unsigned row = 1; row <= n; ++row) {
    std::vector<mpz_class> cur(row + 1);
    cur[0] = 0;  // input sequence 1, 0, 0, ... contributes only at row 0
    for (unsigned i = 1; i <= row; ++i) cur[i] = cur[i - 1] + prev[row - i];
    prev = std::move(cur);
  }
  mpz_class zig = prev.back();
  if ((n / 2) % 2 == 1) zig = -zig;
  return zig;
}

// zeta(s) for integer s >= 2 by direct summation with an Euler-Maclaurin
// tail whose remainder is bounded by the first omitted term:
//   zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
//           + sum_{i=1}^m B_{2i}/(2i)! (s)_{2i-1} N^{-s-2i+1} + R.
// Returns the value; writes a rigorous |R| bound (doubled) to *bound.
inline unicircle::Real zeta_euler_maclaurin(unsigned s, unicircle::Precision prec,
                                            unicircle::Real* bound) {
  using unicircle::Real;
  if (s < 2) throw std::invalid_argument("s >= 2");
  const unicircle::Precision wp = prec + 32;
  const unsigned N = 64;
  const unsigned m = 40;

  Real sum(0L, wp);
  Real one(1, wp);
  for (unsigned n = 1; n < N; ++n) {
    sum += one / pown(Real(static_cast<long>(n), wp), static_cast<long>(s));
  }
  Real Ns = pown(Real(static_cast<long>(N), wp), static_cast<long>(s));
  sum += one / (Ns * 2L);
  sum += Real(static_cast<long>(N), wp) / (Ns * Real(static_cast<long>(s) - 1, wp));

  // Bernoulli table via the library-independent Worpitzky sum.
  mpz_class rising(1);  // (s)(s+1)...(s+2i-2)
  Real npow = Ns * Real(static_cast<long>(N), wp);  // N^{s+1} -> N^{s+2i-1}
  Real term(0L, wp);
  for (unsigned i = 1; i <= m + 1; ++i) {
    if (i == 1) {
      rising = s;
    } else {
      rising *= mpz_class(s + 2 * i - 4) * mpz_class(s + 2 * i - 3);
    }
    mpq_class coeff = bernoulli_worpitzky(2 * i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * i);
    coeff /= mpq_class(fact);
    coeff *= mpq_class(rising);
    coeff.canonicalize();
    term = Real::from_rational(coeff, wp) / npow;
    if (i <= m) {
      sum += term;
      npow *= pown(Real(static_cast<long>(N), wp), 2);
    }
  }
  *bound = abs(term) * 2L;
  return sum;
}

}  // namespace oracles

#endif
