#ifndef UNICIRCLE_SPECIAL_HPP
#define UNICIRCLE_SPECIAL_HPP

#include <gmpxx.h>

#include "unicircle/real.hpp"

namespace unicircle {

// A real value together with a rigorous bound on its truncation/rounding
// error: |value - true| <= error_bound.
struct RealValue {
  Real value;
  Real error_bound;
};

namespace special {

// pi at prec plus 16 guard bits.
Real pi_value(Precision prec);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

// Bernoulli number B_n (B_1 = -1/2) by the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0. Memoized, thread-safe, exact.
mpq_class bernoulli(unsigned n);

// Euler number E_n from 2/(e^t + e^{-t}) = sum E_n t^n / n!. Integers; odd
// indices are zero. Memoized, thread-safe, exact.
mpz_class euler_number(unsigned n);

// zeta at even integers via B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j)/(2pi)^{2j};
// zeta(0) = -1/2. Error is rounding only.
RealValue zeta_even(unsigned two_k, Precision prec);

// zeta(s) for real s > 1 by accelerated alternating series (Borwein) applied
// to eta(s) = (1 - 2^{1-s}) zeta(s), with a rigorous tail bound folded into
// error_bound (<= 2^{-prec+4}).
RealValue zeta(const Real& s, Precision prec);
RealValue zeta(unsigned s, Precision prec);

// eta(s) = (1 - 2^{1-s}) zeta(s), s > 1.
RealValue eta(const Real& s, Precision prec);
RealValue eta(unsigned s, Precision prec);
// eta0(s) = (1 - 2^{-s}) zeta(s), s > 1.
RealValue eta0(const Real& s, Precision prec);
RealValue eta0(unsigned s, Precision prec);

// Even-argument variants used by the family constructors; defined at 0 where
// the limits are exact: eta(0) = 1/2, eta0(0) = 0.
RealValue eta_even(unsigned two_j, Precision prec);
RealValue eta0_even(unsigned two_j, Precision prec);

// L(2j+1, chi_4) = (-1)^j E_{2j} / (2 (2j)!) (pi/2)^{2j+1}. odd_s = 2j+1.
RealValue l_chi4(unsigned odd_s, Precision prec);

}  // namespace special
}  // namespace unicircle

#endif
