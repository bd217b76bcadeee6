#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "unicircle/special.hpp"

using namespace unicircle;
using namespace unicircle::special;

namespace {

Real tol_bits(long bits) { return Real::pow2(-bits, 64); }

}  // namespace

TEST_CASE("bernoulli basics and oracle agreement") {
  CHECK(bernoulli(0) == mpq_class(1));
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  for (unsigned n = 0; n <= 60; ++n) {
    CHECK(bernoulli(n) == oracles::bernoulli_worpitzky(n));
  }
}

TEST_CASE("euler numbers and oracle agreement") {
  CHECK(euler_number(0) == mpz_class(1));
  CHECK(euler_number(1) == mpz_class(0));
  CHECK(euler_number(2) == mpz_class(-1));
  CHECK(euler_number(4) == mpz_class(5));
  CHECK(euler_number(6) == mpz_class(-61));
  for (unsigned n = 0; n <= 60; ++n) {
    CHECK(euler_number(n) == oracles::euler_boustrophedon(n));
  }
}

TEST_CASE("zeta_even closed forms") {
  Real pi = pi_value(256);
  CHECK(zeta_even(0, 256).value == Real(-1, 64) / 2L);
  CHECK(abs(zeta_even(2, 256).value - pi * pi / 6L) <= tol_bits(250));
  CHECK(abs(zeta_even(4, 256).value - pown(pi, 4) / 90L) <= tol_bits(250));
  CHECK_THROWS(zeta_even(3, 256));
}

TEST_CASE("zeta series agrees with known digits and the even route") {
  RealValue z3 = zeta(3u, 128);
  Real expect = Real::from_decimal("1.2020569031595942854", 192);
  CHECK(abs(z3.value - expect) <= Real::from_decimal("1e-19", 64));
  CHECK(z3.error_bound <= Real::pow2(-128 + 4, 64));

  for (unsigned s : {2u, 4u, 10u, 24u}) {
    RealValue a = zeta(s, 192);
    RealValue b = zeta_even(s, 192);
    CHECK(abs(a.value - b.value) <= a.error_bound + b.error_bound);
  }
  CHECK_THROWS(zeta(Real(1, 64), 128));
}

TEST_CASE("zeta matches the Euler-Maclaurin oracle") {
  for (unsigned s : {3u, 5u, 9u}) {
    Real bound(64);
    Real oracle = oracles::zeta_euler_maclaurin(s, 160, &bound);
    REQUIRE(bound <= Real::from_decimal("1e-40", 64));
    CHECK(abs(zeta(s, 160).value - oracle) <= Real::from_decimal("1e-38", 64));
  }
}

TEST_CASE("lemma 3(i) and 5(i) windows") {
  const Real one(1, 256);
  for (unsigned n = 2; n <= 64; ++n) {
    Real zn = n % 2 == 0 ? zeta_even(n, 256).value : zeta(n, 256).value;
    CHECK(zn > one);
    CHECK(zn < one + Real(static_cast<long>(n) + 1, 256) /
                    Real(static_cast<long>(n) - 1, 256) * Real::pow2(-static_cast<long>(n), 256));
    Real e0 = n % 2 == 0 ? eta0_even(n, 256).value : eta0(n, 256).value;
    CHECK(e0 > one);
    CHECK(e0 < one + Real::pow2(-static_cast<long>(n), 256));
    Real e1 = n % 2 == 0 ? eta_even(n, 256).value : eta(n, 256).value;
    CHECK(e1 < one);
    CHECK(e1 > one - Real::pow2(1 - static_cast<long>(n), 256));
  }
}

TEST_CASE("eta and eta0 closed forms") {
  Real pi = pi_value(256);
  CHECK(abs(eta(2u, 256).value - pi * pi / 12L) <= tol_bits(240));
  CHECK(abs(eta0(2u, 256).value - pi * pi / 8L) <= tol_bits(240));
  CHECK(eta_even(0, 256).value == Real(1, 64) / 2L);
  CHECK(eta0_even(0, 256).value.is_zero());
  CHECK_THROWS(eta(Real(1, 64), 128));
  CHECK_THROWS(eta0(Real(1, 64), 128));
}

TEST_CASE("l_chi4 closed forms") {
  Real pi = pi_value(256);
  CHECK(abs(l_chi4(1, 256).value - pi / 4L) <= tol_bits(240));
  CHECK(abs(l_chi4(3, 256).value - pown(pi, 3) / 32L) <= tol_bits(240));
  CHECK(abs(l_chi4(5, 256).value - pown(pi, 5) * 5L / 1536L) <= tol_bits(240));
  CHECK_THROWS(l_chi4(4, 256));
}

TEST_CASE("bernoulli-zeta identity against the series route") {
  // B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}, zeta from the
  // alternating series (independent of the Bernoulli path).
  const Precision prec = 160;
  Real two_pi = pi_value(prec) * 2L;
  for (unsigned j = 1; j <= 30; ++j) {
    mpq_class lhs_q = special::bernoulli(2 * j) / mpq_class(special::factorial(2 * j));
    Real lhs = Real::from_rational(lhs_q, prec + 32);
    Real rhs = zeta(2 * j, prec).value * 2L / pown(two_pi, 2 * j);
    if (j % 2 == 0) rhs.negate();
    CHECK(abs(lhs - rhs) <= Real::pow2(-120, 64));
  }
}

TEST_CASE("error bounds shrink with precision") {
  for (unsigned s : {3u, 7u}) {
    Real b128 = zeta(s, 128).error_bound;
    Real b192 = zeta(s, 192).error_bound;
    Real b256 = zeta(s, 256).error_bound;
    CHECK(b192 <= b128);
    CHECK(b256 <= b192);
  }
}

TEST_CASE("deterministic recomputation") {
  RealValue a = zeta(17u, 224);
  RealValue b = zeta(17u, 224);
  CHECK(a.value == b.value);
  CHECK(a.error_bound == b.error_bound);
}
