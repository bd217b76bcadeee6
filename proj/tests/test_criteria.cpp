#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "unicircle/criteria.hpp"
#include "unicircle/families.hpp"

using namespace unicircle;

namespace {

Real tol_bits(long bits) { return Real::pow2(-bits, 64); }

SelfInversiveForm form_of(const Polynomial& p) {
  auto det = detect_self_inversive(p);
  REQUIRE(det.ok());
  return *det.form;
}

SelfInversiveForm form_of_ints(const std::vector<long>& coeffs) {
  return form_of(Polynomial::from_int_coeffs(coeffs));
}

const Real kRootTol = Real::from_decimal("1e-20", 64);

}  // namespace

TEST_CASE("cohn examples") {
  auto v1 = cohn(form_of_ints({1, 0, 1}), kRootTol, 256);
  CHECK(v1.holds);
  CHECK(v1.is_iff);

  // z^2 - 5/2 z + 1 (times 2): P' root at 5/4
  auto v2 = cohn(form_of_ints({2, -5, 2}), kRootTol, 256);
  CHECK(!v2.holds);

  auto v3 = cohn(form_of(build_P(2, 256)), kRootTol, 256);
  CHECK(v3.holds);

  // degree 1: P' is constant, vacuously inside the disk
  auto v4 = cohn(form_of_ints({1, 1}), kRootTol, 256);
  CHECK(v4.holds);
}

TEST_CASE("lakatos examples") {
  auto v1 = lakatos(form_of_ints({1, 1, 1}));
  CHECK(v1.holds);
  CHECK(v1.strict.value());
  CHECK(v1.margin == Real(1, 256));

  auto v2 = lakatos(form_of_ints({1, 3, 1}));
  CHECK(!v2.holds);  // 1 >= 2 fails; roots are real, off circle

  // scaling invariance
  auto v3 = lakatos(form_of_ints({2, 2, 2}));
  CHECK(v3.holds == v1.holds);

  // not applicable for complex self-inversive input (z + i)
  Polynomial zi({Complex(0, 1, 256), Complex(1, 0, 256)}, 256);
  auto v4 = lakatos(form_of(zi));
  CHECK(!v4.applicable);
}

TEST_CASE("lakatos_losonczi_half examples") {
  CHECK(lakatos_losonczi_half(form_of_ints({1, 1, 1})).holds);
  CHECK(!lakatos_losonczi_half(form_of_ints({1, 0, 3, 0, 1})).holds);  // 1 >= 3/2 fails
  auto v = lakatos_losonczi_half(form_of_ints({1, 0, 0, 0, 0, 1}));    // z^5 + 1
  CHECK(v.holds);  // empty middle
  CHECK(v.margin == Real(1, 256));
}

TEST_CASE("lakatos_losonczi_alpha examples") {
  auto p = form_of_ints({1, 1, 1, 1, 1});  // z^4+z^3+z^2+z+1
  auto at1 = lakatos_losonczi_alpha(p, Real(1, 256));
  CHECK(!at1.holds);  // 2 >= 3 fails
  auto at0 = lakatos_losonczi_alpha(p, Real(0L, 256));
  CHECK(at0.holds);  // 1 >= 0
  CHECK_THROWS(lakatos_losonczi_alpha(p, Real(2, 256)));

  // alpha = 1 coincides with the half-sum criterion verdict
  std::mt19937_64 rng(311);
  for (int i = 0; i < 25; ++i) {
    int n = 1 + static_cast<int>(rng() % 5);
    int d = n + 1 + static_cast<int>(rng() % 4);
    Polynomial h = generators::random_h_mixed(rng, n, 256);
    // real reciprocal: symmetrize a real polynomial
    std::vector<Complex> c;
    for (int j = 0; j <= d; ++j) c.emplace_back(256);
    for (int j = 0; j <= d; ++j) {
      Real re = h.coeff(static_cast<size_t>(j % (n + 1))).real();
      c[static_cast<size_t>(j)] = Complex(re, Real(0L, 256));
    }
    for (int j = 0; j <= d / 2; ++j) {
      c[static_cast<size_t>(d - j)] = c[static_cast<size_t>(j)];
    }
    if (c[static_cast<size_t>(d)].is_zero()) c[static_cast<size_t>(d)] = Complex(1, 0, 256);
    c[0] = c[static_cast<size_t>(d)];
    Polynomial rec(std::move(c), 256);
    auto det = detect_self_inversive(rec);
    if (!det.ok()) continue;
    auto half = lakatos_losonczi_half(*det.form);
    auto alpha1 = lakatos_losonczi_alpha(*det.form, Real(1, 256));
    CHECK(half.holds == alpha1.holds);
    CHECK(abs(half.margin * 2L - alpha1.margin) <= tol_bits(120) * (Real(1, 256) + alpha1.margin));
  }

  auto best = best_alpha(p, 33);
  CHECK(best.holds);  // alpha = 0 already works
}

TEST_CASE("smyth examples") {
  // (z+1)^2 at mu = 1: value = 1 = |A_2|
  auto sq = form_of_ints({1, 2, 1});
  Real v = smyth_value(sq.poly, Complex(1, 0, 256));
  CHECK(abs(v - Real(1, 256)) <= tol_bits(200));
  auto verdict = smyth_inf_mu(sq, 512);
  CHECK(verdict.holds);

  // z^d + 1: equality, margin snaps to zero
  auto pd = form_of_ints({1, 0, 0, 0, 0, 1});
  auto vd = smyth_inf_mu(pd, 512);
  CHECK(vd.holds);
  CHECK(vd.margin.is_zero());
  CHECK(vd.inf_lower_bound.value() <= vd.inf_upper_bound.value());
}

TEST_CASE("smyth rotation covariance") {
  std::mt19937_64 rng(612);
  for (int i = 0; i < 8; ++i) {
    Polynomial p = generators::random_self_inversive(rng, 7, 256);
    Complex nu = generators::random_unit(rng, 256);
    // P(nu z)
    std::vector<Complex> c;
    Complex pw(1, 0, 256);
    for (int j = 0; j <= p.degree(); ++j) {
      c.push_back(p.coeff(static_cast<size_t>(j)) * pw);
      pw = pw * nu;
    }
    Polynomial rotated(std::move(c), 256);
    auto d1 = detect_self_inversive(p);
    auto d2 = detect_self_inversive(rotated);
    REQUIRE(d1.ok());
    REQUIRE(d2.ok());
    auto v1 = smyth_inf_mu(*d1.form, 1024);
    auto v2 = smyth_inf_mu(*d2.form, 1024);
    CHECK(v1.holds == v2.holds);
    CHECK(abs(*v1.inf_upper_bound - *v2.inf_upper_bound) <=
          Real::from_decimal("1e-6", 64) * (Real(1, 256) + *v1.inf_upper_bound));
  }
}

TEST_CASE("schinzel examples") {
  // z^2+z+1 with c = mu = 1 gives sum 0
  auto v1 = schinzel(form_of_ints({1, 1, 1}), 64, 30);
  CHECK(v1.holds);
  CHECK(v1.inf_upper_bound.value() <= tol_bits(100));

  // z^d + 1: all roots on the circle but the criterion fails (sufficient only)
  auto v2 = schinzel(form_of_ints({1, 0, 0, 0, 1}), 64, 30);
  CHECK(!v2.holds);
  auto direct = unimodularity(Polynomial::from_int_coeffs({1, 0, 0, 0, 1}), kRootTol, 256);
  CHECK(direct.verdict);  // no contradiction: holds=false makes no claim
}

TEST_CASE("implication chains on a corpus") {
  std::mt19937_64 gen(1357);
  int lakatos_hits = 0;
  for (int i = 0; i < 60; ++i) {
    Polynomial p = generators::random_self_inversive(gen, 8, 256);
    auto det = detect_self_inversive(p);
    REQUIRE(det.ok());
    const SelfInversiveForm& f = *det.form;

    auto lk = lakatos(f);
    if (lk.applicable && lk.holds) {
      ++lakatos_hits;
      // lakatos => schinzel holds at (c, mu) = (1, 1)
      const Polynomial& poly = f.poly;
      int d = poly.degree();
      Real sum(0L, 256);
      for (int j = 0; j <= d; ++j) {
        sum += (poly.coeff(static_cast<size_t>(j)) - poly.coeff(static_cast<size_t>(d))).abs();
      }
      CHECK(sum <= poly.coeff(static_cast<size_t>(d)).abs() + tol_bits(120));
      auto sch = schinzel(f, 32, 25);
      CHECK(sch.holds);
    }

    auto sch = schinzel(f, 32, 25);
    if (sch.holds) {
      // schinzel witness implies the smyth inequality at the same mu
      Real sv = smyth_value(f.poly, *sch.mu);
      CHECK(sv <= f.poly.coeff(static_cast<size_t>(f.poly.degree())).abs() + tol_bits(60));
    }

    // soundness: criteria that hold imply unimodular zeros
    auto direct = unimodularity(f.poly, kRootTol, 256);
    for (const auto& verdict :
         {lakatos_losonczi_half(f), smyth_inf_mu(f, 512), sch}) {
      if (verdict.applicable && verdict.holds) CHECK(direct.verdict);
    }
    auto ck = cohn(f, kRootTol, 256);
    CHECK(ck.holds == direct.verdict);
  }
  CHECK(lakatos_hits >= 0);
}

TEST_CASE("observation scan") {
  // h = z: every d is unimodular
  auto scan = observation_scan(Polynomial::from_int_coeffs({0, 1}), Complex(1, 0, 256), 20,
                               kRootTol, 256);
  CHECK(!scan.first_failing_d.has_value());
  CHECK(scan.rows.size() == 19);

  // counterexample h: no failure through k = 7 (d = 10)
  auto scan2 = observation_scan(Polynomial::from_int_coeffs({-1, -1, 0, 1}), Complex(-1, 0, 256),
                                12, kRootTol, 256);
  REQUIRE(scan2.first_failing_d.has_value());
  CHECK(*scan2.first_failing_d > 10);
}
