#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "unicircle/rootfind.hpp"

using namespace unicircle;

namespace {

Real tol_bits(long bits) { return Real::pow2(-bits, 64); }

// multiset match within tol
bool roots_match(const std::vector<Complex>& got, const std::vector<Complex>& expect,
                 const Real& tol) {
  if (got.size() != expect.size()) return false;
  std::vector<bool> used(expect.size(), false);
  for (const auto& g : got) {
    bool hit = false;
    for (size_t i = 0; i < expect.size(); ++i) {
      if (!used[i] && (g - expect[i]).abs() <= tol) {
        used[i] = true;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simple roots") {
  auto rep = all_roots(Polynomial::from_int_coeffs({1, 0, 1}), 256);
  REQUIRE(rep.converged);
  CHECK(roots_match(rep.roots, {Complex(0, 1, 256), Complex(0, -1, 256)}, tol_bits(100)));
  CHECK(rep.max_modulus_deviation <= tol_bits(100));

  // z^2 - 5/2 z + 1 = (z-2)(z-1/2), scaled by 2: 2z^2 - 5z + 2
  auto rep2 = all_roots(Polynomial::from_int_coeffs({2, -5, 2}), 256);
  REQUIRE(rep2.converged);
  CHECK(roots_match(rep2.roots,
                    {Complex(2, 0, 256), Complex(Real(1, 256) / 2L, Real(0L, 256))},
                    tol_bits(100)));

  // plastic-number cubic
  auto rep3 = all_roots(Polynomial::from_int_coeffs({-1, -1, 0, 1}), 256);
  REQUIRE(rep3.converged);
  Real plastic = Real::from_decimal("1.32471795724474602596090885447809734", 256);
  bool found = false;
  for (const auto& r : rep3.roots) {
    if (abs(r.imag()) <= tol_bits(100) && abs(r.real() - plastic) <= tol_bits(90)) found = true;
  }
  CHECK(found);
}

TEST_CASE("monomial and origin roots") {
  auto rep = all_roots(Polynomial::from_int_coeffs({0, 1}), 128);
  REQUIRE(rep.converged);
  CHECK(rep.origin_multiplicity == 1);
  CHECK(rep.roots.size() == 1);
  CHECK(rep.roots[0].abs().is_zero());
  CHECK(max_root_modulus(Polynomial::from_int_coeffs({0, 1}), 128).is_zero());
}

TEST_CASE("residuals below threshold and reconstruction") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    int d = 2 + static_cast<int>(rng() % 9);
    Polynomial p = generators::random_dense(rng, d, 256);
    RootReport rep = all_roots(p, 256);
    REQUIRE(rep.converged);
    for (const auto& r : rep.residuals) CHECK(r <= rep.residual_threshold);
    // leading * prod (z - root) reproduces p
    Polynomial recon = generators::from_roots(rep.roots, 256).scaled(p.leading());
    Real bound = Real(d, 256) * tol_bits(110) * p.max_abs_coeff();
    CHECK(max_coeff_distance(recon, p) <= bound);
  }
}

TEST_CASE("conjugate and inversive symmetry of root sets") {
  std::mt19937_64 rng(2025);
  // real coefficients: roots closed under conjugation
  for (int i = 0; i < 10; ++i) {
    int d = 3 + static_cast<int>(rng() % 6);
    std::vector<Complex> c;
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int j = 0; j <= d; ++j) {
      c.emplace_back(Real::from_double(coeff(rng), 256), Real(0L, 256));
    }
    if (c.back().is_zero()) c.back() = Complex(1, 0, 256);
    Polynomial p(std::move(c), 256);
    RootReport rep = all_roots(p, 256);
    REQUIRE(rep.converged);
    std::vector<Complex> conjugated;
    for (const auto& r : rep.roots) conjugated.push_back(r.conj());
    CHECK(roots_match(rep.roots, conjugated, tol_bits(80)));
  }
  // self-inversive: roots closed under z -> 1/conj(z)
  for (int i = 0; i < 10; ++i) {
    Polynomial p = generators::random_self_inversive(rng, 8, 256);
    RootReport rep = all_roots(p, 256);
    REQUIRE(rep.converged);
    std::vector<Complex> inverted;
    for (const auto& r : rep.roots) {
      inverted.push_back(Complex(1, 0, 256) / r.conj());
    }
    CHECK(roots_match(rep.roots, inverted, tol_bits(60)));
  }
}

TEST_CASE("determinism: repeated runs bit-identical") {
  std::mt19937_64 rng(99);
  Polynomial p = generators::random_dense(rng, 9, 256);
  RootReport a = all_roots(p, 256);
  RootReport b = all_roots(p, 256);
  REQUIRE(a.roots.size() == b.roots.size());
  for (size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].real() == b.roots[i].real());
    CHECK(a.roots[i].imag() == b.roots[i].imag());
  }
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("unimodularity verdicts") {
  Real tol = Real::from_decimal("1e-20", 64);
  auto u1 = unimodularity(Polynomial::from_int_coeffs({1, 0, 1}), tol, 256);
  CHECK(u1.verdict);
  auto u2 = unimodularity(Polynomial::from_int_coeffs({2, -5, 2}), tol, 256);
  CHECK(!u2.verdict);
  CHECK(abs(u2.max_modulus_deviation - Real(1, 256)) <= tol_bits(100));

  // triple root at z = 1 (k = 7 construction): still unimodular at 1e-20
  Polynomial ce = construct_theorem1(Polynomial::from_int_coeffs({-1, -1, 0, 1}), 10,
                                     Complex(-1, 0, 256));
  auto u3 = unimodularity(ce, tol, 256);
  CHECK(u3.verdict);
  CHECK(u3.report.noise_floor_frozen >= 2);  // cluster diagnostic
}

TEST_CASE("max_root_modulus") {
  CHECK(abs(max_root_modulus(Polynomial::from_int_coeffs({-1, -1, 0, 1}), 256) -
            Real::from_decimal("1.32471795724474602596", 256)) <= tol_bits(60));
}

TEST_CASE("convex hull containment") {
  Real tol = Real::from_decimal("1e-12", 64);
  CHECK(convex_hull_containment(Polynomial::from_int_coeffs({1, 0, 1}), tol, 256));
  // (z-1)^3: P' roots at the hull vertex
  CHECK(convex_hull_containment(Polynomial::from_int_coeffs({-1, 3, -3, 1}), tol, 256));
  std::mt19937_64 rng(555);
  for (int i = 0; i < 50; ++i) {
    int d = 2 + static_cast<int>(rng() % 9);
    Polynomial p = generators::random_dense(rng, d, 256);
    CHECK(convex_hull_containment(p, tol, 256));
  }
  CHECK_THROWS(convex_hull_containment(Polynomial::from_int_coeffs({1, 1}), tol, 256));
}
