#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "unicircle/poly.hpp"

using namespace unicircle;

namespace {

Real tol_bits(long bits) { return Real::pow2(-bits, 64); }

Complex c_of(long re, long im, Precision prec = kDefaultPrecision) {
  return Complex(re, im, prec);
}

}  // namespace

TEST_CASE("real decimal round trip is exact") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    Real x = exp(Real::from_double(dist(rng), 256));
    Real back = Real::from_decimal(x.to_decimal(), 256);
    CHECK(x == back);
  }
  CHECK(Real::from_decimal("0", 128).is_zero());
  CHECK_THROWS(Real::from_decimal("not-a-number", 128));
  CHECK_THROWS(Real::from_decimal("inf", 128));
}

TEST_CASE("evaluate") {
  auto p = Polynomial::from_int_coeffs({1, 0, 1});  // z^2 + 1
  CHECK(p.evaluate(c_of(0, 1)).abs() <= tol_bits(250));
  auto one = Polynomial::from_int_coeffs({1});
  CHECK(one.evaluate(c_of(7, -3)) == c_of(1, 0));
  auto cubic = Polynomial::from_int_coeffs({-1, -1, 0, 1});  // z^3 - z - 1
  CHECK(cubic.evaluate(c_of(1, 0)) == c_of(-1, 0));
}

TEST_CASE("derivative") {
  CHECK(max_coeff_distance(Polynomial::from_int_coeffs({1, 0, 1}).derivative(),
                           Polynomial::from_int_coeffs({0, 2}))
            .is_zero());
  CHECK(Polynomial::from_int_coeffs({5}).derivative().is_zero());
  CHECK(max_coeff_distance(Polynomial::from_int_coeffs({-1, -1, 0, 1}).derivative(),
                           Polynomial::from_int_coeffs({-1, 0, 3}))
            .is_zero());
  CHECK_THROWS_AS(Polynomial(kDefaultPrecision).derivative(), ZeroPolynomialError);
}

TEST_CASE("multiply") {
  auto zp1 = Polynomial::from_int_coeffs({1, 1});
  auto zm1 = Polynomial::from_int_coeffs({-1, 1});
  CHECK(max_coeff_distance(zp1 * zm1, Polynomial::from_int_coeffs({-1, 0, 1})).is_zero());
  auto p = Polynomial::from_int_coeffs({3, 1, 4});
  CHECK(max_coeff_distance(p * Polynomial::from_int_coeffs({1}), p).is_zero());
  auto z2p1 = Polynomial::from_int_coeffs({1, 0, 1});
  CHECK(max_coeff_distance(z2p1 * z2p1, Polynomial::from_int_coeffs({1, 0, 2, 0, 1})).is_zero());
}

TEST_CASE("star examples") {
  // z^3 - z - 1 -> -z^3 - z^2 + 1
  CHECK(max_coeff_distance(Polynomial::from_int_coeffs({-1, -1, 0, 1}).star(),
                           Polynomial::from_int_coeffs({1, 0, -1, -1}))
            .is_zero());
  // real palindrome is fixed
  auto pal = Polynomial::from_int_coeffs({1, 3, 1});
  CHECK(max_coeff_distance(pal.star(), pal).is_zero());
  // iz + 2 -> 2z - i
  Polynomial p({c_of(2, 0), c_of(0, 1)}, kDefaultPrecision);
  Polynomial expect({c_of(0, -1), c_of(2, 0)}, kDefaultPrecision);
  CHECK(max_coeff_distance(p.star(), expect).is_zero());
  CHECK_THROWS_AS(Polynomial(kDefaultPrecision).star(), ZeroPolynomialError);
}

TEST_CASE("star is an involution when the constant term is nonzero") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 30; ++i) {
    Polynomial h = generators::random_dense(rng, 1 + static_cast<int>(rng() % 9), 192);
    if (h.coeff(0).is_zero()) continue;
    Polynomial twice = h.star().star();
    CHECK(max_coeff_distance(twice, h).is_zero());  // conj+reverse is exact
  }
}

TEST_CASE("star evaluation identity") {
  std::mt19937_64 rng(778);
  for (int i = 0; i < 20; ++i) {
    Polynomial h = generators::random_dense(rng, 1 + static_cast<int>(rng() % 7), 256);
    int n = h.degree();
    Complex z = generators::random_unit(rng, 256) * Real::from_double(0.3 + (i % 5) * 0.35, 256);
    Complex lhs = h.star().evaluate(z);
    Complex inv_conj = Complex(1, 0, 256) / z.conj();
    Complex rhs = z.pow_int(n) * h.evaluate(inv_conj).conj();
    CHECK((lhs - rhs).abs() <= tol_bits(200) * (Real(1, 256) + rhs.abs()));
  }
}

TEST_CASE("detect_self_inversive") {
  auto d1 = detect_self_inversive(Polynomial::from_int_coeffs({1, 0, 1}));
  REQUIRE(d1.ok());
  CHECK((d1.form->epsilon - c_of(1, 0)).abs() <= tol_bits(120));

  // z + i: epsilon = i
  Polynomial zi({c_of(0, 1), c_of(1, 0)}, kDefaultPrecision);
  auto d2 = detect_self_inversive(zi);
  REQUIRE(d2.ok());
  CHECK((d2.form->epsilon - c_of(0, 1)).abs() <= tol_bits(120));

  // z^2 + z: A_0 = 0 with A_2 = 1
  auto d3 = detect_self_inversive(Polynomial::from_int_coeffs({0, 1, 1}));
  REQUIRE(!d3.ok());
  CHECK(d3.rejection->failing_index == 0);

  // z^2 + 2z + 3 is not self-inversive: |A_0| = 3 != 1
  auto d4 = detect_self_inversive(Polynomial::from_int_coeffs({3, 2, 1}));
  CHECK(!d4.ok());

  CHECK_THROWS_AS(detect_self_inversive(Polynomial(kDefaultPrecision)), ZeroPolynomialError);
}

TEST_CASE("construct_theorem1 examples") {
  // h = z, d = 2, lambda = 1 -> z^2 + 1
  CHECK(max_coeff_distance(construct_theorem1(Polynomial::from_int_coeffs({0, 1}), 2, c_of(1, 0)),
                           Polynomial::from_int_coeffs({1, 0, 1}))
            .is_zero());
  // h = z^3 - z - 1, lambda = -1 -> z^k(z^3-z-1) + (z^3+z^2-1)
  int k = 4;
  Polynomial P = construct_theorem1(Polynomial::from_int_coeffs({-1, -1, 0, 1}), k + 3,
                                    c_of(-1, 0));
  Polynomial expect = Polynomial::from_int_coeffs({-1, -1, 0, 1}).shifted(k) +
                      Polynomial::from_int_coeffs({-1, 0, 1, 1});
  CHECK(max_coeff_distance(P, expect).is_zero());
  // h = 1, d = 1, lambda = 1 -> z + 1
  CHECK(max_coeff_distance(construct_theorem1(Polynomial::from_int_coeffs({1}), 1, c_of(1, 0)),
                           Polynomial::from_int_coeffs({1, 1}))
            .is_zero());
  CHECK_THROWS_WITH(construct_theorem1(Polynomial::from_int_coeffs({0, 1}), 1, c_of(1, 0)),
                    "degree constraint d>n violated");
}

TEST_CASE("construct_theorem1 detects with epsilon = lambda") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + static_cast<int>(rng() % 6);
    int d = n + 1 + static_cast<int>(rng() % 6);
    Polynomial h = generators::random_dense(rng, n, 256);
    Complex lambda = generators::random_unit(rng, 256);
    Polynomial P = construct_theorem1(h, d, lambda);
    auto det = detect_self_inversive(P);
    REQUIRE(det.ok());
    CHECK((det.form->epsilon - lambda).abs() <= tol_bits(128));
  }
}

TEST_CASE("derivative_decomposition round trip") {
  // P = z^2 + 2z + 1 -> h = z + 1, lambda = 1
  auto det = detect_self_inversive(Polynomial::from_int_coeffs({1, 2, 1}));
  REQUIRE(det.ok());
  auto dec = derivative_decomposition(*det.form);
  CHECK(max_coeff_distance(dec.h, Polynomial::from_int_coeffs({1, 1})).is_zero());
  Polynomial back = construct_theorem1(dec.h, 2, dec.lambda);
  CHECK(max_coeff_distance(back, det.form->poly) <= tol_bits(200));

  // P = z + i -> h = 1, lambda = i
  Polynomial zi({c_of(0, 1), c_of(1, 0)}, kDefaultPrecision);
  auto det2 = detect_self_inversive(zi);
  REQUIRE(det2.ok());
  auto dec2 = derivative_decomposition(*det2.form);
  CHECK(max_coeff_distance(dec2.h, Polynomial::from_int_coeffs({1})).is_zero());
  CHECK(max_coeff_distance(construct_theorem1(dec2.h, 1, dec2.lambda), zi) <= tol_bits(200));

  // random self-inversive inputs reproduce coefficientwise
  std::mt19937_64 rng(999);
  for (int i = 0; i < 40; ++i) {
    Polynomial P = generators::random_self_inversive(rng, 10, 256);
    auto d = detect_self_inversive(P);
    REQUIRE(d.ok());
    auto hd = derivative_decomposition(*d.form);
    Polynomial back2 = construct_theorem1(hd.h, P.degree(), hd.lambda);
    CHECK(max_coeff_distance(back2, P) <= tol_bits(220) * P.max_abs_coeff());
  }
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(31337);
  Polynomial p = generators::random_dense(rng, 7, 192);
  nlohmann::json j = p.to_json();
  CHECK(j["precision_bits"] == 192);
  Polynomial back = Polynomial::from_json(j);
  CHECK(back.precision() == 192);
  CHECK(max_coeff_distance(back, p).is_zero());

  CHECK_THROWS(Polynomial::from_json(nlohmann::json::parse(R"({"coeffs": []})")));
  CHECK_THROWS(Polynomial::from_json(
      nlohmann::json::parse(R"({"precision_bits": 16, "coeffs": []})")));
  CHECK_THROWS(Polynomial::from_json(
      nlohmann::json::parse(R"({"precision_bits": 128, "coeffs": [["nan","0"]]})")));
  // zero polynomial round-trips
  Polynomial zero = Polynomial::from_json(
      nlohmann::json::parse(R"({"precision_bits": 128, "coeffs": []})"));
  CHECK(zero.is_zero());
}

TEST_CASE("trimming and deflation") {
  Polynomial p({c_of(0, 0), c_of(1, 0), c_of(0, 0)}, kDefaultPrecision);
  CHECK(p.degree() == 1);  // trailing zero trimmed
  int mult = 0;
  Polynomial q = p.deflate_origin(&mult);
  CHECK(mult == 1);
  CHECK(q.degree() == 0);
}
