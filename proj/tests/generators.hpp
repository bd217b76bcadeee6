// Seeded random inputs shared by the property tests and the acceptance
// suite. Everything is driven by std::mt19937_64 with explicit seeds so runs
// are reproducible.

#ifndef UNICIRCLE_TESTS_GENERATORS_HPP
#define UNICIRCLE_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "unicircle/poly.hpp"

namespace generators {

using unicircle::Complex;
using unicircle::Polynomial;
using unicircle::Precision;
using unicircle::Real;

inline Real real_from(double v, Precision prec) { return Real::from_double(v, prec); }

inline Complex unit_at(double theta, Precision prec) {
  return Complex::unit(real_from(theta, prec));
}

// Monic polynomial with the given roots.
inline Polynomial from_roots(const std::vector<Complex>& roots, Precision prec) {
  Polynomial p = Polynomial::from_int_coeffs({1}, prec);
  for (const auto& r : roots) {
    std::vector<Complex> lin = {-r, Complex(1, 0, prec)};
    p = p * Polynomial(lin, prec);
  }
  return p;
}

// h with roots sampled inside the disk (radius <= r_max < 1).
inline Polynomial random_h_inside(std::mt19937_64& rng, int degree, double r_max,
                                  Precision prec) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> radius(0.0, r_max);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    double r = radius(rng);
    roots.push_back(unit_at(angle(rng), prec) * real_from(r, prec));
  }
  return from_roots(roots, prec);
}

// h with each root inside (radius <= 0.92) or outside (radius >= 1.08).
inline Polynomial random_h_mixed(std::mt19937_64& rng, int degree, Precision prec) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> inside(0.15, 0.92);
  std::uniform_real_distribution<double> outside(1.08, 1.9);
  std::bernoulli_distribution coin(0.5);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    double r = coin(rng) ? inside(rng) : outside(rng);
    roots.push_back(unit_at(angle(rng), prec) * real_from(r, prec));
  }
  return from_roots(roots, prec);
}

inline Complex random_unit(std::mt19937_64& rng, Precision prec) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  return unit_at(angle(rng), prec);
}

// Random dense complex polynomial of exactly the given degree.
inline Polynomial random_dense(std::mt19937_64& rng, int degree, Precision prec) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<Complex> c;
  c.reserve(static_cast<size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c.emplace_back(real_from(coeff(rng), prec), real_from(coeff(rng), prec));
  }
  double lead = coeff(rng);
  if (lead >= 0 && lead < 0.25) lead += 0.5;
  if (lead < 0 && lead > -0.25) lead -= 0.5;
  c.emplace_back(real_from(lead, prec), real_from(coeff(rng), prec));
  return Polynomial(std::move(c), prec);
}

// Self-inversive polynomial of degree d built as z^{d-n} h + lambda h* with
// mixed-root h, exercising both unimodular and off-circle cases.
inline Polynomial random_self_inversive(std::mt19937_64& rng, int max_degree, Precision prec) {
  std::uniform_int_distribution<int> d_dist(2, max_degree);
  int d = d_dist(rng);
  std::uniform_int_distribution<int> n_dist(1, d - 1);
  int n = n_dist(rng);
  Polynomial h = random_h_mixed(rng, n, prec);
  return construct_theorem1(h, d, random_unit(rng, prec));
}

}  // namespace generators

#endif
