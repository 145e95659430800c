#pragma once

#include "whvi/instance.hpp"

#include <cmath>
#include <random>
#include <string>

namespace whvi::testing {

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline Vector random_vector(std::mt19937_64& rng, int n, double a, double b) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, a, b);
  return v;
}

inline Vector unit_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vector v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = g(rng);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

/// Random polyhedron {A x <= b} with `rows` halfspaces. With `through_origin`, b = 0;
/// otherwise b > 0, so 0 is interior.
inline Polyhedron random_polyhedron(std::mt19937_64& rng, int n, int rows, bool through_origin) {
  Matrix A(rows, n);
  Vector b(rows);
  for (int r = 0; r < rows; ++r) {
    A.row(r) = unit_vector(rng, n).transpose();
    b[r] = through_origin ? 0.0 : uniform(rng, 0.2, 2.0);
  }
  return Polyhedron::from_inequalities(A, b);
}

/// Affine remainder M x + q as monomials.
inline std::vector<MonomialList> affine_remainder(std::mt19937_64& rng) {
  std::vector<MonomialList> rem(2);
  for (int i = 0; i < 2; ++i) {
    const double diag = uniform(rng, 0.5, 1.5);
    const double off = uniform(rng, -0.5, 0.5);
    rem[i].push_back(monomial(i == 0 ? diag : off, {1, 0}));
    rem[i].push_back(monomial(i == 0 ? off : diag, {0, 1}));
    rem[i].push_back(monomial(uniform(rng, -2.0, 2.0), {0, 0}));
  }
  return rem;
}

/// Random 2D polynomial instance. Three families, chosen by `index`:
///   0: cubic with a coupling term on R^2, R^2_+ or a random cone;
///   1: quadratic with nonnegative coefficients on R^2_+;
///   2: cubic on a random polyhedron with 0 in its interior.
/// Every family adds an affine remainder.
inline Instance random_instance(std::mt19937_64& rng, int index) {
  const int family = index % 3;
  std::vector<MonomialList> lead(2);
  Polyhedron K = Polyhedron::whole_space(2);
  if (family == 1) {
    for (int i = 0; i < 2; ++i) {
      lead[i] = {monomial(uniform(rng, 0.2, 1.5), {2, 0}), monomial(uniform(rng, 0.0, 1.0), {1, 1}),
                 monomial(uniform(rng, 0.2, 1.5), {0, 2})};
    }
    K = Polyhedron::nonnegative_orthant(2);
  } else {
    const double b = uniform(rng, -0.3, 0.5);
    lead[0] = {monomial(uniform(rng, 0.5, 2.0), {3, 0}), monomial(b, {1, 2})};
    lead[1] = {monomial(uniform(rng, 0.5, 2.0), {0, 3}), monomial(b, {2, 1})};
    if (family == 2) {
      K = random_polyhedron(rng, 2, 3, false);
    } else {
      const int which = static_cast<int>(uniform(rng, 0.0, 3.0));
      if (which == 1) K = Polyhedron::nonnegative_orthant(2);
      if (which == 2) K = random_polyhedron(rng, 2, 2, true);
    }
  }
  WeaklyHomogeneousMap m(2, std::nullopt, lead, affine_remainder(rng));
  return Instance{"random_" + std::to_string(index), std::move(m), std::move(K), std::nullopt, {}, {}};
}

}  // namespace whvi::testing
