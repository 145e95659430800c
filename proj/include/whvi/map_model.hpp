#pragma once

#include "whvi/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace whvi {

/// coefficient * prod_i x_i^exponents[i]
struct Monomial {
  double coefficient = 0.0;
  std::vector<int> exponents;

  int total_degree() const;
  double eval(const Vector& x) const;
  /// d/dx_j of the monomial, accumulated into `grad`.
  void accumulate_gradient(const Vector& x, Eigen::Ref<Vector> grad) const;

  bool operator==(const Monomial&) const = default;
};

/// coefficient * root_index-th root of (a.x + b), continuously extended to all of R^n:
/// odd roots keep the sign of the argument, even roots use its absolute value.
struct RadicalTerm {
  double coefficient = 0.0;
  int root_index = 2;
  Vector a;
  double b = 0.0;

  double inner(const Vector& x) const { return a.dot(x) + b; }
  double eval(const Vector& x) const;
  /// Gradient of the term. Arguments with |a.x+b| < kink_floor are evaluated as if
  /// |a.x+b| = kink_floor, which keeps the result finite at the kink.
  void accumulate_gradient(const Vector& x, double kink_floor, Eigen::Ref<Vector> grad) const;

  bool operator==(const RadicalTerm& o) const {
    return coefficient == o.coefficient && root_index == o.root_index && a == o.a && b == o.b;
  }
};

using MonomialList = std::vector<Monomial>;
using RadicalList = std::vector<RadicalTerm>;

/// f = f^inf + r on R^n, where f^inf collects monomials of total degree exactly gamma and
/// the remainder r collects lower-degree monomials and radical terms.
///
/// Immutable once constructed. Every evaluation is pure.
class WeaklyHomogeneousMap {
public:
  /// Throws ConstructionError on any invariant violation. When `gamma` is empty it is
  /// inferred as the largest total degree present.
  WeaklyHomogeneousMap(int dimension, std::optional<int> gamma, std::vector<MonomialList> leading,
                       std::vector<MonomialList> remainder_poly = {},
                       std::vector<RadicalList> remainder_radical = {});

  int dimension() const { return n_; }
  int degree() const { return gamma_; }

  const std::vector<MonomialList>& leading() const { return leading_; }
  const std::vector<MonomialList>& remainder_poly() const { return remainder_poly_; }
  const std::vector<RadicalList>& remainder_radical() const { return remainder_radical_; }
  bool has_radicals() const;

  Vector eval(const Vector& x) const;
  Vector eval_leading(const Vector& x) const;
  Vector eval_remainder(const Vector& x) const;

  Matrix jacobian(const Vector& x, double kink_floor = 0.0) const;
  Matrix jacobian_leading(const Vector& x) const;
  Matrix jacobian_remainder(const Vector& x, double kink_floor = 0.0) const;

  /// Smallest |a.x+b| over all radical terms (+inf without radicals).
  double kink_distance(const Vector& x) const;

  /// The recession map f^inf as a map of its own.
  WeaklyHomogeneousMap leading_part() const;
  /// f - q, with q absorbed into the remainder as constants.
  WeaklyHomogeneousMap shifted(const Vector& q) const;

  bool operator==(const WeaklyHomogeneousMap& o) const;

private:
  int n_;
  int gamma_;
  std::vector<MonomialList> leading_;
  std::vector<MonomialList> remainder_poly_;
  std::vector<RadicalList> remainder_radical_;
};

/// Helpers for writing maps in code.
Monomial monomial(double coefficient, std::vector<int> exponents);
RadicalTerm radical(double coefficient, int root_index, Vector a, double b);

struct RayRatios {
  Vector direction;
  std::vector<double> ratios;  ///< ||r(R d)|| / R^gamma per radius
  bool pass = false;
};

struct WeakHomogeneityReport {
  std::vector<double> radii;
  std::vector<RayRatios> rays;
  bool pass = false;
};

/// Probes the remainder condition ||r(x)|| / ||x||^gamma -> 0 along rays.
/// A ray passes when its last ratio is below `tol` and the ratios are non-increasing over
/// the upper half of the radius grid.
WeakHomogeneityReport verify_weak_homogeneity(const WeaklyHomogeneousMap& m,
                                              std::span<const Vector> directions,
                                              std::span<const double> radii, double tol);

}  // namespace whvi
