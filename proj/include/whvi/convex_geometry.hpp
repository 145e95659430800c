#pragma once

#include "whvi/types.hpp"

#include <cstdint>
#include <vector>

namespace whvi {

/// The Euclidean projection QP hit its iteration cap.
class ProjectionError : public Error {
public:
  using Error::Error;
};

/// {x : A x <= b, E x = d}. Nonemptiness is verified at construction.
class Polyhedron {
public:
  Polyhedron(Matrix A, Vector b, Matrix E, Vector d);

  static Polyhedron whole_space(int n);
  static Polyhedron nonnegative_orthant(int n);
  static Polyhedron from_inequalities(Matrix A, Vector b);

  int dimension() const { return n_; }
  Eigen::Index inequality_count() const { return A_.rows(); }
  Eigen::Index equality_count() const { return E_.rows(); }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  const Matrix& E() const { return E_; }
  const Vector& d() const { return d_; }

  /// True iff b = 0 and d = 0.
  bool is_cone() const;

  /// A x <= b + tol and |E x - d|_inf <= tol.
  bool contains(const Vector& x, double tol = 1e-8) const;

  bool operator==(const Polyhedron& o) const;

private:
  int n_;
  Matrix A_;
  Vector b_;
  Matrix E_;
  Vector d_;
};

/// Constraints that are tight at a projection point.
///
/// `tight` lists every inequality row within the activity tolerance. The `selected_*` lists
/// hold the least-index maximal linearly independent subset of equalities followed by tight
/// inequalities; that subset defines the generalized Jacobian of the projector.
struct ActiveSet {
  std::vector<int> tight;
  std::vector<int> equalities;
  std::vector<int> selected_equalities;
  std::vector<int> selected_inequalities;

  /// Rows of the selected constraints, equalities first.
  Matrix selected_normals(const Polyhedron& P) const;
  /// Orthogonal projector onto the null space of the selected normals.
  Matrix null_space_projector(const Polyhedron& P) const;
};

struct Projection {
  Vector point;
  ActiveSet active;
  Vector inequality_multipliers;  ///< lambda >= 0, x - z + A^T lambda + E^T mu = 0
  Vector equality_multipliers;    ///< mu
  int iterations = 0;
};

/// argmin_{x in P} ||x - z|| by a dual active-set (Goldfarb-Idnani) method with least-index
/// pivoting. `act_tol` is the relative tolerance used to report tight rows.
Projection project(const Polyhedron& P, const Vector& z, double act_tol = 1e-10);

/// Max-norm KKT residual of a projection result: stationarity, primal feasibility,
/// dual feasibility and complementarity.
double projection_kkt_residual(const Polyhedron& P, const Vector& z, const Projection& proj);

/// {u : A u <= 0, E u = 0}.
Polyhedron recession_cone(const Polyhedron& P);

/// Adds the box |x_i| <= radius.
Polyhedron intersect_box(const Polyhedron& P, double radius);

/// y in C* via the Farkas characterization
/// min_{lambda >= 0, mu} ||y + A^T lambda + E^T mu|| <= tol, solved as an NNLS problem.
/// Throws InconclusiveError if the NNLS solve does not converge.
bool dual_cone_membership(const Polyhedron& C, const Vector& y, double tol = 1e-9);

/// Vertices of P with norm <= radius, from intersections of tight constraint subsets.
/// Only defined for dimension <= 3.
std::vector<Vector> vertices(const Polyhedron& P, double radius);

/// Unit vectors u with t*u in P for a cone P: edge/lineality directions (dimension <= 3)
/// followed by normalized projections of random points. Empty iff P = {0} (up to sampling
/// for dimension > 3).
std::vector<Vector> cone_directions(const Polyhedron& C, int count, std::uint64_t seed);

/// True iff the recession cone of P is {0}.
bool is_bounded(const Polyhedron& P);

/// Deterministic sample of P near the ball of the given radius: the projection of the
/// origin, vertices (dimension <= 3), projected ball samples and convex combinations.
/// Duplicate points are removed, so lower-dimensional sets may return fewer points.
std::vector<Vector> sample_set(const Polyhedron& P, int count, double radius, std::uint64_t seed);

/// x = offset + basis * u spans the affine hull of the equality system E x = d.
struct AffineParametrization {
  Vector offset;
  Matrix basis;
};

/// Orthonormal basis and minimum-norm offset.
AffineParametrization affine_hull_orthonormal(const Polyhedron& P);
/// Free-variable basis from row reduction; exact for small integer data.
AffineParametrization affine_hull_free_variables(const Polyhedron& P);

}  // namespace whvi
