#pragma once

#include "whvi/convex_geometry.hpp"
#include "whvi/map_model.hpp"

#include <vector>

namespace whvi {

/// Lattice pitch * Z^k in orthonormal coordinates of the affine hull of P, truncated to the
/// ball of the given radius about the origin. Only for dimension <= 3.
struct OracleGrid {
  double pitch = 1e-2;
  double radius = 5.0;
};

/// Nearest point to z among the grid points of every face of P, each face gridded in its own
/// orthonormal coordinates. Gridding the faces matters: the nearest grid point of P alone can
/// sit about sqrt(pitch * dist(z, P)) from Pi_P(z). The search balls grow until they contain
/// a grid point, so the radius of the grid is not used.
Vector oracle_projection(const Polyhedron& P, const Vector& z, double pitch);

struct OracleSolutions {
  /// Grid points x with s(x) = min_y <f(x), y - x> >= -tolerance(x), where y ranges over
  /// the extreme grid points and the vertices of P.
  std::vector<Vector> points;
  std::vector<double> scores;
  std::vector<double> tolerances;
  std::vector<int> cluster;  ///< cluster index of each point (grid adjacency)
  /// Highest-score point of every cluster that stays away from the truncation sphere.
  std::vector<Vector> representatives;
  std::vector<double> representative_tolerances;
  /// Same for clusters reaching within 1.5 pitch of the sphere; these may be artifacts of
  /// the truncation.
  std::vector<Vector> boundary_representatives;
  std::size_t grid_size = 0;
};

/// Brute-force solution set of VI(f, P ∩ ball). The per-point tolerance is
/// pitch * sqrt(k) * (||f(x)|| + L(x) * diam), where L is a forward-difference Lipschitz
/// estimate at x and diam the diameter of the candidate set.
OracleSolutions oracle_vi_solutions(const WeaklyHomogeneousMap& m, const Polyhedron& P,
                                    const OracleGrid& grid);

struct OracleMinimum {
  double value = 0.0;
  Vector argmin;
};

/// Grid minimum of g(x) = <psi(x) - psi(0), x> over P ∩ ball.
OracleMinimum oracle_min_inner(const WeaklyHomogeneousMap& psi, const Polyhedron& P,
                               const OracleGrid& grid);

/// Symmetric Hausdorff distance; +inf if exactly one set is empty, 0 if both are.
double hausdorff_distance(const std::vector<Vector>& a, const std::vector<Vector>& b);

namespace detail {
/// Grid points of P with integer coordinates idx (u = pitch * idx) and ||u - center|| <= r.
struct GridPoint {
  std::vector<long> idx;
  Vector x;
};
std::vector<GridPoint> grid_points(const Polyhedron& P, double pitch, const Vector& center_u,
                                   double radius_u);
}  // namespace detail

}  // namespace whvi
