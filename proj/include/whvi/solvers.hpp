#pragma once

#include "whvi/residuals.hpp"
#include "whvi/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace whvi {

/// Geometric decrease from 1 to 0.05 followed by five linear steps down to 0.
std::vector<double> default_t_schedule(int steps = 24);

struct SolveConfig {
  std::vector<double> t_schedule = default_t_schedule();
  int newton_max_iter = 50;
  double armijo_slope = 1e-4;
  double armijo_backtrack = 0.5;
  double residual_tol = 1e-10;
  double divergence_norm = 1e8;
  int multistart_count = 32;
  std::uint64_t seed = 1;
  double sample_radius = 5.0;     ///< radius of the multistart sample
  double dedup_tol = 1e-6;
  double validate_tol = 1e-8;
  double path_jump_bound = 10.0;  ///< larger warm-start jumps are logged
  int max_consecutive_failures = 3;
  int max_bisections = 200;
  int extragradient_max_iter = 20000;
  ResidualConfig residual;

  bool operator==(const SolveConfig&) const = default;
};

struct NewtonResult {
  Vector x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool hit_kink = false;
  int gradient_steps = 0;  ///< projected-gradient fallback steps taken
};

/// Semismooth Newton on H(., t) = 0 with an Armijo line search on 1/2 ||H||^2. Singular
/// Jacobians get a minimum-norm least-squares step; when the line search fails a projected
/// gradient step x <- Pi_K(x - beta G_t(x)) is tried.
NewtonResult newton_inner(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x0,
                          double t, const SolveConfig& cfg = {});

struct PathPoint {
  Vector x;
  double t = 0.0;
  double residual_norm = 0.0;
};

enum class SolveStatus { Solved, Diverged, Failed };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Failed;
  std::vector<Vector> points;      ///< Solved: validated solutions
  std::vector<double> residuals;   ///< natural residual norms of `points`
  /// Diverged: points (x_k, t_k), t_k in (0, 1), with strictly increasing norms, each solving
  /// the deformed problem at t_k to residual_tol. Numerical evidence for the unbounded
  /// alternative, not a proof of it.
  std::vector<PathPoint> trace;
  std::vector<PathPoint> path;     ///< every accepted continuation point
  std::string reason;
  std::vector<std::string> notes;
};

/// Path-follows H(x, t) = 0 from t = 1 (started at Pi_K(0)) down to t = 0 with warm starts
/// and step bisection.
SolveResult solve_homotopy(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                           const SolveConfig& cfg = {});

/// Extragradient projection method with an adaptive step.
SolveResult solve_extragradient(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const Vector& x0, const SolveConfig& cfg = {});

struct SolutionSet {
  std::vector<Vector> points;
  Vector box_lo;
  Vector box_hi;
  double box_diameter = 0.0;  ///< empirical compactness proxy
};

/// Multistart sampler of SOL(f, K): the homotopy path plus Newton from sample_set(K) points,
/// deduplicated at dedup_tol, in start order.
SolutionSet enumerate_solutions(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const SolveConfig& cfg = {});

/// x in K, ||F^nat(x)|| <= tol, and <f(x), y - x> >= -tol (1 + ||y - x||) over a fixed sample
/// of K together with its vertices.
bool validate_solution(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x,
                       double tol = 1e-8);

struct CheckerConfig;

enum class ConeEquationStatus { Solved, Refused, Failed };

struct ConeEquationResult {
  ConeEquationStatus status = ConeEquationStatus::Failed;
  Vector x;
  double residual = 0.0;  ///< ||f(x) - q||
  Verdict z_property;
  std::string reason;
};

/// Solves f(x) = q over a cone C through the complementarity problem of f - q, which is
/// equivalent when f has the Z-property on C and q lies in C.
/// Throws PreconditionError when C is not a cone or q is not in C.
ConeEquationResult solve_cone_equation(const WeaklyHomogeneousMap& m, const Polyhedron& C,
                                       const Vector& q, const SolveConfig& cfg,
                                       const CheckerConfig& checker);

}  // namespace whvi
