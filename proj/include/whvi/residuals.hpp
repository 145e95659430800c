#pragma once

#include "whvi/convex_geometry.hpp"
#include "whvi/map_model.hpp"

namespace whvi {

struct ResidualConfig {
  double fd_step = 1e-7;   ///< radicals with |a.x+b| below this are treated as kinks
  double act_tol = 1e-10;  ///< activity tolerance passed to the projector

  bool operator==(const ResidualConfig&) const = default;
};

/// F^nat(x) = x - Pi_K(x - f(x)). Zero exactly at solutions of VI(f, K).
Vector natural_residual(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x);

/// G_t(x) = f^inf(x) + t x + (1 - t) r(x).
Vector homotopy_inner_map(const WeaklyHomogeneousMap& m, const Vector& x, double t);

/// H(x, t) = x - Pi_K(x - G_t(x)); H(., 0) is the natural map of f and H(., 1) the natural
/// map of f^inf + I.
Vector homotopy_residual(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x,
                         double t);

/// 1/2 ||F^nat(x)||^2.
double merit(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x);

struct GeneralizedJacobian {
  Matrix value;
  bool at_kink = false;  ///< some radical argument is within fd_step of zero
  ActiveSet active;
};

/// Element I - P_W (I - J) of the B-subdifferential of H(., t) at x, where J is the Jacobian
/// of G_t and P_W projects onto the null space of the selected active constraint normals at
/// Pi_K(x - G_t(x)).
GeneralizedJacobian generalized_jacobian(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                         const Vector& x, double t,
                                         const ResidualConfig& cfg = {});

}  // namespace whvi
