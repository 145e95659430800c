#include "whvi/residuals.hpp"

namespace whvi {

namespace {

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("homotopy parameter t must lie in [0, 1]");
}

void check_dims(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x) {
  require_dim(K.dimension(), m.dimension(), "set vs map");
  require_dim(x.size(), m.dimension(), "point");
}

}  // namespace

Vector natural_residual(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x) {
  check_dims(m, K, x);
  return x - project(K, x - m.eval(x)).point;
}

Vector homotopy_inner_map(const WeaklyHomogeneousMap& m, const Vector& x, double t) {
  check_t(t);
  return (m.eval_leading(x) + t * x) + (1.0 - t) * m.eval_remainder(x);
}

Vector homotopy_residual(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x,
                         double t) {
  check_dims(m, K, x);
  return x - project(K, x - homotopy_inner_map(m, x, t)).point;
}

double merit(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x) {
  return 0.5 * natural_residual(m, K, x).squaredNorm();
}

GeneralizedJacobian generalized_jacobian(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                         const Vector& x, double t, const ResidualConfig& cfg) {
  check_dims(m, K, x);
  check_t(t);
  const int n = m.dimension();
  const Vector z = x - homotopy_inner_map(m, x, t);
  GeneralizedJacobian out;
  out.active = project(K, z, cfg.act_tol).active;
  const Matrix PW = out.active.null_space_projector(K);
  Matrix JG = m.jacobian_leading(x) + t * Matrix::Identity(n, n);
  if (t < 1.0) JG += (1.0 - t) * m.jacobian_remainder(x, cfg.fd_step);
  out.value = Matrix::Identity(n, n) - PW * (Matrix::Identity(n, n) - JG);
  out.at_kink = m.kink_distance(x) < cfg.fd_step;
  return out;
}

}  // namespace whvi
