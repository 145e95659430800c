#include "whvi/solvers.hpp"

#include "whvi/condition_checkers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace whvi {

namespace {

double merit_at(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x, double t,
                Vector* H = nullptr) {
  Vector h = homotopy_residual(m, K, x, t);
  const double v = 0.5 * h.squaredNorm();
  if (H) *H = std::move(h);
  return v;
}

Vector newton_direction(const Matrix& V, const Vector& H) {
  Eigen::FullPivLU<Matrix> lu(V);
  lu.setThreshold(1e-12);
  if (lu.isInvertible()) return lu.solve(-H);
  return V.completeOrthogonalDecomposition().solve(-H);
}

void check_schedule(const std::vector<double>& s) {
  if (s.size() < 2 || s.front() != 1.0 || s.back() != 0.0) {
    throw PreconditionError("t_schedule must start at exactly 1 and end at exactly 0");
  }
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(s[k] < s[k - 1])) throw PreconditionError("t_schedule must be strictly decreasing");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt_point(const Vector& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

std::vector<PathPoint> record_subsequence(const std::vector<PathPoint>& path) {
  std::vector<PathPoint> out;
  double best = -1.0;
  for (const auto& p : path) {
    if (!(p.t > 0.0 && p.t < 1.0)) continue;
    const double nx = p.x.norm();
    if (nx > best) {
      out.push_back(p);
      best = nx;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "SOLVED";
    case SolveStatus::Diverged:
      return "DIVERGED";
    case SolveStatus::Failed:
      return "FAILED";
  }
  return "?";
}

std::vector<double> default_t_schedule(int steps) {
  if (steps < 6) throw PreconditionError("t schedule needs at least 6 steps");
  const int geometric = steps - 5;
  const double floor_t = 0.05;
  const double ratio = std::pow(floor_t, 1.0 / geometric);
  std::vector<double> s{1.0};
  for (int k = 1; k <= geometric; ++k) s.push_back(k == geometric ? floor_t : std::pow(ratio, k));
  for (int k = 4; k >= 0; --k) s.push_back(floor_t * k / 5.0);
  return s;
}

NewtonResult newton_inner(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x0,
                          double t, const SolveConfig& cfg) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("newton_inner: t must lie in [0, 1]");
  require_dim(x0.size(), m.dimension(), "newton_inner");
  NewtonResult res;
  res.x = x0;
  Vector H;
  double phi = merit_at(m, K, res.x, t, &H);
  const double sigma = cfg.armijo_slope;
  const double beta = cfg.armijo_backtrack;

  for (;;) {
    res.residual_norm = H.norm();
    if (res.residual_norm <= cfg.residual_tol) {
      res.converged = true;
      return res;
    }
    if (res.iterations >= cfg.newton_max_iter || !res.x.allFinite() ||
        res.x.norm() > 10.0 * cfg.divergence_norm) {
      return res;
    }
    ++res.iterations;

    const GeneralizedJacobian GJ = generalized_jacobian(m, K, res.x, t, cfg.residual);
    res.hit_kink = res.hit_kink || GJ.at_kink;
    const Vector grad = GJ.value.transpose() * H;
    Vector dx = newton_direction(GJ.value, H);
    double slope = grad.dot(dx);
    if (!dx.allFinite() || slope >= 0.0) {
      dx = -grad;
      slope = -grad.squaredNorm();
    }

    bool accepted = false;
    if (slope < 0.0) {
      double alpha = 1.0;
      for (int k = 0; k < 60; ++k, alpha *= beta) {
        const Vector trial = res.x + alpha * dx;
        Vector Ht;
        const double phit = merit_at(m, K, trial, t, &Ht);
        if (phit <= phi + sigma * alpha * slope) {
          res.x = trial;
          H = std::move(Ht);
          phi = phit;
          accepted = true;
          break;
        }
      }
    }
    if (accepted) continue;

    // Projected-gradient fallback on the deformed map.
    const Vector G = homotopy_inner_map(m, res.x, t);
    double step = 1.0;
    for (int k = 0; k < 60; ++k, step *= beta) {
      const Vector trial = project(K, res.x - step * G).point;
      Vector Ht;
      const double phit = merit_at(m, K, trial, t, &Ht);
      if (phit < phi) {
        res.x = trial;
        H = std::move(Ht);
        phi = phit;
        accepted = true;
        ++res.gradient_steps;
        break;
      }
    }
    if (!accepted) return res;  // stalled
  }
}

bool validate_solution(const WeaklyHomogeneousMap& m, const Polyhedron& K, const Vector& x,
                       double tol) {
  if (x.size() != m.dimension() || !x.allFinite()) return false;
  if (!K.contains(x, tol)) return false;
  if (natural_residual(m, K, x).norm() > tol) return false;
  const Vector fx = m.eval(x);
  const double radius = std::max(10.0, 2.0 * x.norm() + 1.0);
  for (const auto& y : sample_set(K, 64, radius, 0x5eedULL)) {
    const double gap = fx.dot(y - x);
    if (gap < -tol * (1.0 + (y - x).norm())) return false;
  }
  return true;
}

SolveResult solve_extragradient(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const Vector& x0, const SolveConfig& cfg) {
  require_dim(x0.size(), m.dimension(), "solve_extragradient");
  SolveResult res;
  Vector x = project(K, x0).point;
  double alpha = 1.0;
  constexpr double nu = 0.9;
  for (int it = 0; it <= cfg.extragradient_max_iter; ++it) {
    const Vector F = m.eval(x);
    const double r = (x - project(K, x - F).point).norm();
    if (r <= cfg.residual_tol) {
      if (validate_solution(m, K, x, cfg.validate_tol)) {
        res.status = SolveStatus::Solved;
        res.points.push_back(x);
        res.residuals.push_back(r);
        res.notes.push_back("extragradient converged in " + std::to_string(it) + " iterations");
      } else {
        res.status = SolveStatus::Failed;
        res.reason = "extragradient stopped at a point that failed validation";
      }
      return res;
    }
    Vector y, Fy;
    for (;;) {
      y = project(K, x - alpha * F).point;
      Fy = m.eval(y);
      const double lhs = alpha * (F - Fy).norm();
      const double rhs = nu * (x - y).norm();
      if (lhs <= rhs) {
        const bool generous = lhs <= 0.5 * rhs;
        x = project(K, x - alpha * Fy).point;
        if (generous) alpha = std::min(1e6, alpha * 1.5);
        break;
      }
      alpha *= 0.5;
      if (alpha < 1e-14) {
        res.status = SolveStatus::Failed;
        res.reason = "extragradient step underflow";
        return res;
      }
    }
    if (!x.allFinite() || x.norm() > cfg.divergence_norm) {
      res.status = SolveStatus::Failed;
      res.reason = "extragradient iterates left the finite range";
      return res;
    }
  }
  res.status = SolveStatus::Failed;
  res.reason = "extragradient iteration limit reached";
  return res;
}

SolveResult solve_homotopy(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                           const SolveConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "solve_homotopy");
  check_schedule(cfg.t_schedule);
  SolveResult res;
  const auto& schedule = cfg.t_schedule;

  const Vector start = project(K, Vector::Zero(m.dimension())).point;
  NewtonResult anchor = newton_inner(m, K, start, 1.0, cfg);
  if (!anchor.converged) {
    res.status = SolveStatus::Failed;
    res.reason = "anchor problem VI(f_inf + I, K) not solved from Pi_K(0); residual " +
                 fmt(anchor.residual_norm);
    return res;
  }
  res.path.push_back({anchor.x, 1.0, anchor.residual_norm});

  Vector x = anchor.x;
  double t_cur = 1.0;
  std::size_t idx = 1;
  double target = schedule[idx];
  int failures = 0;
  int bisections = 0;
  std::string failure;

  while (t_cur > 0.0) {
    NewtonResult step = newton_inner(m, K, x, target, cfg);
    if (step.converged) {
      const double jump = (step.x - x).norm();
      if (jump > cfg.path_jump_bound) {
        res.notes.push_back("path jump " + fmt(jump) + " at t = " + fmt(target));
      }
      x = step.x;
      t_cur = target;
      failures = 0;
      res.path.push_back({x, t_cur, step.residual_norm});
      if (x.norm() > cfg.divergence_norm) {
        res.status = SolveStatus::Diverged;
        res.trace = record_subsequence(res.path);
        res.reason = "||x|| exceeded " + fmt(cfg.divergence_norm) + " at t = " +
                     fmt(t_cur) + " (numerical evidence of the unbounded alternative)";
        return res;
      }
      if (t_cur == schedule[idx] && idx + 1 < schedule.size()) ++idx;
      target = schedule[idx];
      continue;
    }
    ++failures;
    if (failures >= cfg.max_consecutive_failures) {
      failure = "inner solve failed at " + std::to_string(failures) +
                " consecutive t-steps near t = " + fmt(t_cur);
      break;
    }
    if (++bisections > cfg.max_bisections) {
      failure = "step bisection limit reached near t = " + fmt(t_cur);
      break;
    }
    target = 0.5 * (t_cur + target);
    if (!(target < t_cur)) {
      failure = "t-step underflow near t = " + fmt(t_cur);
      break;
    }
  }

  if (failure.empty()) {
    const double r = natural_residual(m, K, x).norm();
    if (validate_solution(m, K, x, cfg.validate_tol)) {
      res.status = SolveStatus::Solved;
      res.points.push_back(x);
      res.residuals.push_back(r);
      return res;
    }
    failure = "end point " + fmt_point(x) + " failed validation";
  }

  // Fall back to extragradient on the target problem from the last path point.
  SolveResult eg = solve_extragradient(m, K, x, cfg);
  if (eg.status == SolveStatus::Solved) {
    res.status = SolveStatus::Solved;
    res.points = eg.points;
    res.residuals = eg.residuals;
    res.notes.push_back("homotopy: " + failure + "; solved by extragradient fallback");
    return res;
  }
  res.status = SolveStatus::Failed;
  res.reason = failure + "; extragradient fallback: " + eg.reason;
  return res;
}

SolutionSet enumerate_solutions(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const SolveConfig& cfg) {
  const int n = m.dimension();
  SolutionSet out;
  auto add = [&](const Vector& x) {
    for (const auto& p : out.points) {
      if ((p - x).norm() <= cfg.dedup_tol) return;
    }
    out.points.push_back(x);
  };

  const SolveResult h = solve_homotopy(m, K, cfg);
  if (h.status == SolveStatus::Solved) {
    for (const auto& p : h.points) add(p);
  }
  for (const auto& s : sample_set(K, cfg.multistart_count, cfg.sample_radius, cfg.seed)) {
    const NewtonResult nr = newton_inner(m, K, s, 0.0, cfg);
    if (nr.converged && validate_solution(m, K, nr.x, cfg.validate_tol)) add(nr.x);
  }

  out.box_lo = Vector::Zero(n);
  out.box_hi = Vector::Zero(n);
  if (!out.points.empty()) {
    out.box_lo = out.points.front();
    out.box_hi = out.points.front();
    for (const auto& p : out.points) {
      out.box_lo = out.box_lo.cwiseMin(p);
      out.box_hi = out.box_hi.cwiseMax(p);
    }
    out.box_diameter = (out.box_hi - out.box_lo).norm();
  }
  return out;
}

ConeEquationResult solve_cone_equation(const WeaklyHomogeneousMap& m, const Polyhedron& C,
                                       const Vector& q, const SolveConfig& cfg,
                                       const CheckerConfig& checker) {
  require_dim(q.size(), m.dimension(), "solve_cone_equation");
  if (!C.is_cone()) throw PreconditionError("solve_cone_equation: C must be a cone");
  if (!C.contains(q, cfg.validate_tol)) {
    throw PreconditionError("solve_cone_equation: q must lie in C");
  }
  ConeEquationResult out;
  out.z_property = check_z_property(m, C, checker);
  if (out.z_property.violated()) {
    out.status = ConeEquationStatus::Refused;
    out.reason = "map lacks the Z-property on C: " + out.z_property.notes;
    return out;
  }
  const SolveResult sr = solve_homotopy(m.shifted(q), C, cfg);
  if (sr.status != SolveStatus::Solved) {
    out.status = ConeEquationStatus::Failed;
    out.reason = "complementarity solve " + std::string(to_string(sr.status)) + ": " + sr.reason;
    return out;
  }
  out.x = sr.points.front();
  out.residual = (m.eval(out.x) - q).norm();
  if (out.residual <= cfg.validate_tol) {
    out.status = ConeEquationStatus::Solved;
  } else {
    out.status = ConeEquationStatus::Failed;
    out.reason = "complementarity solution does not satisfy f(x) = q";
  }
  return out;
}

}  // namespace whvi
