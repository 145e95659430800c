#include "whvi/condition_checkers.hpp"

#include "whvi/oracle.hpp"
#include "whvi/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace whvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string point(const Vector& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

Verdict make(VerdictStatus s, std::string notes) {
  Verdict v;
  v.status = s;
  v.notes = std::move(notes);
  return v;
}

void require_cone(const Polyhedron& C, const char* what) {
  if (!C.is_cone()) throw PreconditionError(std::string(what) + ": the set must be a cone");
}

std::vector<Vector> recession_directions(const Polyhedron& K, const CheckerConfig& cfg) {
  return cone_directions(recession_cone(K), cfg.direction_count, cfg.seed);
}

std::size_t upper_half_start(const std::vector<double>& radii) { return radii.size() / 2; }

// Ray origins: Pi_K(0) followed by up to `shifted_rays` further points of K.
std::vector<Vector> ray_origins(const Polyhedron& K, const CheckerConfig& cfg) {
  const Vector x0 = project(K, Vector::Zero(K.dimension())).point;
  std::vector<Vector> out{x0};
  if (cfg.shifted_rays <= 0) return out;
  for (const auto& p : sample_set(K, 2 * cfg.shifted_rays + 1, cfg.sample_radius, cfg.seed + 2)) {
    if (static_cast<int>(out.size()) > cfg.shifted_rays) break;
    if ((p - x0).norm() > 1e-9) out.push_back(p);
  }
  return out;
}

double copositivity_value(const WeaklyHomogeneousMap& psi, const Vector& f0, const Vector& x) {
  return (psi.eval(x) - f0).dot(x);
}

// Closed-form certificate for polynomial maps: g restricted to the affine hull is either
// identically zero or a sum of monomials that are nonnegative under sign information read
// off single-variable constraints.
std::optional<std::string> copositivity_certificate(const WeaklyHomogeneousMap& psi,
                                                    const Polyhedron& D) {
  if (psi.has_radicals()) return std::nullopt;
  const int n = psi.dimension();
  Polynomial g(n);
  for (int i = 0; i < n; ++i) {
    MonomialList comp = psi.leading()[static_cast<std::size_t>(i)];
    if (!psi.remainder_poly().empty()) {
      const auto& r = psi.remainder_poly()[static_cast<std::size_t>(i)];
      comp.insert(comp.end(), r.begin(), r.end());
    }
    MonomialList nonconstant;
    for (const auto& mono : comp) {
      if (mono.total_degree() > 0) nonconstant.push_back(mono);
    }
    g += Polynomial::from_monomials(n, nonconstant) * Polynomial::variable(n, i);
  }
  const AffineParametrization h = affine_hull_free_variables(D);
  Polynomial gu = g.substitute(h.offset, h.basis);
  gu.prune(1e-12 * std::max(1.0, g.max_abs_coefficient()));
  if (gu.is_zero()) return std::string("g vanishes identically on the affine hull of the set");

  const int k = gu.variables();
  // +1: u_j >= 0 on the set, -1: u_j <= 0, 0: unknown.
  std::vector<int> sign(static_cast<std::size_t>(k), 0);
  const Matrix Au = D.A() * h.basis;
  const Vector bu = D.b() - D.A() * h.offset;
  for (Eigen::Index r = 0; r < Au.rows(); ++r) {
    const double scale = std::max(1.0, Au.row(r).cwiseAbs().maxCoeff());
    int nonzero = 0;
    int col = -1;
    for (int j = 0; j < k; ++j) {
      if (std::abs(Au(r, j)) > 1e-12 * scale) {
        ++nonzero;
        col = j;
      }
    }
    if (nonzero != 1 || bu[r] > 1e-12 * scale) continue;
    // c u_col <= b with b <= 0.
    const int s = Au(r, col) < 0.0 ? 1 : -1;
    int& cur = sign[static_cast<std::size_t>(col)];
    cur = (cur == 0 || cur == s) ? s : 2;  // 2: both signs, u_col = 0
  }
  for (const auto& [e, c] : gu.terms()) {
    int s = c > 0.0 ? 1 : -1;
    for (int j = 0; j < k; ++j) {
      if (e[static_cast<std::size_t>(j)] % 2 == 0) continue;
      const int sj = sign[static_cast<std::size_t>(j)];
      if (sj == 0) return std::nullopt;
      if (sj == 2) {
        s = 1;
        break;
      }
      s *= sj;
    }
    if (s < 0) return std::nullopt;
  }
  return std::string("g restricted to the set is a sum of nonnegative monomials");
}

struct Descent {
  Vector x;
  double value;
};

Descent projected_descent(const WeaklyHomogeneousMap& psi, const Vector& f0, const Polyhedron& Db,
                          Vector x, int max_iter) {
  double g = copositivity_value(psi, f0, x);
  for (int it = 0; it < max_iter; ++it) {
    const Vector grad = (psi.eval(x) - f0) + psi.jacobian(x, 1e-7).transpose() * x;
    bool moved = false;
    double alpha = 1.0;
    for (int k = 0; k < 40; ++k, alpha *= 0.5) {
      const Vector y = project(Db, x - alpha * grad).point;
      const double gy = copositivity_value(psi, f0, y);
      if (gy < g - 1e-4 * grad.dot(x - y) && (y - x).norm() > 0.0) {
        x = y;
        g = gy;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return {x, g};
}

}  // namespace

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsCertified:
      return "HOLDS_CERTIFIED";
    case VerdictStatus::HoldsSampled:
      return "HOLDS_SAMPLED";
    case VerdictStatus::Violated:
      return "VIOLATED";
    case VerdictStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

Verdict conjunction(const std::vector<Verdict>& parts) {
  for (const auto& p : parts) {
    if (p.violated()) return p;
  }
  for (const auto& p : parts) {
    if (p.status == VerdictStatus::Inconclusive) return p;
  }
  Verdict out;
  out.status = VerdictStatus::HoldsCertified;
  std::string notes;
  for (const auto& p : parts) {
    if (p.status == VerdictStatus::HoldsSampled) out.status = VerdictStatus::HoldsSampled;
    if (!p.notes.empty()) notes += (notes.empty() ? "" : "; ") + p.notes;
  }
  out.notes = notes;
  return out;
}

void validate(const CheckerConfig& cfg) {
  if (cfg.ray_radii.size() < 2) throw PreconditionError("ray_radii needs at least two radii");
  for (std::size_t k = 0; k < cfg.ray_radii.size(); ++k) {
    if (!(cfg.ray_radii[k] > 0.0) || (k > 0 && !(cfg.ray_radii[k] > cfg.ray_radii[k - 1]))) {
      throw PreconditionError("ray_radii must be positive and strictly increasing");
    }
  }
  if (cfg.direction_count <= 0 || cfg.sample_count <= 0 || cfg.descent_starts < 0 ||
      cfg.descent_max_iter < 0 || cfg.shifted_rays < 0) {
    throw PreconditionError("checker counts must be positive");
  }
  if (!(cfg.tol > 0.0) || !(cfg.align_tol > 0.0) || !(cfg.sample_radius > 0.0) ||
      !(cfg.oracle_pitch > 0.0) || !(cfg.oracle_radius > 0.0)) {
    throw PreconditionError("checker tolerances and radii must be positive");
  }
}

Verdict check_copositivity(const WeaklyHomogeneousMap& psi, const Polyhedron& D,
                           const CheckerConfig& cfg) {
  require_dim(D.dimension(), psi.dimension(), "check_copositivity");
  validate(cfg);
  if (auto cert = copositivity_certificate(psi, D)) return make(VerdictStatus::HoldsCertified, *cert);

  const Vector f0 = psi.eval(Vector::Zero(psi.dimension()));
  Verdict v;
  Probe worst{Vector(), kInf};
  auto consider = [&](const Vector& x, double g) {
    if (g < worst.value) worst = {x, g};
  };
  for (const auto& x : sample_set(D, cfg.sample_count, cfg.sample_radius, cfg.seed)) {
    const double g = copositivity_value(psi, f0, x);
    v.trace.push_back({x, g});
    consider(x, g);
  }
  if (worst.value >= -cfg.tol && cfg.descent_starts > 0) {
    const Polyhedron Db = intersect_box(D, cfg.sample_radius);
    const auto starts = sample_set(Db, cfg.descent_starts, cfg.sample_radius, cfg.seed + 1);
    for (std::size_t s = 0; s < starts.size() && static_cast<int>(s) < cfg.descent_starts; ++s) {
      const Descent d = projected_descent(psi, f0, Db, starts[s], cfg.descent_max_iter);
      v.trace.push_back({d.x, d.value});
      consider(d.x, d.value);
      if (worst.value < -cfg.tol) break;
    }
  }
  if (worst.value < -cfg.tol) {
    v.status = VerdictStatus::Violated;
    v.witness = worst.point;
    v.notes = "<psi(x) - psi(0), x> = " + num(worst.value) + " at " + point(worst.point);
  } else {
    v.status = VerdictStatus::HoldsSampled;
    v.notes = "sampled minimum of <psi(x) - psi(0), x> is " + num(worst.value) +
              " (sampling only; not a certificate)";
  }
  return v;
}

Verdict check_ray_alignment(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const CheckerConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "check_ray_alignment");
  validate(cfg);
  const auto dirs = recession_directions(K, cfg);
  if (dirs.empty()) {
    return make(VerdictStatus::HoldsCertified, "K is bounded, so no x in K has ||x|| -> inf");
  }
  const Vector x0 = project(K, Vector::Zero(K.dimension())).point;
  const std::size_t hi = upper_half_start(cfg.ray_radii);
  int zero_rays = 0;
  int sign_only = 0;
  Verdict v;
  for (const auto& d : dirs) {
    bool persistent = true;
    bool literal = true;
    bool zero = false;
    std::vector<Probe> probes;
    for (std::size_t k = 0; k < cfg.ray_radii.size(); ++k) {
      const Vector x = x0 + cfg.ray_radii[k] * d;
      const Vector r = m.eval_remainder(x);
      const double rn = r.norm();
      double cosine = -1.0;
      if (rn == 0.0) {
        zero = true;
      } else {
        cosine = (-x).dot(r) / (x.norm() * rn);
      }
      probes.push_back({x, cosine});
      if (k < hi) continue;
      const bool aligned = rn > 0.0 && cosine > 1.0 - cfg.align_tol;
      literal = literal && aligned;
      persistent = persistent && aligned && K.contains(-x, cfg.tol * (1.0 + x.norm()));
    }
    if (zero) ++zero_rays;
    if (literal && !persistent) ++sign_only;
    if (persistent) {
      v.status = VerdictStatus::Violated;
      v.witness = probes.back().point;
      v.trace = std::move(probes);
      v.notes = "-x is a positive multiple of f(x) - f_inf(x) (cosine " + num(v.trace.back().value) +
                ") along the ray through " + point(d) + " with -x in K";
      return v;
    }
    if (v.trace.empty()) v.trace = std::move(probes);
  }
  v.status = VerdictStatus::HoldsSampled;
  v.notes = "no persistent alignment on " + std::to_string(dirs.size()) + " rays";
  if (zero_rays > 0) {
    v.notes += "; remainder vanished on " + std::to_string(zero_rays) + " rays (no c > 0 exists there)";
  }
  if (sign_only > 0) {
    v.notes += "; " + std::to_string(sign_only) +
               " rays align in direction only, with -x outside K";
  }
  v.notes += "; probed along straight rays only";
  return v;
}

Verdict check_natmap_growth(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const CheckerConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "check_natmap_growth");
  validate(cfg);
  const auto dirs = recession_directions(K, cfg);
  if (dirs.empty()) {
    return make(VerdictStatus::HoldsCertified, "K is bounded, so the growth condition is vacuous");
  }
  const std::size_t hi = upper_half_start(cfg.ray_radii);
  const auto& R = cfg.ray_radii;
  Verdict v;
  for (const auto& x0 : ray_origins(K, cfg)) {
    for (const auto& d : dirs) {
      std::vector<Probe> probes;
      for (double r : R) {
        const Vector x = x0 + r * d;
        probes.push_back({x, natural_residual(m, K, x).norm()});
      }
      const double base = probes[hi].value;
      bool ok = base > 0.0;
      for (std::size_t k = hi + 1; k < R.size() && ok; ++k) {
        const double threshold = base * std::pow(R[k] / R[hi], cfg.growth_exponent);
        ok = probes[k].value >= probes[k - 1].value && probes[k].value >= threshold;
      }
      if (!ok) {
        v.status = VerdictStatus::Violated;
        v.witness = probes.back().point;
        v.trace = std::move(probes);
        v.notes = "||F_nat|| does not grow along the ray " + point(x0) + " + R " + point(d) +
                  " (value " + num(v.trace.back().value) + " at R = " + num(R.back()) + ")";
        return v;
      }
      if (v.trace.empty()) v.trace = std::move(probes);
    }
  }
  v.status = VerdictStatus::HoldsSampled;
  v.notes = "||F_nat|| grows at least like R^" + num(cfg.growth_exponent) + " on every probed ray";
  return v;
}

Verdict check_remainder_dominated(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                  const CheckerConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "check_remainder_dominated");
  validate(cfg);
  const auto dirs = recession_directions(K, cfg);
  if (dirs.empty()) {
    return make(VerdictStatus::HoldsCertified, "K is bounded, so the domination condition is vacuous");
  }
  const std::size_t hi = upper_half_start(cfg.ray_radii);
  Verdict v;
  Probe worst{Vector(), 0.0};
  for (const auto& x0 : ray_origins(K, cfg)) {
    for (const auto& d : dirs) {
      for (std::size_t k = hi; k < cfg.ray_radii.size(); ++k) {
        const Vector x = x0 + cfg.ray_radii[k] * d;
        const double rn = m.eval_remainder(x).norm();
        const double fn = natural_residual(m, K, x).norm();
        const double ratio = fn > 0.0 ? rn / fn : (rn > 0.0 ? kInf : 0.0);
        if (ratio > worst.value || worst.point.size() == 0) worst = {x, ratio};
        if (v.trace.size() < 64) v.trace.push_back({x, ratio});
      }
    }
  }
  if (worst.value > 1.0 + cfg.tol) {
    v.status = VerdictStatus::Violated;
    v.witness = worst.point;
    v.notes = "||f - f_inf|| / ||F_nat|| = " + num(worst.value) + " at " + point(worst.point);
  } else {
    v.status = VerdictStatus::HoldsSampled;
    v.notes = "largest ratio ||f - f_inf|| / ||F_nat|| is " + num(worst.value);
  }
  return v;
}

Verdict check_natmap_coercivity(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const CheckerConfig& cfg) {
  return conjunction({check_natmap_growth(m, K, cfg), check_remainder_dominated(m, K, cfg)});
}

Verdict check_recession_sol_zero(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                 const SolveConfig& solver, const CheckerConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "check_recession_sol_zero");
  validate(cfg);
  const Polyhedron C = recession_cone(K);
  const WeaklyHomogeneousMap h = m.leading_part();
  if (cone_directions(C, cfg.direction_count, cfg.seed).empty()) {
    return make(VerdictStatus::HoldsCertified, "K_inf = {0}");
  }
  std::vector<Vector> candidates = enumerate_solutions(h, C, solver).points;
  const std::size_t sampled = candidates.size();
  if (C.dimension() <= 3) {
    const auto orc = oracle_vi_solutions(h, C, {cfg.oracle_pitch, cfg.oracle_radius});
    for (const auto* set : {&orc.representatives, &orc.boundary_representatives}) {
      for (const auto& p : *set) {
        candidates.push_back(p);
        const NewtonResult nr = newton_inner(h, C, p, 0.0, solver);
        if (nr.converged) candidates.push_back(nr.x);
      }
    }
  }
  Verdict v;
  for (const auto& x : candidates) {
    const double nx = x.norm();
    if (nx <= 1e-4) continue;
    // Solutions of a homogeneous problem on a cone form a cone, so rescale to the sphere.
    const Vector u = x / nx;
    if (validate_solution(h, C, u, solver.validate_tol)) {
      v.status = VerdictStatus::Violated;
      v.witness = u;
      v.trace.push_back({u, natural_residual(h, C, u).norm()});
      v.notes = "nonzero solution " + point(u) + " of the recession problem";
      return v;
    }
  }
  v.status = VerdictStatus::HoldsSampled;
  v.notes = "only the origin found (" + std::to_string(sampled) + " multistart solutions" +
            (C.dimension() <= 3 ? std::string(", grid oracle") : std::string()) + ")";
  return v;
}

Verdict check_recession_branch(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                               const SolveConfig& solver, const CheckerConfig& cfg) {
  return conjunction({check_copositivity(m.leading_part(), recession_cone(K), cfg),
                      check_recession_sol_zero(m, K, solver, cfg)});
}

Verdict check_q_copositive_coercive(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                    const CheckerConfig& cfg) {
  require_cone(K, "check_q_copositive_coercive");
  return conjunction({check_copositivity(m, K, cfg), check_natmap_growth(m, K, cfg)});
}

Verdict check_coercivity_vi(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const Vector& xref, const CheckerConfig& cfg) {
  require_dim(K.dimension(), m.dimension(), "check_coercivity_vi");
  require_dim(xref.size(), m.dimension(), "check_coercivity_vi: xref");
  validate(cfg);
  if (!K.contains(xref, 1e-8)) throw PreconditionError("check_coercivity_vi: xref must lie in K");
  const auto dirs = recession_directions(K, cfg);
  if (dirs.empty()) {
    return make(VerdictStatus::HoldsCertified, "K is bounded, so coercivity is vacuous");
  }
  const Vector x0 = project(K, Vector::Zero(K.dimension())).point;
  const auto& R = cfg.ray_radii;
  const std::size_t hi = upper_half_start(R);
  Verdict v;
  bool all_positive = true;
  double xi = kInf;
  std::vector<std::vector<Probe>> rays;
  for (const auto& d : dirs) {
    std::vector<Probe> probes;
    for (double r : R) {
      const Vector x = x0 + r * d;
      probes.push_back({x, m.eval(x).dot(x - xref)});
    }
    bool decreasing = probes.back().value < -cfg.tol;
    for (std::size_t k = hi + 1; k < R.size() && decreasing; ++k) {
      decreasing = probes[k].value < probes[k - 1].value;
    }
    if (decreasing) {
      v.status = VerdictStatus::Violated;
      v.witness = probes.back().point;
      v.notes = "<f(x), x - xref> = " + num(probes.back().value) + " and decreasing along the ray " +
                point(x0) + " + R " + point(d);
      v.trace = std::move(probes);
      return v;
    }
    // Least-squares slope of log q against log ||x|| over the upper half.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t k = hi; k < R.size(); ++k) {
      if (!(probes[k].value > 0.0)) {
        all_positive = false;
        break;
      }
      const double lx = std::log(probes[k].point.norm());
      const double ly = std::log(probes[k].value);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++cnt;
    }
    if (all_positive && cnt >= 2) {
      const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
      xi = std::min(xi, slope);
    }
    rays.push_back(std::move(probes));
  }
  if (v.trace.empty() && !rays.empty()) v.trace = rays.front();
  if (!all_positive || !std::isfinite(xi)) {
    v.status = VerdictStatus::Inconclusive;
    v.notes = "<f(x), x - xref> neither positive nor decreasing to -inf on every ray";
    return v;
  }
  xi = std::max(0.0, xi);
  double c = kInf;
  for (const auto& probes : rays) {
    for (std::size_t k = hi; k < R.size(); ++k) {
      c = std::min(c, probes[k].value / std::pow(probes[k].point.norm(), xi));
    }
  }
  if (c > 0.0) {
    v.status = VerdictStatus::HoldsSampled;
    v.notes = "<f(x), x - xref> >= c ||x||^xi with fitted xi = " + num(xi) + ", c = " + num(c);
  } else {
    v.status = VerdictStatus::Inconclusive;
    v.notes = "growth fit did not give a positive constant";
  }
  return v;
}

Verdict check_z_property(const WeaklyHomogeneousMap& m, const Polyhedron& C,
                         const CheckerConfig& cfg) {
  require_dim(C.dimension(), m.dimension(), "check_z_property");
  require_cone(C, "check_z_property");
  validate(cfg);
  const int n = C.dimension();
  const int rows = static_cast<int>(C.inequality_count());
  const int eqs = static_cast<int>(C.equality_count());
  if (rows + eqs == 0) return make(VerdictStatus::HoldsCertified, "C is the whole space, C* = {0}");

  // Faces of C: subsets S of inequality rows turned into equalities.
  std::vector<std::vector<int>> faces{{}};
  const int max_size = n <= 3 ? n : 2;
  for (int size = 1; size <= std::min(max_size, rows); ++size) {
    std::vector<int> S(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) S[static_cast<std::size_t>(i)] = i;
    for (;;) {
      faces.push_back(S);
      int i = size - 1;
      while (i >= 0 && S[static_cast<std::size_t>(i)] == rows - size + i) --i;
      if (i < 0) break;
      ++S[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) S[static_cast<std::size_t>(j)] = S[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  Verdict v;
  Probe worst{Vector(), -kInf};
  Vector worst_y;
  std::size_t probes = 0;
  for (const auto& S : faces) {
    Matrix E(eqs + static_cast<Eigen::Index>(S.size()), n);
    E.topRows(eqs) = C.E();
    for (std::size_t k = 0; k < S.size(); ++k) E.row(eqs + static_cast<Eigen::Index>(k)) = C.A().row(S[k]);
    const Polyhedron face(C.A(), Vector::Zero(rows), E, Vector::Zero(E.rows()));
    std::vector<Vector> xs = cone_directions(face, 4, cfg.seed);
    for (auto& p : sample_set(face, 8, cfg.sample_radius, cfg.seed + 3)) xs.push_back(std::move(p));
    for (const auto& x : xs) {
      const Vector fx = m.eval(x);
      auto test = [&](const Vector& y) {
        const double val = fx.dot(y);
        ++probes;
        if (val > worst.value) {
          worst = {x, val};
          worst_y = y;
        }
      };
      for (int i = 0; i < rows; ++i) {
        const double ax = C.A().row(i).dot(x);
        if (std::abs(ax) <= 1e-12 * (1.0 + C.A().row(i).norm() * x.norm())) test(-C.A().row(i).transpose());
      }
      for (int j = 0; j < eqs; ++j) {
        test(C.E().row(j).transpose());
        test(-C.E().row(j).transpose());
      }
    }
  }
  if (worst.point.size() > 0) v.trace.push_back(worst);
  if (worst.value > cfg.tol) {
    v.status = VerdictStatus::Violated;
    v.witness = worst.point;
    v.witness_dual = worst_y;
    v.notes = "<f(x), y> = " + num(worst.value) + " for the complementary pair x = " +
              point(worst.point) + ", y = " + point(worst_y);
  } else {
    v.status = VerdictStatus::HoldsSampled;
    v.notes = "largest <f(x), y> over " + std::to_string(probes) + " complementary pairs is " +
              num(worst.value);
  }
  return v;
}

const ReportRow* TheoremReport::find(std::string_view result) const {
  for (const auto& r : rows) {
    if (r.result == result) return &r;
  }
  return nullptr;
}

TheoremReport theorem_report(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                             const std::optional<Vector>& xref, const CheckerConfig& cfg,
                             const SolveConfig& solver) {
  require_dim(K.dimension(), m.dimension(), "theorem_report");
  validate(cfg);
  const int n = m.dimension();
  const WeaklyHomogeneousMap lead = m.leading_part();
  const Verdict growth = check_natmap_growth(m, K, cfg);
  TheoremReport rep;

  {
    ReportRow row;
    row.result = kNatmapExistence;
    row.description =
        "0 in K, f_inf copositive on K, no ray with -x = c (f - f_inf), norm-coercive natural map "
        "dominating the remainder";
    Verdict zero;
    if (K.contains(Vector::Zero(n), cfg.tol)) {
      zero = make(VerdictStatus::HoldsCertified, "0 lies in K");
    } else {
      zero = make(VerdictStatus::Violated, "0 is not in K");
      zero.witness = Vector::Zero(n);
    }
    row.cells.push_back({"0 in K", zero});
    row.cells.push_back({"f_inf copositive on K", check_copositivity(lead, K, cfg)});
    row.cells.push_back({"no c > 0 with -x = c (f(x) - f_inf(x))", check_ray_alignment(m, K, cfg)});
    row.cells.push_back({"||F_nat(x)|| -> inf", growth});
    row.cells.push_back({"||f - f_inf|| <= ||F_nat||", check_remainder_dominated(m, K, cfg)});
    std::vector<Verdict> parts;
    for (const auto& c : row.cells) parts.push_back(c.verdict);
    row.overall = conjunction(parts);
    rep.rows.push_back(std::move(row));
  }
  {
    ReportRow row;
    row.result = kQCopositive;
    row.description = "K a cone, <x, f(x) - f(0)> >= 0 on K, norm-coercive natural map";
    if (!K.is_cone()) {
      row.applicable = false;
      row.reason = "K is not a cone";
      row.overall = make(VerdictStatus::Inconclusive, "not applicable: K is not a cone");
    } else {
      row.cells.push_back({"<x, f(x) - f(0)> >= 0 on K", check_copositivity(m, K, cfg)});
      row.cells.push_back({"||F_nat(x)|| -> inf", growth});
      row.overall = conjunction({row.cells[0].verdict, row.cells[1].verdict});
    }
    rep.rows.push_back(std::move(row));
  }
  {
    ReportRow row;
    row.result = kRecessionBranch;
    row.description =
        "SOL(f_inf, K_inf) = {0} with f_inf copositive on K_inf (sufficient route; the index "
        "condition is not decided in general)";
    const Polyhedron Kinf = recession_cone(K);
    row.cells.push_back({"f_inf copositive on K_inf", check_copositivity(lead, Kinf, cfg)});
    row.cells.push_back({"SOL(f_inf, K_inf) = {0}", check_recession_sol_zero(m, K, solver, cfg)});
    row.overall = conjunction({row.cells[0].verdict, row.cells[1].verdict});
    rep.rows.push_back(std::move(row));
  }
  {
    ReportRow row;
    row.result = kCoerciveVi;
    row.description = "<f(x), x - xref> >= c ||x||^xi on K for large ||x||";
    const Vector ref = xref ? *xref : project(K, Vector::Zero(n)).point;
    Verdict cv = check_coercivity_vi(m, K, ref, cfg);
    cv.notes = "xref = " + point(ref) + "; " + cv.notes;
    row.cells.push_back({"<f(x), x - xref> coercive", cv});
    row.overall = row.cells[0].verdict;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace whvi
