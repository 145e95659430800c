#include "whvi/convex_geometry.hpp"

#include "whvi/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace whvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Constraint in the form n^T x >= c used internally by the dual method.
struct Row {
  bool equality;
  int index;
};

struct ConstraintView {
  const Polyhedron& P;

  Vector normal(Row r) const {
    return r.equality ? Vector(P.E().row(r.index).transpose())
                      : Vector(-P.A().row(r.index).transpose());
  }
  double rhs(Row r) const { return r.equality ? P.d()[r.index] : -P.b()[r.index]; }
};

int rank_of(const Matrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(M);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

/// Goldfarb-Idnani for min 1/2 ||x - z||^2 s.t. n_i^T x >= c_i (inequalities) and
/// n_j^T x = c_j (equalities). Unit Hessian, so the factorisation is a plain QR of the
/// active normals, recomputed whenever the active set changes.
struct DualActiveSet {
  const Polyhedron& P;
  ConstraintView view{P};
  int n = P.dimension();
  Vector x;
  std::vector<Row> active;
  std::vector<double> u;
  int iterations = 0;

  struct Factor {
    Matrix Q;
    Matrix R;
  };

  Factor factor() const {
    const auto q = static_cast<Eigen::Index>(active.size());
    Factor f;
    if (q == 0) {
      f.Q = Matrix::Identity(n, n);
      f.R = Matrix(0, 0);
      return f;
    }
    Matrix N(n, q);
    for (Eigen::Index k = 0; k < q; ++k) N.col(k) = view.normal(active[static_cast<std::size_t>(k)]);
    Eigen::HouseholderQR<Matrix> qr(N);
    f.Q = qr.householderQ() * Matrix::Identity(n, n);
    f.R = qr.matrixQR().topRows(q).triangularView<Eigen::Upper>();
    return f;
  }

  /// Primal step direction z and dual direction r for adding constraint p.
  void directions(const Vector& np, Vector& zstep, Vector& r) const {
    const Factor f = factor();
    const auto q = static_cast<Eigen::Index>(active.size());
    const Vector dv = f.Q.transpose() * np;
    zstep = f.Q.rightCols(n - q) * dv.tail(n - q);
    if (q > 0) {
      r = f.R.triangularView<Eigen::Upper>().solve(dv.head(q));
    } else {
      r.resize(0);
    }
  }

  double violation_tol(Row p) const {
    return 1e-12 * (1.0 + std::abs(view.rhs(p)) + view.normal(p).norm() * x.norm());
  }

  void add_equalities() {
    for (int j = 0; j < static_cast<int>(P.equality_count()); ++j) {
      const Row p{true, j};
      const Vector np = view.normal(p);
      Vector zstep, r;
      directions(np, zstep, r);
      const double s = np.dot(x) - view.rhs(p);
      const double zz = zstep.squaredNorm();
      if (zz <= 1e-20 * np.squaredNorm()) {
        if (std::abs(s) <= 1e-9 * (1.0 + std::abs(view.rhs(p)) + np.norm() * x.norm())) continue;
        throw InfeasibleError("polyhedron is empty: inconsistent equality row " + std::to_string(j));
      }
      const double t = -s / zstep.dot(np);
      x += t * zstep;
      for (std::size_t k = 0; k < u.size(); ++k) u[k] -= t * r[static_cast<Eigen::Index>(k)];
      active.push_back(p);
      u.push_back(t);
    }
  }

  void run(int max_iterations) {
    add_equalities();
    const int m = static_cast<int>(P.inequality_count());
    for (;;) {
      // Least-index violated inequality.
      int pick = -1;
      for (int i = 0; i < m; ++i) {
        const Row p{false, i};
        if (is_active(p)) continue;
        if (view.normal(p).dot(x) - view.rhs(p) < -violation_tol(p)) {
          pick = i;
          break;
        }
      }
      if (pick < 0) return;
      const Row p{false, pick};
      const Vector np = view.normal(p);
      double up = 0.0;
      for (;;) {
        if (++iterations > max_iterations) {
          throw ProjectionError("projection: active-set iteration limit exceeded");
        }
        Vector zstep, r;
        directions(np, zstep, r);
        // Dual step: largest t keeping active inequality multipliers nonnegative.
        double t1 = kInf;
        int drop = -1;
        for (std::size_t k = 0; k < active.size(); ++k) {
          if (active[k].equality) continue;
          const double rk = r[static_cast<Eigen::Index>(k)];
          if (rk > 1e-14) {
            const double ratio = u[k] / rk;
            if (ratio < t1 || (ratio == t1 && drop >= 0 &&
                               active[k].index < active[static_cast<std::size_t>(drop)].index)) {
              t1 = ratio;
              drop = static_cast<int>(k);
            }
          }
        }
        const double zz = zstep.dot(np);
        const double s = np.dot(x) - view.rhs(p);
        const double t2 = (zstep.squaredNorm() > 1e-20 * np.squaredNorm()) ? -s / zz : kInf;
        if (t1 == kInf && t2 == kInf) {
          throw InfeasibleError("polyhedron is empty: inequality row " + std::to_string(pick) +
                                " cannot be satisfied together with the active rows");
        }
        const double t = std::min(t1, t2);
        if (t2 < kInf) x += t * zstep;
        for (std::size_t k = 0; k < u.size(); ++k) u[k] -= t * r[static_cast<Eigen::Index>(k)];
        up += t;
        if (t2 <= t1) {
          active.push_back(p);
          u.push_back(up);
          break;
        }
        active.erase(active.begin() + drop);
        u.erase(u.begin() + drop);
      }
    }
  }

  bool is_active(Row p) const {
    return std::any_of(active.begin(), active.end(), [&](Row a) {
      return a.equality == p.equality && a.index == p.index;
    });
  }
};

ActiveSet build_active_set(const Polyhedron& P, const Vector& x, double act_tol) {
  ActiveSet as;
  const int n = P.dimension();
  for (int j = 0; j < static_cast<int>(P.equality_count()); ++j) as.equalities.push_back(j);
  for (int i = 0; i < static_cast<int>(P.inequality_count()); ++i) {
    const double slack = P.A().row(i).dot(x) - P.b()[i];
    const double scale = 1.0 + std::abs(P.b()[i]) + P.A().row(i).norm() * x.norm();
    if (std::abs(slack) <= act_tol * scale) as.tight.push_back(i);
  }
  // Greedy least-index independent subset, equalities first.
  Matrix basis(0, n);
  auto try_add = [&](const Eigen::RowVectorXd& row) {
    Matrix next(basis.rows() + 1, n);
    next << basis, row;
    if (rank_of(next) > basis.rows()) {
      basis = std::move(next);
      return true;
    }
    return false;
  };
  for (int j : as.equalities) {
    if (try_add(P.E().row(j))) as.selected_equalities.push_back(j);
  }
  for (int i : as.tight) {
    if (basis.rows() >= n) break;
    if (try_add(P.A().row(i))) as.selected_inequalities.push_back(i);
  }
  return as;
}

std::vector<std::vector<int>> subsets_up_to(int m, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool near_any(const std::vector<Vector>& pts, const Vector& p, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](const Vector& q) { return (q - p).norm() <= tol; });
}

Vector random_in_ball(std::mt19937_64& rng, int n, double radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector g(n);
  for (int i = 0; i < n; ++i) g[i] = gauss(rng);
  const double gn = g.norm();
  if (gn == 0.0) return Vector::Zero(n);
  return g / gn * radius * std::pow(unif(rng), 1.0 / n);
}

}  // namespace

// --- Polyhedron -------------------------------------------------------------------------

Polyhedron::Polyhedron(Matrix A, Vector b, Matrix E, Vector d)
    : n_(static_cast<int>(std::max(A.cols(), E.cols()))),
      A_(std::move(A)),
      b_(std::move(b)),
      E_(std::move(E)),
      d_(std::move(d)) {
  if (A_.rows() == 0) A_.resize(0, n_);
  if (E_.rows() == 0) E_.resize(0, n_);
  if (n_ < 1) throw ConstructionError("polyhedron dimension must be positive");
  if (A_.cols() != n_ || E_.cols() != n_) {
    throw DimensionError("polyhedron: A and E must have the same number of columns");
  }
  if (b_.size() != A_.rows()) throw DimensionError("polyhedron: b must have one entry per row of A");
  if (d_.size() != E_.rows()) throw DimensionError("polyhedron: d must have one entry per row of E");
  if (!A_.allFinite() || !b_.allFinite() || !E_.allFinite() || !d_.allFinite()) {
    throw ConstructionError("polyhedron: non-finite data");
  }
  for (Eigen::Index i = 0; i < A_.rows(); ++i) {
    if (A_.row(i).norm() == 0.0 && b_[i] < 0.0) {
      throw InfeasibleError("polyhedron is empty: row " + std::to_string(i) + " reads 0 <= negative");
    }
  }
  // Feasibility: the projection of the origin exists iff the set is nonempty.
  (void)project(*this, Vector::Zero(n_));
}

Polyhedron Polyhedron::whole_space(int n) {
  return Polyhedron(Matrix(0, n), Vector(0), Matrix(0, n), Vector(0));
}

Polyhedron Polyhedron::nonnegative_orthant(int n) {
  return Polyhedron(-Matrix::Identity(n, n), Vector::Zero(n), Matrix(0, n), Vector(0));
}

Polyhedron Polyhedron::from_inequalities(Matrix A, Vector b) {
  const auto n = A.cols();
  return Polyhedron(std::move(A), std::move(b), Matrix(0, n), Vector(0));
}

bool Polyhedron::is_cone() const {
  return (b_.size() == 0 || b_.isZero(0.0)) && (d_.size() == 0 || d_.isZero(0.0));
}

bool Polyhedron::contains(const Vector& x, double tol) const {
  require_dim(x.size(), n_, "contains");
  if (A_.rows() > 0 && ((A_ * x - b_).array() > tol).any()) return false;
  if (E_.rows() > 0 && (E_ * x - d_).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

bool Polyhedron::operator==(const Polyhedron& o) const {
  return n_ == o.n_ && A_.rows() == o.A_.rows() && E_.rows() == o.E_.rows() && A_ == o.A_ &&
         b_ == o.b_ && E_ == o.E_ && d_ == o.d_;
}

// --- ActiveSet ----------------------------------------------------------------------------

Matrix ActiveSet::selected_normals(const Polyhedron& P) const {
  Matrix N(static_cast<Eigen::Index>(selected_equalities.size() + selected_inequalities.size()),
           P.dimension());
  Eigen::Index r = 0;
  for (int j : selected_equalities) N.row(r++) = P.E().row(j);
  for (int i : selected_inequalities) N.row(r++) = P.A().row(i);
  return N;
}

Matrix ActiveSet::null_space_projector(const Polyhedron& P) const {
  const int n = P.dimension();
  const Matrix N = selected_normals(P);
  if (N.rows() == 0) return Matrix::Identity(n, n);
  const Matrix G = N * N.transpose();
  return Matrix::Identity(n, n) - N.transpose() * G.ldlt().solve(N);
}

// --- projection ---------------------------------------------------------------------------

Projection project(const Polyhedron& P, const Vector& z, double act_tol) {
  require_dim(z.size(), P.dimension(), "project");
  DualActiveSet solver{P, ConstraintView{P}, P.dimension(), z, {}, {}};
  const int limit = 50 * static_cast<int>(P.inequality_count() + P.equality_count() + P.dimension()) + 50;
  solver.run(limit);

  Projection out;
  out.point = solver.x;
  out.iterations = solver.iterations;
  out.inequality_multipliers = Vector::Zero(P.inequality_count());
  out.equality_multipliers = Vector::Zero(P.equality_count());
  for (std::size_t k = 0; k < solver.active.size(); ++k) {
    const Row r = solver.active[k];
    if (r.equality) {
      out.equality_multipliers[r.index] = -solver.u[k];
    } else {
      out.inequality_multipliers[r.index] = solver.u[k];
    }
  }
  out.active = build_active_set(P, out.point, act_tol);
  return out;
}

double projection_kkt_residual(const Polyhedron& P, const Vector& z, const Projection& proj) {
  const Vector& x = proj.point;
  Vector stat = x - z;
  if (P.inequality_count() > 0) stat += P.A().transpose() * proj.inequality_multipliers;
  if (P.equality_count() > 0) stat += P.E().transpose() * proj.equality_multipliers;
  double r = stat.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < P.inequality_count(); ++i) {
    const double slack = P.A().row(i).dot(x) - P.b()[i];
    const double lam = proj.inequality_multipliers[i];
    r = std::max({r, slack, -lam, std::abs(lam * slack)});
  }
  if (P.equality_count() > 0) r = std::max(r, (P.E() * x - P.d()).cwiseAbs().maxCoeff());
  return r;
}

// --- derived sets -------------------------------------------------------------------------

Polyhedron recession_cone(const Polyhedron& P) {
  return Polyhedron(P.A(), Vector::Zero(P.inequality_count()), P.E(),
                    Vector::Zero(P.equality_count()));
}

Polyhedron intersect_box(const Polyhedron& P, double radius) {
  const int n = P.dimension();
  Matrix A(P.inequality_count() + 2 * n, n);
  Vector b(P.inequality_count() + 2 * n);
  A << P.A(), Matrix::Identity(n, n), -Matrix::Identity(n, n);
  b << P.b(), Vector::Constant(2 * n, radius);
  return Polyhedron(std::move(A), std::move(b), P.E(), P.d());
}

bool dual_cone_membership(const Polyhedron& C, const Vector& y, double tol) {
  require_dim(y.size(), C.dimension(), "dual_cone_membership");
  if (!C.is_cone()) throw PreconditionError("dual_cone_membership: set is not a cone");
  const int n = C.dimension();
  const auto m = C.inequality_count();
  const auto p = C.equality_count();
  if (m + p == 0) return y.norm() <= tol;  // C = R^n, C* = {0}
  Matrix M(n, m + 2 * p);
  M << C.A().transpose(), C.E().transpose(), -C.E().transpose();
  const NnlsResult res = nnls(M, -y);
  if (!res.converged) {
    throw InconclusiveError("dual_cone_membership: NNLS did not converge");
  }
  return res.residual_norm <= tol;
}

std::vector<Vector> vertices(const Polyhedron& P, double radius) {
  const int n = P.dimension();
  if (n > 3) throw PreconditionError("vertices: only supported for dimension <= 3");
  std::vector<Vector> out;
  const int m = static_cast<int>(P.inequality_count());
  for (const auto& S : subsets_up_to(m, n)) {
    const auto rows = P.equality_count() + static_cast<Eigen::Index>(S.size());
    if (rows < n) continue;
    Matrix M(rows, n);
    Vector rhs(rows);
    M.topRows(P.equality_count()) = P.E();
    rhs.head(P.equality_count()) = P.d();
    for (std::size_t k = 0; k < S.size(); ++k) {
      M.row(P.equality_count() + static_cast<Eigen::Index>(k)) = P.A().row(S[k]);
      rhs[P.equality_count() + static_cast<Eigen::Index>(k)] = P.b()[S[k]];
    }
    if (rank_of(M) < n) continue;
    const Vector v = M.colPivHouseholderQr().solve(rhs);
    if ((M * v - rhs).norm() > 1e-9 * (1.0 + rhs.norm())) continue;
    if (!P.contains(v, 1e-9) || v.norm() > radius) continue;
    if (!near_any(out, v, 1e-9)) out.push_back(v);
  }
  return out;
}

std::vector<Vector> cone_directions(const Polyhedron& C, int count, std::uint64_t seed) {
  const int n = C.dimension();
  const Polyhedron cone = C.is_cone() ? C : recession_cone(C);
  std::vector<Vector> out;
  if (n <= 3) {
    const int m = static_cast<int>(cone.inequality_count());
    for (const auto& S : subsets_up_to(m, n - 1)) {
      Matrix M(cone.equality_count() + static_cast<Eigen::Index>(S.size()), n);
      M.topRows(cone.equality_count()) = cone.E();
      for (std::size_t k = 0; k < S.size(); ++k) {
        M.row(cone.equality_count() + static_cast<Eigen::Index>(k)) = cone.A().row(S[k]);
      }
      Eigen::JacobiSVD<Matrix> svd(M.rows() > 0 ? M : Matrix::Zero(1, n), Eigen::ComputeFullV);
      int rank = 0;
      const auto& sv = svd.singularValues();
      for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[k] > 1e-10 * std::max(1.0, sv[0])) ++rank;
      }
      if (rank != n - 1) continue;
      const Vector v = svd.matrixV().col(n - 1).normalized();
      for (double sgn : {1.0, -1.0}) {
        const Vector dir = sgn * v;
        if (cone.contains(dir, 1e-10) && !near_any(out, dir, 1e-9)) out.push_back(dir);
      }
    }
  }
  // Random points project onto faces often, so draw until `count` new directions appear.
  std::mt19937_64 rng(seed);
  int added = 0;
  for (int attempt = 0; attempt < 8 * count && added < count; ++attempt) {
    const Vector z = random_in_ball(rng, n, 1.0);
    const Vector p = project(cone, z).point;
    const double pn = p.norm();
    if (pn <= 1e-9 * std::max(1.0, z.norm())) continue;
    const Vector dir = p / pn;
    if (!near_any(out, dir, 1e-9)) {
      out.push_back(dir);
      ++added;
    }
  }
  return out;
}

bool is_bounded(const Polyhedron& P) { return cone_directions(recession_cone(P), 64, 7).empty(); }

std::vector<Vector> sample_set(const Polyhedron& P, int count, double radius, std::uint64_t seed) {
  if (count < 1) throw PreconditionError("sample_set: count must be positive");
  if (!(radius > 0.0)) throw PreconditionError("sample_set: radius must be positive");
  const int n = P.dimension();
  std::vector<Vector> out;
  auto push = [&](const Vector& v) {
    if (!near_any(out, v, 1e-12)) out.push_back(v);
  };
  push(project(P, Vector::Zero(n)).point);
  if (n <= 3) {
    for (const auto& v : vertices(P, radius)) push(v);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Vector> projected;
  for (int k = 0; k < count; ++k) {
    if (k % 2 == 0 || projected.size() < 2) {
      const Vector p = project(P, random_in_ball(rng, n, radius)).point;
      projected.push_back(p);
      push(p);
    } else {
      // Convex combination of two earlier samples reaches the interior.
      std::uniform_int_distribution<std::size_t> pick(0, projected.size() - 1);
      const Vector& a = projected[pick(rng)];
      const Vector& b = projected[pick(rng)];
      const double lam = unif(rng);
      push(lam * a + (1.0 - lam) * b);
    }
  }
  return out;
}

AffineParametrization affine_hull_orthonormal(const Polyhedron& P) {
  const int n = P.dimension();
  if (P.equality_count() == 0) return {Vector::Zero(n), Matrix::Identity(n, n)};
  Eigen::JacobiSVD<Matrix> svd(P.E(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(1e-10);
  const auto rank = svd.rank();
  AffineParametrization out;
  out.offset = svd.solve(P.d());
  out.basis = svd.matrixV().rightCols(n - rank);
  return out;
}

AffineParametrization affine_hull_free_variables(const Polyhedron& P) {
  const int n = P.dimension();
  if (P.equality_count() == 0) return {Vector::Zero(n), Matrix::Identity(n, n)};
  Matrix M(P.equality_count(), n + 1);
  M << P.E(), P.d();
  std::vector<int> pivot_cols;
  Eigen::Index row = 0;
  for (int col = 0; col < n && row < M.rows(); ++col) {
    Eigen::Index best;
    const double mag = M.col(col).tail(M.rows() - row).cwiseAbs().maxCoeff(&best);
    if (mag <= 1e-12) continue;
    M.row(row).swap(M.row(row + best));
    M.row(row) /= M(row, col);
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      if (r != row && M(r, col) != 0.0) M.row(r) -= M(r, col) * M.row(row);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
  }
  AffineParametrization out;
  out.offset = Vector::Zero(n);
  out.basis = Matrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    out.offset[pivot_cols[r]] = M(static_cast<Eigen::Index>(r), n);
  }
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    out.basis(free_cols[k], kk) = 1.0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      out.basis(pivot_cols[r], kk) = -M(static_cast<Eigen::Index>(r), free_cols[k]);
    }
  }
  return out;
}

}  // namespace whvi
