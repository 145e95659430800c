#include "whvi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace whvi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_small(const Polyhedron& P, const char* what) {
  if (P.dimension() > 3) {
    throw PreconditionError(std::string(what) + ": the grid oracle supports dimension <= 3");
  }
}

void require_pitch(double pitch) {
  if (!(pitch > 0.0)) throw PreconditionError("oracle pitch must be positive");
}

// Integer range [lo, hi] of lattice indices with pitch * i in [a, b], padded slightly so
// points on a face are kept.
std::pair<long, long> lattice_range(double a, double b, double pitch) {
  const double pad = 1e-9;
  return {static_cast<long>(std::ceil(a / pitch - pad)),
          static_cast<long>(std::floor(b / pitch + pad))};
}

struct GridWalker {
  const Polyhedron& P;
  const AffineParametrization& h;
  double pitch;
  const Vector& center;
  double radius;
  // With nearest_only, each column contributes only its lattice point closest to the center.
  bool nearest_only;
  std::function<void(const std::vector<long>&, const Vector&)> visit;

  int k() const { return static_cast<int>(h.basis.cols()); }

  void walk(std::vector<long>& idx, double used2) {
    const int j = static_cast<int>(idx.size());
    const double rem2 = radius * radius - used2;
    if (rem2 < 0.0) return;
    const double rem = std::sqrt(rem2);
    double lo = center[j] - rem;
    double hi = center[j] + rem;
    if (j + 1 < k()) {
      const auto [a, b] = lattice_range(lo, hi, pitch);
      for (long i = a; i <= b; ++i) {
        const double du = pitch * static_cast<double>(i) - center[j];
        idx.push_back(i);
        walk(idx, used2 + du * du);
        idx.pop_back();
      }
      return;
    }
    // Last coordinate: intersect the column with the inequalities analytically.
    Vector base = h.offset;
    for (int i = 0; i < j; ++i) base += h.basis.col(i) * (pitch * static_cast<double>(idx[i]));
    const Vector dir = h.basis.col(j);
    for (Eigen::Index r = 0; r < P.inequality_count(); ++r) {
      const double a = P.A().row(r).dot(dir);
      const double c = P.b()[r] - P.A().row(r).dot(base);
      const double slack = 1e-12 * (1.0 + std::abs(P.b()[r]) + P.A().row(r).norm() * base.norm());
      if (std::abs(a) <= 1e-14) {
        if (c < -slack) return;
        continue;
      }
      if (a > 0.0) {
        hi = std::min(hi, (c + slack) / a);
      } else {
        lo = std::max(lo, (c + slack) / a);
      }
    }
    if (lo > hi) return;
    auto [a, b] = lattice_range(lo, hi, pitch);
    if (a > b) return;
    if (nearest_only) {
      a = b = std::clamp(std::lround(center[j] / pitch), a, b);
    }
    for (long i = a; i <= b; ++i) {
      idx.push_back(i);
      Vector u(k());
      for (int q = 0; q < k(); ++q) u[q] = pitch * static_cast<double>(idx[q]);
      visit(idx, h.offset + h.basis * u);
      idx.pop_back();
    }
  }
};

// Andrew's monotone chain on integer coordinates; returns indices into `pts`.
std::vector<std::size_t> hull_2d(const std::vector<std::pair<long, long>>& pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              order.end());
  if (order.size() < 3) return order;
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a].first - pts[o].first) * (pts[b].second - pts[o].second) -
           (pts[a].second - pts[o].second) * (pts[b].first - pts[o].first);
  };
  std::vector<std::size_t> h(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
    const std::size_t i = order[t];
    while (k >= lower && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

// Extreme points of the grid set: every minimizer of a linear function over the grid set
// is among them.
std::vector<Vector> extreme_points(const std::vector<detail::GridPoint>& pts, int k) {
  std::vector<Vector> out;
  if (pts.empty()) return out;
  if (k == 0) return {pts.front().x};
  if (k == 1) {
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      return a.idx[0] < b.idx[0];
    });
    out.push_back(mn->x);
    if (mx != mn) out.push_back(mx->x);
    return out;
  }
  // Group by all but the last two coordinates (nothing for k = 2, the slice for k = 3).
  std::map<std::vector<long>, std::vector<std::size_t>> slices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    slices[std::vector<long>(pts[i].idx.begin(), pts[i].idx.end() - 2)].push_back(i);
  }
  for (const auto& [key, members] : slices) {
    std::vector<std::pair<long, long>> plane;
    plane.reserve(members.size());
    for (std::size_t i : members) {
      plane.emplace_back(pts[i].idx[static_cast<std::size_t>(k - 2)],
                         pts[i].idx[static_cast<std::size_t>(k - 1)]);
    }
    for (std::size_t h : hull_2d(plane)) out.push_back(pts[members[h]].x);
  }
  return out;
}

double lipschitz_estimate(const WeaklyHomogeneousMap& m, const Vector& x, const Vector& fx,
                          const Matrix& basis, double pitch) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    sum += (m.eval(x + pitch * basis.col(j)) - fx).squaredNorm();
  }
  return std::sqrt(sum) / pitch;
}

// Exact projection by enumerating faces: the nearest point of every affine set
// {A_S x = b_S, E x = d} with |S| <= n, kept when it is feasible. Exponential in the row
// count, which is fine for the small sets the oracle accepts.
Vector face_projection(const Polyhedron& P, const Vector& z) {
  const int n = P.dimension();
  const int m = static_cast<int>(P.inequality_count());
  Vector best;
  double best_d = kInf;
  std::vector<int> rows;
  std::function<void(int)> visit = [&](int next) {
    const Eigen::Index s = static_cast<Eigen::Index>(rows.size());
    Matrix N(s + P.equality_count(), n);
    Vector c(N.rows());
    for (Eigen::Index i = 0; i < s; ++i) {
      N.row(i) = P.A().row(rows[static_cast<std::size_t>(i)]);
      c[i] = P.b()[rows[static_cast<std::size_t>(i)]];
    }
    N.bottomRows(P.equality_count()) = P.E();
    c.tail(P.equality_count()) = P.d();
    Vector x = z;
    if (N.rows() > 0) {
      const Eigen::CompleteOrthogonalDecomposition<Matrix> cod(N);
      x = z - cod.solve(N * z - c);
      if ((N * x - c).norm() > 1e-9 * (1.0 + c.norm())) x.resize(0);
    }
    if (x.size() && P.contains(x, 1e-9)) {
      const double d = (x - z).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = x;
      }
    }
    if (static_cast<int>(rows.size()) == n) return;
    for (int r = next; r < m; ++r) {
      rows.push_back(r);
      visit(r + 1);
      rows.pop_back();
    }
  };
  visit(0);
  if (!best.size()) throw InconclusiveError("face_projection: no feasible face");
  return best;
}

}  // namespace

namespace detail {

std::vector<GridPoint> grid_points(const Polyhedron& P, double pitch, const Vector& center_u,
                                   double radius_u) {
  require_pitch(pitch);
  const AffineParametrization h = affine_hull_orthonormal(P);
  require_dim(center_u.size(), h.basis.cols(), "grid center");
  std::vector<GridPoint> out;
  if (radius_u < 0.0) return out;
  if (h.basis.cols() == 0) {
    if (P.contains(h.offset, 1e-9)) out.push_back({{}, h.offset});
    return out;
  }
  std::vector<long> idx;
  GridWalker{P, h, pitch, center_u, radius_u, false,
             [&](const std::vector<long>& i, const Vector& x) { out.push_back({i, x}); }}
      .walk(idx, 0.0);
  return out;
}

}  // namespace detail

Vector oracle_projection(const Polyhedron& P, const Vector& z, double pitch) {
  require_small(P, "oracle_projection");
  require_dim(z.size(), P.dimension(), "oracle_projection");
  require_pitch(pitch);
  const int n = P.dimension();
  const int m = static_cast<int>(P.inequality_count());
  Vector best;
  double best_d = kInf;
  // Nearest lattice point of one face. Distances are separable in the face's hull
  // coordinates, so each column contributes only its point nearest to z.
  auto search_face = [&](const Polyhedron& F) {
    const AffineParametrization h = affine_hull_orthonormal(F);
    if (h.basis.cols() == 0) {
      if (F.contains(h.offset, 1e-9) && (h.offset - z).squaredNorm() < best_d) {
        best_d = (h.offset - z).squaredNorm();
        best = h.offset;
      }
      return;
    }
    const Vector uz = h.basis.transpose() * (z - h.offset);
    for (double r = pitch; r < 1e12; r *= 2.0) {
      bool any = false;
      std::vector<long> idx;
      GridWalker{F, h, pitch, uz, r, true, [&](const std::vector<long>&, const Vector& x) {
                   any = true;
                   const double d = (x - z).squaredNorm();
                   if (d < best_d) {
                     best_d = d;
                     best = x;
                   }
                 }}
          .walk(idx, 0.0);
      // Every grid point of this face closer than the ones found lies inside the ball.
      if (any) return;
    }
  };
  std::vector<int> rows;
  std::function<void(int)> visit = [&](int next) {
    Matrix E(P.equality_count() + static_cast<Eigen::Index>(rows.size()), n);
    Vector d(E.rows());
    E.topRows(P.equality_count()) = P.E();
    d.head(P.equality_count()) = P.d();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      E.row(P.equality_count() + static_cast<Eigen::Index>(i)) = P.A().row(rows[i]);
      d[P.equality_count() + static_cast<Eigen::Index>(i)] = P.b()[rows[i]];
    }
    try {
      search_face(Polyhedron(P.A(), P.b(), E, d));
    } catch (const InfeasibleError&) {
      return;  // empty face, and so are all faces below it
    }
    if (static_cast<int>(rows.size()) == n) return;
    for (int r = next; r < m; ++r) {
      rows.push_back(r);
      visit(r + 1);
      rows.pop_back();
    }
  };
  visit(0);
  if (!best.size()) throw InconclusiveError("oracle_projection: no grid point found");
  return best;
}

OracleSolutions oracle_vi_solutions(const WeaklyHomogeneousMap& m, const Polyhedron& P,
                                    const OracleGrid& grid) {
  require_small(P, "oracle_vi_solutions");
  require_dim(P.dimension(), m.dimension(), "oracle_vi_solutions");
  require_pitch(grid.pitch);
  const AffineParametrization h = affine_hull_orthonormal(P);
  const int k = static_cast<int>(h.basis.cols());
  OracleSolutions out;
  const double r2 = grid.radius * grid.radius - h.offset.squaredNorm();
  if (r2 < 0.0) return out;
  const double rho = std::sqrt(r2);
  const auto pts = detail::grid_points(P, grid.pitch, Vector::Zero(k), rho);
  out.grid_size = pts.size();
  if (pts.empty()) return out;

  std::vector<Vector> cand = extreme_points(pts, k);
  for (auto& v : vertices(P, grid.radius)) cand.push_back(std::move(v));
  Matrix Y(P.dimension(), static_cast<Eigen::Index>(cand.size()));
  for (std::size_t i = 0; i < cand.size(); ++i) Y.col(static_cast<Eigen::Index>(i)) = cand[i];
  double diam = 0.0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) diam = std::max(diam, (cand[i] - cand[j]).norm());
  }
  const double scale = grid.pitch * std::sqrt(static_cast<double>(std::max(k, 1)));

  std::map<std::vector<long>, int> kept;
  std::vector<const detail::GridPoint*> kept_pts;
  for (const auto& g : pts) {
    const Vector fx = m.eval(g.x);
    const double s = (fx.transpose() * Y).minCoeff() - fx.dot(g.x);
    // s <= 0 always since g.x lies in the hull of the candidates.
    const double tol =
        scale * (fx.norm() + lipschitz_estimate(m, g.x, fx, h.basis, grid.pitch) * diam);
    if (s < -tol) continue;
    kept.emplace(g.idx, static_cast<int>(out.points.size()));
    kept_pts.push_back(&g);
    out.points.push_back(g.x);
    out.scores.push_back(s);
    out.tolerances.push_back(tol);
  }

  // Clusters: two accepted points are linked when no rejected grid point lies strictly inside
  // the ball spanned by their segment. Neighbors (Chebyshev distance 1) always qualify; longer
  // links keep thin accepted regions, such as the tip of a narrow cone, in one piece.
  std::map<std::vector<long>, bool> rejected;
  for (const auto& g : pts) rejected.emplace(g.idx, !kept.count(g.idx));
  std::vector<int> parent(out.points.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  auto separated = [&](const std::vector<long>& a, const std::vector<long>& b) {
    // integer coordinates doubled so the midpoint stays on the lattice
    long r2 = 0;
    for (int q = 0; q < k; ++q) r2 += (b[q] - a[q]) * (b[q] - a[q]);
    std::vector<long> lo(static_cast<std::size_t>(k)), cur(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) lo[q] = std::min(a[q], b[q]);
    bool found = false;
    std::function<void(int)> scan = [&](int q) {
      if (found) return;
      if (q == k) {
        long d2 = 0;  // |2 cur - a - b|^2 < |b - a|^2
        for (int j = 0; j < k; ++j) d2 += (2 * cur[j] - a[j] - b[j]) * (2 * cur[j] - a[j] - b[j]);
        if (d2 >= r2) return;
        const auto it = rejected.find(cur);
        if (it != rejected.end() && it->second) found = true;
        return;
      }
      for (long i = lo[q]; i <= std::max(a[q], b[q]); ++i) {
        cur[q] = i;
        scan(q + 1);
      }
    };
    scan(0);
    return found;
  };
  constexpr long kReach = 6;
  const long span = 2 * kReach + 1;
  const long offsets = static_cast<long>(std::pow(span, k));
  std::vector<long> nb(static_cast<std::size_t>(k));
  for (std::size_t s = 0; s < out.points.size(); ++s) {
    const auto& g = *kept_pts[s];
    for (long code = 0; code < offsets; ++code) {
      long rest = code;
      for (int q = 0; q < k; ++q) {
        nb[q] = g.idx[q] + (rest % span) - kReach;
        rest /= span;
      }
      if (!(g.idx < nb)) continue;
      const auto it = kept.find(nb);
      if (it == kept.end()) continue;
      const int a = root(static_cast<int>(s));
      const int b = root(it->second);
      if (a != b && !separated(g.idx, nb)) parent[static_cast<std::size_t>(b)] = a;
    }
  }

  // Representative of a cluster: its point with the smallest natural residual, computed with
  // the exact face-enumeration projection.
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t s = 0; s < out.points.size(); ++s) members[root(static_cast<int>(s))].push_back(s);
  out.cluster.assign(out.points.size(), -1);
  int clusters = 0;
  for (const auto& [r, list] : members) {
    std::size_t best = list.front();
    double best_res = kInf;
    bool boundary = false;
    for (std::size_t p : list) {
      out.cluster[p] = clusters;
      const Vector& x = out.points[p];
      if ((h.basis.transpose() * (x - h.offset)).norm() >= rho - 1.5 * grid.pitch) boundary = true;
      const double res = (x - face_projection(P, x - m.eval(x))).norm();
      if (res < best_res || (res == best_res && out.scores[p] > out.scores[best])) {
        best_res = res;
        best = p;
      }
    }
    ++clusters;
    if (boundary) {
      out.boundary_representatives.push_back(out.points[best]);
    } else {
      out.representatives.push_back(out.points[best]);
      out.representative_tolerances.push_back(out.tolerances[best]);
    }
  }
  return out;
}

OracleMinimum oracle_min_inner(const WeaklyHomogeneousMap& psi, const Polyhedron& P,
                               const OracleGrid& grid) {
  require_small(P, "oracle_min_inner");
  require_dim(P.dimension(), psi.dimension(), "oracle_min_inner");
  require_pitch(grid.pitch);
  const AffineParametrization h = affine_hull_orthonormal(P);
  const int k = static_cast<int>(h.basis.cols());
  OracleMinimum out;
  out.value = kInf;
  const double r2 = grid.radius * grid.radius - h.offset.squaredNorm();
  if (r2 < 0.0) return out;
  const Vector f0 = psi.eval(Vector::Zero(psi.dimension()));
  for (const auto& g : detail::grid_points(P, grid.pitch, Vector::Zero(k), std::sqrt(r2))) {
    const double v = (psi.eval(g.x) - f0).dot(g.x);
    if (v < out.value) {
      out.value = v;
      out.argmin = g.x;
    }
  }
  return out;
}

double hausdorff_distance(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return kInf;
  auto directed = [](const std::vector<Vector>& p, const std::vector<Vector>& q) {
    double worst = 0.0;
    for (const auto& x : p) {
      double best = kInf;
      for (const auto& y : q) best = std::min(best, (x - y).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace whvi
