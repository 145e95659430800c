#include "whvi/nnls.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace whvi {

namespace {

Vector solve_passive(const Matrix& M, const std::vector<bool>& passive, const Vector& rhs) {
  std::vector<Eigen::Index> cols;
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    if (passive[static_cast<std::size_t>(j)]) cols.push_back(j);
  }
  Matrix sub(M.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = M.col(cols[k]);
  const Vector s = sub.completeOrthogonalDecomposition().solve(rhs);
  Vector full = Vector::Zero(M.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = s[static_cast<Eigen::Index>(k)];
  return full;
}

}  // namespace

NnlsResult nnls(const Matrix& M, const Vector& rhs, int max_iterations) {
  require_dim(rhs.size(), M.rows(), "nnls");
  const Eigen::Index n = M.cols();
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 10);

  NnlsResult res;
  res.x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, M.cwiseAbs().maxCoeff() * rhs.cwiseAbs().maxCoeff());

  Vector w = M.transpose() * (rhs - M * res.x);
  while (res.iterations < max_iterations) {
    Eigen::Index best = -1;
    double wmax = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w[j] > wmax) {
        wmax = w[j];
        best = j;
      }
    }
    if (best < 0) {
      res.converged = true;
      break;
    }
    passive[static_cast<std::size_t>(best)] = true;

    for (;;) {
      ++res.iterations;
      Vector s = solve_passive(M, passive, rhs);
      bool all_positive = true;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && s[j] <= 0.0) all_positive = false;
      }
      if (all_positive) {
        res.x = s;
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && s[j] <= 0.0) {
          alpha = std::min(alpha, res.x[j] / (res.x[j] - s[j]));
        }
      }
      res.x += alpha * (s - res.x);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && res.x[j] <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          res.x[j] = 0.0;
        }
      }
      if (res.iterations >= max_iterations) break;
    }
    w = M.transpose() * (rhs - M * res.x);
  }
  res.residual_norm = (M * res.x - rhs).norm();
  return res;
}

}  // namespace whvi
