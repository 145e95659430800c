#pragma once

#include "whvi/types.hpp"

namespace whvi {

struct NnlsResult {
  Vector x;
  double residual_norm = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// min ||M x - rhs|| subject to x >= 0 (Lawson-Hanson active set).
NnlsResult nnls(const Matrix& M, const Vector& rhs, int max_iterations = 0);

}  // namespace whvi
