#include "whvi/nnls.hpp"
#include "whvi/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace whvi;

TEST_CASE("polynomial arithmetic agrees with pointwise evaluation") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  Polynomial p = x * x;
  p += y.scaled(3.0);
  p -= Polynomial::constant(2, 1.0);
  Polynomial sum = x;
  sum += y;
  const Polynomial q = p * sum;
  const Vector v{{1.5, -2.0}};
  CHECK(p.eval(v) == doctest::Approx(2.25 - 6.0 - 1.0));
  CHECK(q.eval(v) == doctest::Approx((2.25 - 6.0 - 1.0) * (-0.5)));
}

TEST_CASE("cancelling terms leave the zero polynomial") {
  const Polynomial x = Polynomial::variable(1, 0);
  Polynomial p = x * x;
  p -= x * x;
  p.prune(0.0);
  CHECK(p.is_zero());
}

TEST_CASE("from_monomials and substitution") {
  // (x1 + x2)^2 on the line x = (s, s)
  const Polynomial p =
      Polynomial::from_monomials(2, {monomial(1, {2, 0}), monomial(2, {1, 1}), monomial(1, {0, 2})});
  const Polynomial line = p.substitute(Vector::Zero(2), Matrix::Ones(2, 1));
  CHECK(line.variables() == 1);
  REQUIRE(line.terms().size() == 1);
  CHECK(line.terms().begin()->first == std::vector<int>{2});
  CHECK(line.terms().begin()->second == doctest::Approx(4.0));
  CHECK(p.max_abs_coefficient() == doctest::Approx(2.0));
}

TEST_CASE("prune drops small coefficients only") {
  Polynomial p = Polynomial::variable(2, 0).scaled(1e-14);
  p += Polynomial::variable(2, 1);
  p.prune(1e-12);
  CHECK(p.terms().size() == 1);
}

TEST_CASE("nnls satisfies the KKT conditions") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 3 + trial % 4;
    const int cols = 2 + trial % 5;
    Matrix M(rows, cols);
    Vector rhs(rows);
    for (int i = 0; i < rows; ++i) {
      rhs[i] = g(rng);
      for (int j = 0; j < cols; ++j) M(i, j) = g(rng);
    }
    const NnlsResult r = nnls(M, rhs);
    REQUIRE(r.converged);
    const Vector grad = M.transpose() * (M * r.x - rhs);
    CHECK(r.x.minCoeff() >= 0.0);
    CHECK(grad.minCoeff() >= -1e-9);                  // dual feasibility
    CHECK(std::abs(r.x.dot(grad)) <= 1e-9);           // complementarity
    CHECK(r.residual_norm == doctest::Approx((M * r.x - rhs).norm()).epsilon(1e-9));
  }
}

TEST_CASE("nnls returns zero when rhs is in the negative polar") {
  const Matrix M = Matrix::Identity(2, 2);
  const NnlsResult r = nnls(M, Vector{{-1.0, -2.0}});
  CHECK(r.x.norm() == 0.0);
  CHECK(r.residual_norm == doctest::Approx(std::sqrt(5.0)));
}
