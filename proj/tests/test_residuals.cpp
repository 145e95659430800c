#include "whvi/instance.hpp"
#include "whvi/residuals.hpp"

#include <doctest.h>

#include <random>

using namespace whvi;

TEST_CASE("natural residual vanishes exactly at solutions") {
  const Instance ex3 = builtin_instance("ex4_3");
  CHECK(natural_residual(ex3.map, ex3.set, Vector::Zero(2)).norm() == 0.0);
  CHECK(natural_residual(ex3.map, ex3.set, Vector{{1, 0}}).norm() > 0.1);
  CHECK(merit(ex3.map, ex3.set, Vector{{1, 0}}) ==
        doctest::Approx(0.5 * natural_residual(ex3.map, ex3.set, Vector{{1, 0}}).squaredNorm()));
}

TEST_CASE("on the diagonal set the natural map of ex4_2 is x itself") {
  const Instance ex2 = builtin_instance("ex4_2");
  for (double s : {0.5, 2.0, 17.0}) {
    const Vector x{{s, s}};
    // f = f_inf + x with f_inf = 0 on the diagonal; Pi_K(0) = 0
    CHECK((natural_residual(ex2.map, ex2.set, x) - x).norm() < 1e-12);
  }
}

TEST_CASE("homotopy endpoints") {
  const Instance inst = builtin_instance("ex4_1b");
  const Vector x{{0.7, -1.2}};
  CHECK((homotopy_residual(inst.map, inst.set, x, 0.0) - natural_residual(inst.map, inst.set, x)).norm() < 1e-14);
  const Vector g1 = homotopy_inner_map(inst.map, x, 1.0);
  CHECK((g1 - (inst.map.eval_leading(x) + x)).norm() < 1e-14);
  const Vector gh = homotopy_inner_map(inst.map, x, 0.25);
  CHECK((gh - (inst.map.eval_leading(x) + 0.25 * x + 0.75 * inst.map.eval_remainder(x))).norm() < 1e-14);
  CHECK_THROWS_AS(homotopy_residual(inst.map, inst.set, x, 1.5), PreconditionError);
  CHECK_THROWS_AS(homotopy_inner_map(inst.map, x, -0.1), PreconditionError);
}

TEST_CASE("generalized Jacobian matches finite differences at smooth points") {
  const Instance inst = builtin_instance("ex4_3");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  int tested = 0;
  for (int k = 0; k < 200 && tested < 20; ++k) {
    const Vector x{{u(rng), u(rng)}};
    const double t = 0.3;
    const Vector inner = x - homotopy_inner_map(inst.map, x, t);
    // stay away from the kinks of the orthant projection
    if (inner.cwiseAbs().minCoeff() < 0.05) continue;
    ++tested;
    const GeneralizedJacobian J = generalized_jacobian(inst.map, inst.set, x, t);
    Matrix fd(2, 2);
    for (int j = 0; j < 2; ++j) {
      Vector e = Vector::Zero(2);
      e[j] = 1e-6;
      fd.col(j) = (homotopy_residual(inst.map, inst.set, x + e, t) -
                   homotopy_residual(inst.map, inst.set, x - e, t)) / 2e-6;
    }
    CHECK((J.value - fd).norm() < 1e-5);
    CHECK_FALSE(J.at_kink);
  }
  CHECK(tested == 20);
}

TEST_CASE("kinks are reported") {
  const Instance inst = builtin_instance("ex4_4");
  const GeneralizedJacobian J = generalized_jacobian(inst.map, inst.set, Vector{{0.0, 2.0}}, 0.0);
  CHECK(J.at_kink);
  CHECK(J.value.allFinite());
}
