#include "support/random_instances.hpp"

#include <doctest.h>

#include <algorithm>

using namespace whvi;
using whvi::testing::random_polyhedron;
using whvi::testing::random_vector;

namespace {

bool has_direction(const std::vector<Vector>& dirs, const Vector& u) {
  return std::any_of(dirs.begin(), dirs.end(), [&](const Vector& d) { return (d - u).norm() < 1e-9; });
}

// {x1 = x2, x1 >= -1}
Polyhedron diagonal_set() {
  return Polyhedron(Matrix{{-1, 0}}, Vector{{1}}, Matrix{{1, -1}}, Vector{{0}});
}

}  // namespace

TEST_CASE("construction checks shapes and feasibility") {
  CHECK_THROWS_AS(Polyhedron(Matrix::Identity(2, 2), Vector::Zero(3), Matrix(0, 2), Vector(0)), DimensionError);
  // x1 <= -1 and x1 >= 1
  CHECK_THROWS_AS(Polyhedron::from_inequalities(Matrix{{1, 0}, {-1, 0}}, Vector{{-1, -1}}), InfeasibleError);
  CHECK_THROWS_AS(Polyhedron::from_inequalities(Matrix{{0, 0}}, Vector{{-1}}), InfeasibleError);
  CHECK(Polyhedron::nonnegative_orthant(3).is_cone());
  CHECK_FALSE(diagonal_set().is_cone());
  CHECK(diagonal_set().contains(Vector{{-1, -1}}));
  CHECK_FALSE(diagonal_set().contains(Vector{{-2, -2}}));
  CHECK_FALSE(diagonal_set().contains(Vector{{0, 1}}));
}

TEST_CASE("projection onto simple sets has closed forms") {
  SUBCASE("orthant clamps negative entries") {
    const Projection p = project(Polyhedron::nonnegative_orthant(2), Vector{{-1, 2}});
    CHECK((p.point - Vector{{0, 2}}).norm() < 1e-14);
    CHECK(p.active.tight == std::vector<int>{0});
    CHECK(p.inequality_multipliers[0] == doctest::Approx(1.0));
  }
  SUBCASE("points of the set are fixed") {
    const Vector z{{0.3, 4.0}};
    CHECK((project(Polyhedron::nonnegative_orthant(2), z).point - z).norm() < 1e-14);
  }
  SUBCASE("line segment with an end point") {
    // onto the line x1 = x2 gives (-2, -2), which the bound moves to (-1, -1)
    const Projection p = project(diagonal_set(), Vector{{-3, -1}});
    CHECK((p.point - Vector{{-1, -1}}).norm() < 1e-12);
    CHECK(projection_kkt_residual(diagonal_set(), Vector{{-3, -1}}, p) < 1e-12);
  }
  SUBCASE("whole space") {
    const Vector z{{5, -7}};
    CHECK((project(Polyhedron::whole_space(2), z).point - z).norm() == 0.0);
  }
}

TEST_CASE("random projections satisfy KKT and are non-expansive") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const Polyhedron P = random_polyhedron(rng, n, 1 + trial % 6, trial % 2 == 0);
    const Vector z = random_vector(rng, n, -4, 4);
    const Vector w = random_vector(rng, n, -4, 4);
    const Projection pz = project(P, z);
    const Projection pw = project(P, w);
    CHECK(projection_kkt_residual(P, z, pz) <= 1e-9);
    CHECK(P.contains(pz.point));
    CHECK((pz.point - pw.point).norm() <= (z - w).norm() + 1e-12);
    // variational characterization against points of the set
    for (const auto& y : sample_set(P, 8, 5.0, 3)) CHECK((z - pz.point).dot(y - pz.point) <= 1e-9);
  }
}

TEST_CASE("recession cone and boundedness") {
  const Polyhedron rc = recession_cone(diagonal_set());
  CHECK(rc.is_cone());
  CHECK(rc.contains(Vector{{1, 1}}));
  CHECK_FALSE(rc.contains(Vector{{-1, -1}}));
  CHECK_FALSE(is_bounded(diagonal_set()));
  const Polyhedron triangle = Polyhedron::from_inequalities(Matrix{{-1, 0}, {0, -1}, {1, 1}}, Vector{{0, 0, 1}});
  CHECK(is_bounded(triangle));
  CHECK(is_bounded(intersect_box(Polyhedron::whole_space(3), 2.0)));
}

TEST_CASE("dual cone membership") {
  const Polyhedron orthant = Polyhedron::nonnegative_orthant(2);
  CHECK(dual_cone_membership(orthant, Vector{{1, 2}}));
  CHECK(dual_cone_membership(orthant, Vector{{0, 0}}));
  CHECK_FALSE(dual_cone_membership(orthant, Vector{{1, -0.1}}));
  // the dual of a line is its orthogonal complement
  const Polyhedron line = recession_cone(Polyhedron(Matrix(0, 2), Vector(0), Matrix{{1, -1}}, Vector{{0}}));
  CHECK(dual_cone_membership(line, Vector{{1, -1}}));
  CHECK_FALSE(dual_cone_membership(line, Vector{{1, 0}}));
  // the dual of the whole space is {0}
  CHECK_FALSE(dual_cone_membership(Polyhedron::whole_space(2), Vector{{0, 1e-3}}));
}

TEST_CASE("vertices of a triangle") {
  const Polyhedron triangle = Polyhedron::from_inequalities(Matrix{{-1, 0}, {0, -1}, {1, 1}}, Vector{{0, 0, 1}});
  const auto v = vertices(triangle, 10.0);
  CHECK(v.size() == 3);
  CHECK(has_direction(v, Vector{{0, 0}}));
  CHECK(has_direction(v, Vector{{1, 0}}));
  CHECK(has_direction(v, Vector{{0, 1}}));
  CHECK(vertices(triangle, 0.5).size() == 1);
}

TEST_CASE("cone directions include the edges") {
  const auto dirs = cone_directions(Polyhedron::nonnegative_orthant(2), 8, 1);
  CHECK(has_direction(dirs, Vector{{1, 0}}));
  CHECK(has_direction(dirs, Vector{{0, 1}}));
  for (const auto& d : dirs) {
    CHECK(d.norm() == doctest::Approx(1.0));
    CHECK(Polyhedron::nonnegative_orthant(2).contains(d));
  }
  const Polyhedron zero(Matrix(0, 2), Vector(0), Matrix::Identity(2, 2), Vector::Zero(2));
  CHECK(cone_directions(zero, 8, 1).empty());
}

TEST_CASE("samples lie in the set and are reproducible") {
  std::mt19937_64 rng(4);
  const Polyhedron P = random_polyhedron(rng, 3, 4, false);
  const auto a = sample_set(P, 32, 5.0, 9);
  const auto b = sample_set(P, 32, 5.0, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(P.contains(a[i]));
    CHECK(a[i] == b[i]);
  }
  CHECK(a.size() > 3);
}

TEST_CASE("affine hull parametrizations") {
  const Polyhedron P(Matrix(0, 3), Vector(0), Matrix{{1, 1, 1}}, Vector{{2}});
  const AffineParametrization o = affine_hull_orthonormal(P);
  CHECK(o.basis.cols() == 2);
  CHECK((o.basis.transpose() * o.basis - Matrix::Identity(2, 2)).norm() < 1e-12);
  const AffineParametrization f = affine_hull_free_variables(P);
  CHECK(f.basis.cols() == 2);
  for (const auto& u : {Vector{{0.0, 0.0}}, Vector{{1.5, -2.0}}}) {
    CHECK((P.E() * (o.offset + o.basis * u) - P.d()).norm() < 1e-12);
    CHECK((P.E() * (f.offset + f.basis * u) - P.d()).norm() < 1e-12);
  }
}
