#include "support/random_instances.hpp"
#include "whvi/oracle.hpp"

#include <doctest.h>

using namespace whvi;

TEST_CASE("oracle projection is close to the exact projection") {
  const double pitch = 1e-2;
  SUBCASE("orthant") {
    const Vector p = oracle_projection(Polyhedron::nonnegative_orthant(2), Vector{{-1, 2}}, pitch);
    CHECK((p - Vector{{0, 2}}).norm() <= 2 * pitch);
  }
  SUBCASE("far point onto a tilted halfplane") {
    const Polyhedron H = Polyhedron::from_inequalities(Matrix{{0.6, 0.8}}, Vector{{0.37}});
    const Vector z{{30, 40}};
    CHECK((oracle_projection(H, z, pitch) - project(H, z).point).norm() <= 2 * pitch);
  }
  SUBCASE("random sets") {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 30; ++k) {
      const int n = 2 + k % 2;
      const Polyhedron P = whvi::testing::random_polyhedron(rng, n, 1 + k % 4, k % 3 == 0);
      const Vector z = whvi::testing::random_vector(rng, n, -3, 3);
      CHECK((oracle_projection(P, z, pitch) - project(P, z).point).norm() <= 2 * pitch);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(oracle_projection(Polyhedron::whole_space(4), Vector::Zero(4), pitch), PreconditionError);
    CHECK_THROWS_AS(oracle_projection(Polyhedron::whole_space(2), Vector::Zero(2), 0.0), PreconditionError);
  }
}

TEST_CASE("grid points lie in the set") {
  const Polyhedron P = Polyhedron::from_inequalities(Matrix{{-1, 0}, {0, -1}, {1, 1}}, Vector{{0, 0, 1}});
  const auto pts = detail::grid_points(P, 0.1, Vector::Zero(2), 10.0);
  // lattice points of the triangle: 1 + 2 + ... + 11
  CHECK(pts.size() == 66);
  for (const auto& g : pts) CHECK(P.contains(g.x, 1e-9));
}

TEST_CASE("oracle VI solutions") {
  const OracleGrid grid{0.02, 3.0};
  SUBCASE("ex4_2 has the single solution 0") {
    const Instance inst = builtin_instance("ex4_2");
    const OracleSolutions s = oracle_vi_solutions(inst.map, inst.set, grid);
    REQUIRE(s.representatives.size() == 1);
    CHECK(s.representatives.front().norm() <= 2 * grid.pitch);
    CHECK(s.boundary_representatives.empty());
    CHECK(s.points.size() == s.scores.size());
    CHECK(s.points.size() == s.cluster.size());
  }
  SUBCASE("the recession problem of ex4_2 accepts the whole ray") {
    const Instance inst = builtin_instance("ex4_2_inf");
    const OracleSolutions s = oracle_vi_solutions(inst.map, inst.set, grid);
    CHECK(s.points.size() == s.grid_size);
    // the ray reaches the truncation sphere
    CHECK(s.representatives.empty());
    CHECK(s.boundary_representatives.size() == 1);
  }
  SUBCASE("solutions found at half the pitch stay near the coarse ones") {
    const Instance inst = builtin_instance("ex4_3");
    const OracleSolutions coarse = oracle_vi_solutions(inst.map, inst.set, grid);
    const OracleSolutions fine = oracle_vi_solutions(inst.map, inst.set, {grid.pitch / 2, grid.radius});
    CHECK(hausdorff_distance(coarse.representatives, fine.representatives) <= 2 * grid.pitch);
  }
  SUBCASE("representatives have small natural residual") {
    for (const char* name : {"ex4_1a", "ex4_3", "ex4_4", "ex4_5"}) {
      const Instance inst = builtin_instance(name);
      const OracleSolutions s = oracle_vi_solutions(inst.map, inst.set, grid);
      CAPTURE(name);
      for (std::size_t k = 0; k < s.representatives.size(); ++k)
        CHECK(natural_residual(inst.map, inst.set, s.representatives[k]).norm() <= s.representative_tolerances[k]);
    }
  }
}

TEST_CASE("oracle minimum of the copositivity form") {
  const OracleGrid grid{0.05, 2.0};
  const Instance ex3 = builtin_instance("ex4_3");
  const OracleMinimum a = oracle_min_inner(ex3.map.leading_part(), ex3.set, grid);
  CHECK(a.value == doctest::Approx(0.0));
  CHECK(a.argmin.norm() == doctest::Approx(0.0));
  // <f(x) - f(0), x> is -7/64 at (1/4, 0) for ex4_1b
  const Instance ex1 = builtin_instance("ex4_1b");
  const OracleMinimum b = oracle_min_inner(ex1.map, ex1.set, grid);
  CHECK(b.value <= -7.0 / 64.0 + 1e-12);
}

TEST_CASE("Hausdorff distance") {
  const std::vector<Vector> a{Vector{{0, 0}}, Vector{{1, 0}}};
  const std::vector<Vector> b{Vector{{0, 0}}};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance({}, {}) == 0.0);
  CHECK(hausdorff_distance(a, {}) == std::numeric_limits<double>::infinity());
}
