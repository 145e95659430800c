#include "whvi/instance.hpp"

#include <doctest.h>

using namespace whvi;

namespace {

WeaklyHomogeneousMap identity_minus(const Vector& q) {
  return WeaklyHomogeneousMap(2, 1, {{monomial(1, {1, 0})}, {monomial(1, {0, 1})}},
                              {{monomial(-q[0], {0, 0})}, {monomial(-q[1], {0, 0})}});
}

}  // namespace

TEST_CASE("default continuation schedule") {
  const auto t = default_t_schedule();
  REQUIRE(t.size() >= 6);
  CHECK(t.front() == 1.0);
  CHECK(t.back() == 0.0);
  for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k] < t[k - 1]);
  // the tail is linear
  const std::size_t n = t.size();
  CHECK(t[n - 2] - t[n - 1] == doctest::Approx(t[n - 3] - t[n - 2]));
}

TEST_CASE("newton_inner") {
  const Instance ex3 = builtin_instance("ex4_3");
  SUBCASE("starting at a solution takes no iterations") {
    const NewtonResult r = newton_inner(ex3.map, ex3.set, Vector::Zero(2), 0.0);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
  }
  SUBCASE("converges from a nearby start") {
    const NewtonResult r = newton_inner(ex3.map, ex3.set, Vector{{1.0, 0.5}}, 0.0);
    CHECK(r.converged);
    CHECK(r.residual_norm <= 1e-10);
    CHECK(r.x.norm() < 1e-8);
  }
  SUBCASE("t outside [0, 1] is rejected") {
    CHECK_THROWS_AS(newton_inner(ex3.map, ex3.set, Vector::Zero(2), 2.0), PreconditionError);
  }
}

TEST_CASE("homotopy solves the shipped instances with compact solution sets") {
  for (const char* name : {"ex4_1a", "ex4_1b", "ex4_2", "ex4_3", "ex4_5"}) {
    CAPTURE(name);
    const Instance inst = builtin_instance(name);
    const SolveResult r = solve_homotopy(inst.map, inst.set, inst.solver);
    REQUIRE(r.status == SolveStatus::Solved);
    REQUIRE_FALSE(r.points.empty());
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      CHECK(r.residuals[k] <= inst.solver.residual_tol);
      CHECK(validate_solution(inst.map, inst.set, r.points[k]));
    }
    CHECK_FALSE(r.path.empty());
    CHECK(r.path.back().t == 0.0);
  }
}

TEST_CASE("solution of ex4_2 is the origin") {
  const Instance inst = builtin_instance("ex4_2");
  const SolveResult r = solve_homotopy(inst.map, inst.set, inst.solver);
  REQUIRE(r.status == SolveStatus::Solved);
  CHECK(r.points.front().norm() < 1e-9);
}

TEST_CASE("divergent path returns an increasing trace") {
  const Instance inst = builtin_instance("ex4_2_inf_shifted");
  const SolveResult r = solve_homotopy(inst.map, inst.set, inst.solver);
  REQUIRE(r.status == SolveStatus::Diverged);
  REQUIRE(r.trace.size() >= 2);
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    CHECK(r.trace[k].t > 0.0);
    CHECK(r.trace[k].t < 1.0);
    CHECK(homotopy_residual(inst.map, inst.set, r.trace[k].x, r.trace[k].t).norm() <= 1e-10);
    if (k) CHECK(r.trace[k].x.norm() > r.trace[k - 1].x.norm());
  }
  CHECK(r.trace.back().x.norm() > inst.solver.divergence_norm);
}

TEST_CASE("extragradient") {
  SUBCASE("affine map on the orthant") {
    const WeaklyHomogeneousMap m = identity_minus(Vector{{1, -1}});
    const SolveResult r = solve_extragradient(m, Polyhedron::nonnegative_orthant(2), Vector::Zero(2));
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK((r.points.front() - Vector{{1, 0}}).norm() < 1e-8);
  }
  SUBCASE("starting at the solution") {
    const Instance ex3 = builtin_instance("ex4_3");
    const SolveResult r = solve_extragradient(ex3.map, ex3.set, Vector::Zero(2));
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.points.front().norm() == 0.0);
  }
  SUBCASE("degenerate quadratic problem") {
    const Instance ex3 = builtin_instance("ex4_3");
    const SolveResult r = solve_extragradient(ex3.map, ex3.set, Vector{{2.0, 1.0}});
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.points.front().norm() < 1e-8);
  }
}

TEST_CASE("enumerate_solutions") {
  SUBCASE("isolated solution") {
    const Instance inst = builtin_instance("ex4_2");
    const SolutionSet s = enumerate_solutions(inst.map, inst.set, inst.solver);
    REQUIRE(s.points.size() == 1);
    CHECK(s.box_diameter < 1e-8);
  }
  SUBCASE("a ray of solutions gives many points") {
    const Instance inst = builtin_instance("ex4_2_inf");
    const SolutionSet s = enumerate_solutions(inst.map, inst.set, inst.solver);
    CHECK(s.points.size() >= 2);
    for (const auto& x : s.points) {
      CHECK(x[0] == doctest::Approx(x[1]));
      CHECK(x[0] >= -1e-12);
    }
  }
  SUBCASE("deterministic") {
    const Instance inst = builtin_instance("ex4_3");
    const SolutionSet a = enumerate_solutions(inst.map, inst.set, inst.solver);
    const SolutionSet b = enumerate_solutions(inst.map, inst.set, inst.solver);
    CHECK(a.points == b.points);
  }
}

TEST_CASE("validate_solution") {
  const Instance inst = builtin_instance("ex4_2");
  CHECK(validate_solution(inst.map, inst.set, Vector::Zero(2)));
  CHECK_FALSE(validate_solution(inst.map, inst.set, Vector{{-1, -1}}));
  CHECK_FALSE(validate_solution(inst.map, inst.set, Vector{{1, 0}}));  // not in K
}

TEST_CASE("equations over cones") {
  const Polyhedron C = Polyhedron::nonnegative_orthant(2);
  const CheckerConfig ck;
  const SolveConfig sv;
  SUBCASE("cube map") {
    const WeaklyHomogeneousMap cube(2, 3, {{monomial(1, {3, 0})}, {monomial(1, {0, 3})}});
    const ConeEquationResult r = solve_cone_equation(cube, C, Vector{{8, 27}}, sv, ck);
    REQUIRE(r.status == ConeEquationStatus::Solved);
    CHECK((r.x - Vector{{2, 3}}).norm() <= 1e-8);
    CHECK(r.residual <= 1e-8);
  }
  SUBCASE("identity") {
    const WeaklyHomogeneousMap id(2, 1, {{monomial(1, {1, 0})}, {monomial(1, {0, 1})}});
    const ConeEquationResult r = solve_cone_equation(id, C, Vector{{1, 2}}, sv, ck);
    REQUIRE(r.status == ConeEquationStatus::Solved);
    CHECK((r.x - Vector{{1, 2}}).norm() <= 1e-8);
  }
  SUBCASE("swap map lacks the Z-property") {
    const WeaklyHomogeneousMap swap(2, 1, {{monomial(1, {0, 1})}, {monomial(1, {1, 0})}});
    const ConeEquationResult r = solve_cone_equation(swap, C, Vector{{1, 1}}, sv, ck);
    CHECK(r.status == ConeEquationStatus::Refused);
    CHECK(r.z_property.violated());
    CHECK(r.z_property.witness.has_value());
  }
  SUBCASE("preconditions") {
    const WeaklyHomogeneousMap cube(2, 3, {{monomial(1, {3, 0})}, {monomial(1, {0, 3})}});
    CHECK_THROWS_AS(solve_cone_equation(cube, C, Vector{{-1, 1}}, sv, ck), PreconditionError);
    const Polyhedron shifted = Polyhedron::from_inequalities(Matrix{{-1, 0}}, Vector{{1}});
    CHECK_THROWS_AS(solve_cone_equation(cube, shifted, Vector{{1, 1}}, sv, ck), PreconditionError);
  }
}
