#include "support/random_instances.hpp"

#include <doctest.h>

#include <cmath>

using namespace whvi;
using whvi::testing::random_vector;

namespace {

// Central differences, used as the reference for the analytic Jacobians.
Matrix fd_jacobian(const WeaklyHomogeneousMap& m, const Vector& x, double h = 1e-6) {
  Matrix J(m.dimension(), m.dimension());
  for (int j = 0; j < m.dimension(); ++j) {
    Vector e = Vector::Zero(m.dimension());
    e[j] = h;
    J.col(j) = (m.eval(x + e) - m.eval(x - e)) / (2 * h);
  }
  return J;
}

WeaklyHomogeneousMap radical_map() {
  // f = (x1^2 + x2^2 - sqrt(x1 + 1), x1 x2 + cbrt(x2 - 2))
  return WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0}), monomial(1, {0, 2})}, {monomial(1, {1, 1})}}, {},
                              {{radical(-1, 2, Vector{{1, 0}}, 1)}, {radical(1, 3, Vector{{0, 1}}, -2)}});
}

}  // namespace

TEST_CASE("degree is inferred from the leading monomials") {
  const WeaklyHomogeneousMap m(2, std::nullopt, {{monomial(1, {3, 0})}, {monomial(2, {1, 2})}});
  CHECK(m.degree() == 3);
  CHECK(m.dimension() == 2);
  CHECK_FALSE(m.has_radicals());
}

TEST_CASE("construction rejects invariant violations") {
  SUBCASE("leading monomial of the wrong degree") {
    CHECK_THROWS_AS(WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0})}, {monomial(1, {1, 0})}}), ConstructionError);
  }
  SUBCASE("remainder monomial of degree gamma") {
    CHECK_THROWS_AS(WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0})}, {monomial(1, {0, 2})}},
                                         {{monomial(1, {1, 1})}, {}}),
                    ConstructionError);
  }
  SUBCASE("wrong number of components") {
    CHECK_THROWS(WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0})}}));
  }
  SUBCASE("exponent vector of the wrong length") {
    CHECK_THROWS(WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0, 0})}, {monomial(1, {0, 2})}}));
  }
  SUBCASE("root index below two") {
    CHECK_THROWS(WeaklyHomogeneousMap(2, 2, {{monomial(1, {2, 0})}, {monomial(1, {0, 2})}}, {},
                                      {{radical(1, 1, Vector{{1, 0}}, 0)}, {}}));
  }
  SUBCASE("identically zero leading term") {
    CHECK_THROWS(WeaklyHomogeneousMap(2, std::nullopt, {{}, {}}));
  }
}

TEST_CASE("evaluation splits into leading part and remainder") {
  const WeaklyHomogeneousMap m = radical_map();
  const Vector x{{0.5, 3.0}};
  const Vector expected{{0.25 + 9.0 - std::sqrt(1.5), 1.5 + 1.0}};
  CHECK((m.eval(x) - expected).norm() < 1e-14);
  CHECK((m.eval(x) - m.eval_leading(x) - m.eval_remainder(x)).norm() < 1e-14);
}

TEST_CASE("radicals extend continuously to negative arguments") {
  const WeaklyHomogeneousMap m(1, 1, {{monomial(1, {1})}}, {}, {{radical(1, 3, Vector{{1}}, 0), radical(1, 2, Vector{{1}}, 0)}});
  // cube root keeps the sign, square root uses the absolute value
  CHECK(m.eval_remainder(Vector{{-8.0}})[0] == doctest::Approx(-2.0 + std::sqrt(8.0)));
  CHECK(m.eval_remainder(Vector{{4.0}})[0] == doctest::Approx(std::cbrt(4.0) + 2.0));
}

TEST_CASE("leading part is positively homogeneous of degree gamma") {
  std::mt19937_64 rng(3);
  for (const auto& name : builtin_instance_names()) {
    const auto m = builtin_instance(name).map;
    for (int k = 0; k < 50; ++k) {
      const Vector x = random_vector(rng, 2, -5, 5);
      const double lambda = std::exp(whvi::testing::uniform(rng, -4, 4));
      const Vector lhs = m.eval_leading(lambda * x);
      const Vector rhs = std::pow(lambda, m.degree()) * m.eval_leading(x);
      // the terms cancel in places, so measure against the size of the individual monomials
      const double scale = std::pow(lambda * (1.0 + x.norm()), m.degree());
      CHECK((lhs - rhs).norm() <= 1e-13 * scale);
    }
  }
}

TEST_CASE("analytic Jacobian matches central differences away from kinks") {
  std::mt19937_64 rng(11);
  const WeaklyHomogeneousMap m = radical_map();
  for (int k = 0; k < 20; ++k) {
    Vector x = random_vector(rng, 2, -3, 3);
    if (m.kink_distance(x) < 0.1) continue;
    CHECK((m.jacobian(x) - fd_jacobian(m, x)).norm() < 1e-5 * (1.0 + m.jacobian(x).norm()));
  }
  for (const auto& name : builtin_instance_names()) {
    const auto map = builtin_instance(name).map;
    const Vector x{{1.3, -0.7}};
    if (map.kink_distance(x) < 0.1) continue;
    CHECK((map.jacobian(x) - fd_jacobian(map, x)).norm() < 1e-5 * (1.0 + map.jacobian(x).norm()));
    CHECK((map.jacobian(x) - map.jacobian_leading(x) - map.jacobian_remainder(x)).norm() < 1e-12);
  }
}

TEST_CASE("kink floor keeps the Jacobian finite at a radical kink") {
  const WeaklyHomogeneousMap m = radical_map();
  const Vector x{{-1.0, 1.0}};  // x1 + 1 = 0
  CHECK(m.kink_distance(x) == doctest::Approx(0.0));
  CHECK(m.jacobian(x, 1e-7).allFinite());
}

TEST_CASE("leading_part and shifted") {
  const WeaklyHomogeneousMap m = radical_map();
  const Vector x{{2.0, -1.0}};
  const WeaklyHomogeneousMap lead = m.leading_part();
  CHECK(lead.degree() == m.degree());
  CHECK((lead.eval(x) - m.eval_leading(x)).norm() < 1e-15);
  CHECK((lead.eval_remainder(x)).norm() == 0.0);
  const Vector q{{3.0, -4.0}};
  CHECK((m.shifted(q).eval(x) - (m.eval(x) - q)).norm() < 1e-14);
  CHECK((m.shifted(q).eval_leading(x) - m.eval_leading(x)).norm() < 1e-15);
}

TEST_CASE("weak homogeneity verification") {
  const std::vector<Vector> dirs{Vector{{1, 0}}, Vector{{0, 1}}, Vector{{-0.6, 0.8}}};
  const std::vector<double> radii{1e1, 1e2, 1e3, 1e4};
  SUBCASE("lower-degree remainder decays") {
    const auto rep = verify_weak_homogeneity(radical_map(), dirs, radii, 1e-2);
    CHECK(rep.pass);
    CHECK(rep.rays.size() == dirs.size());
    for (const auto& r : rep.rays) CHECK(r.ratios.back() < r.ratios.front());
  }
  SUBCASE("slow decay fails a tight tolerance") {
    // ||r|| / R^gamma = R^-1/2 is 1e-2 at R = 1e4
    const WeaklyHomogeneousMap m(2, 1, {{monomial(1, {1, 0})}, {monomial(1, {0, 1})}}, {},
                                 {{radical(1, 2, Vector{{1, 0}}, 0)}, {radical(1, 2, Vector{{0, 1}}, 0)}});
    CHECK_FALSE(verify_weak_homogeneity(m, dirs, radii, 1e-3).pass);
    CHECK(verify_weak_homogeneity(m, dirs, radii, 0.05).pass);
  }
  SUBCASE("radii must increase") {
    const std::vector<double> bad{10, 5};
    CHECK_THROWS_AS(verify_weak_homogeneity(radical_map(), dirs, bad, 1e-2), PreconditionError);
  }
}

TEST_CASE("dimension mismatches are reported") {
  CHECK_THROWS_AS(radical_map().eval(Vector::Zero(3)), DimensionError);
}
