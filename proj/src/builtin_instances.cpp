#include "whvi/instance.hpp"

#include <functional>
#include <map>

namespace whvi {

namespace {

Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  Matrix M(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) M(i, j++) = v;
    ++i;
  }
  return M;
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

Instance make(std::string name, WeaklyHomogeneousMap m, Polyhedron K) {
  return Instance{std::move(name), std::move(m), std::move(K), std::nullopt, {}, {}};
}

// K = {x1 >= 0, x2 <= 0}, f_inf = (|x|^2, -|x|^2).
std::vector<MonomialList> ex41_leading() {
  return {{monomial(1, {2, 0}), monomial(1, {0, 2})}, {monomial(-1, {2, 0}), monomial(-1, {0, 2})}};
}

Polyhedron ex41_set() { return Polyhedron::from_inequalities(rows({{-1, 0}, {0, 1}}), vec({0, 0})); }

// (x1 - x2)^2 in both components.
std::vector<MonomialList> ex42_leading() {
  const MonomialList sq{monomial(1, {2, 0}), monomial(-2, {1, 1}), monomial(1, {0, 2})};
  return {sq, sq};
}

// (x1 + x2)^2 in both components.
std::vector<MonomialList> sum_square() {
  const MonomialList sq{monomial(1, {2, 0}), monomial(2, {1, 1}), monomial(1, {0, 2})};
  return {sq, sq};
}

std::vector<MonomialList> identity_remainder() {
  return {{monomial(1, {1, 0})}, {monomial(1, {0, 1})}};
}

Polyhedron diagonal(double lower) {
  return Polyhedron(rows({{-1, 0}}), vec({lower}), rows({{1, -1}}), vec({0}));
}

const std::map<std::string, std::function<Instance()>>& registry() {
  static const std::map<std::string, std::function<Instance()>> r{
      {"ex4_1a",
       [] {
         // remainder (-sqrt(x1 + 1), sqrt(-x2 + 2))
         return make("ex4_1a",
                     WeaklyHomogeneousMap(2, 2, ex41_leading(), {},
                                          {{radical(-1, 2, vec({1, 0}), 1)},
                                           {radical(1, 2, vec({0, -1}), 2)}}),
                     ex41_set());
       }},
      {"ex4_1b",
       [] {
         // remainder (1 - sqrt(|x1|), 2 + sqrt(|x2|))
         return make("ex4_1b",
                     WeaklyHomogeneousMap(2, 2, ex41_leading(),
                                          {{monomial(1, {0, 0})}, {monomial(2, {0, 0})}},
                                          {{radical(-1, 2, vec({1, 0}), 0)},
                                           {radical(1, 2, vec({0, -1}), 0)}}),
                     ex41_set());
       }},
      {"ex4_2",
       [] {
         return make("ex4_2", WeaklyHomogeneousMap(2, 2, ex42_leading(), identity_remainder()),
                     diagonal(1));
       }},
      {"ex4_2_inf",
       [] { return make("ex4_2_inf", WeaklyHomogeneousMap(2, 2, ex42_leading()), diagonal(0)); }},
      {"ex4_2_inf_shifted",
       [] {
         // The recession problem plus a constant push along the ray: no solution at t = 0.
         return make("ex4_2_inf_shifted",
                     WeaklyHomogeneousMap(2, 2, ex42_leading(),
                                          {{monomial(-1, {0, 0})}, {monomial(-1, {0, 0})}}),
                     diagonal(0));
       }},
      {"ex4_3",
       [] {
         return make("ex4_3", WeaklyHomogeneousMap(2, 2, sum_square(), identity_remainder()),
                     Polyhedron::nonnegative_orthant(2));
       }},
      {"ex4_4",
       [] {
         // fourth root of x_i^2 is sqrt(|x_i|)
         return make("ex4_4",
                     WeaklyHomogeneousMap(2, 2, sum_square(), {},
                                          {{radical(-1, 2, vec({1, 0}), 0)},
                                           {radical(-1, 2, vec({0, 1}), 0)}}),
                     Polyhedron::from_inequalities(rows({{-1, 0}, {0, -1}, {-1, -1}}),
                                                   vec({0, 0, -1})));
       }},
      {"ex4_5",
       [] {
         return make("ex4_5",
                     WeaklyHomogeneousMap(2, 3, {{monomial(1, {0, 3})}, {monomial(-1, {3, 0})}},
                                          {{monomial(-2, {1, 0})}, {}}),
                     Polyhedron(Matrix(0, 2), Vector(0), rows({{1, -1}}), vec({0})));
       }},
  };
  return r;
}

}  // namespace

std::vector<std::string> builtin_instance_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

Instance builtin_instance(const std::string& name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw PreconditionError("unknown builtin instance " + name);
  return it->second();
}

}  // namespace whvi
