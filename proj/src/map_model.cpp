#include "whvi/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace whvi {

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

double root_of_abs(double u, int k) {
  const double a = std::abs(u);
  switch (k) {
    case 2:
      return std::sqrt(a);
    case 3:
      return std::cbrt(a);
    case 4:
      return std::sqrt(std::sqrt(a));
    default:
      return std::pow(a, 1.0 / k);
  }
}

void check_components(const char* what, std::size_t size, int n) {
  if (size != static_cast<std::size_t>(n)) {
    throw ConstructionError(std::string(what) + " must have one entry per component (" +
                            std::to_string(n) + "), got " + std::to_string(size));
  }
}

void check_monomial(const Monomial& m, int n, const char* where) {
  if (m.exponents.size() != static_cast<std::size_t>(n)) {
    throw ConstructionError(std::string(where) + ": monomial exponent vector has length " +
                            std::to_string(m.exponents.size()) + ", expected " +
                            std::to_string(n));
  }
  for (int e : m.exponents) {
    if (e < 0) throw ConstructionError(std::string(where) + ": negative exponent");
  }
  if (!std::isfinite(m.coefficient)) {
    throw ConstructionError(std::string(where) + ": non-finite coefficient");
  }
}

}  // namespace

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

double Monomial::eval(const Vector& x) const {
  double v = coefficient;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) v *= ipow(x[static_cast<Eigen::Index>(i)], exponents[i]);
  }
  return v;
}

void Monomial::accumulate_gradient(const Vector& x, Eigen::Ref<Vector> grad) const {
  const auto n = exponents.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (exponents[j] == 0) continue;
    double v = coefficient * exponents[j];
    for (std::size_t i = 0; i < n; ++i) {
      const int e = (i == j) ? exponents[i] - 1 : exponents[i];
      if (e != 0) v *= ipow(x[static_cast<Eigen::Index>(i)], e);
    }
    grad[static_cast<Eigen::Index>(j)] += v;
  }
}

double RadicalTerm::eval(const Vector& x) const {
  const double u = inner(x);
  const double r = root_of_abs(u, root_index);
  return (root_index % 2 == 1) ? coefficient * sign_of(u) * r : coefficient * r;
}

void RadicalTerm::accumulate_gradient(const Vector& x, double kink_floor,
                                      Eigen::Ref<Vector> grad) const {
  const double u = inner(x);
  const double au = std::max(std::abs(u), kink_floor);
  if (au == 0.0) return;  // derivative undefined; caller asked for no regularisation
  // d/du |u|^(1/k) = (1/k) |u|^(1/k - 1) sign(u); odd roots of sign(u)|u|^(1/k) lose the sign.
  double d = coefficient * root_of_abs(au, root_index) / (root_index * au);
  if (root_index % 2 == 0) d *= sign_of(u);
  grad += d * a;
}

Monomial monomial(double coefficient, std::vector<int> exponents) {
  return Monomial{coefficient, std::move(exponents)};
}

RadicalTerm radical(double coefficient, int root_index, Vector a, double b) {
  return RadicalTerm{coefficient, root_index, std::move(a), b};
}

WeaklyHomogeneousMap::WeaklyHomogeneousMap(int dimension, std::optional<int> gamma,
                                           std::vector<MonomialList> leading,
                                           std::vector<MonomialList> remainder_poly,
                                           std::vector<RadicalList> remainder_radical)
    : n_(dimension),
      gamma_(0),
      leading_(std::move(leading)),
      remainder_poly_(std::move(remainder_poly)),
      remainder_radical_(std::move(remainder_radical)) {
  if (n_ < 1) throw ConstructionError("map dimension must be positive");
  if (remainder_poly_.empty()) remainder_poly_.resize(static_cast<std::size_t>(n_));
  if (remainder_radical_.empty()) remainder_radical_.resize(static_cast<std::size_t>(n_));
  check_components("leading", leading_.size(), n_);
  check_components("remainder_poly", remainder_poly_.size(), n_);
  check_components("remainder_radical", remainder_radical_.size(), n_);

  int max_degree = 0;
  for (const auto& comp : leading_) {
    for (const auto& m : comp) {
      check_monomial(m, n_, "leading");
      max_degree = std::max(max_degree, m.total_degree());
    }
  }
  for (const auto& comp : remainder_poly_) {
    for (const auto& m : comp) {
      check_monomial(m, n_, "remainder_poly");
      max_degree = std::max(max_degree, m.total_degree());
    }
  }
  gamma_ = gamma.value_or(max_degree);
  if (gamma_ < 1) throw ConstructionError("degree gamma must be at least 1");

  bool any_leading = false;
  for (std::size_t i = 0; i < leading_.size(); ++i) {
    for (const auto& m : leading_[i]) {
      any_leading = true;
      if (m.total_degree() != gamma_) {
        throw ConstructionError("leading monomial in component " + std::to_string(i) +
                                " has total degree " + std::to_string(m.total_degree()) +
                                ", expected gamma = " + std::to_string(gamma_));
      }
    }
  }
  if (!any_leading) throw ConstructionError("leading term is empty");
  for (std::size_t i = 0; i < remainder_poly_.size(); ++i) {
    for (const auto& m : remainder_poly_[i]) {
      if (m.total_degree() >= gamma_) {
        throw ConstructionError("remainder monomial in component " + std::to_string(i) +
                                " has total degree " + std::to_string(m.total_degree()) +
                                ", must be below gamma = " + std::to_string(gamma_));
      }
    }
  }
  for (const auto& comp : remainder_radical_) {
    for (const auto& r : comp) {
      if (r.root_index < 2 || r.root_index > 4) {
        throw ConstructionError("radical root index must be 2, 3 or 4");
      }
      if (r.a.size() != n_) throw ConstructionError("radical inner vector has wrong length");
      if (!std::isfinite(r.coefficient) || !std::isfinite(r.b) || !r.a.allFinite()) {
        throw ConstructionError("radical term has non-finite data");
      }
    }
  }
}

bool WeaklyHomogeneousMap::has_radicals() const {
  return std::any_of(remainder_radical_.begin(), remainder_radical_.end(),
                     [](const RadicalList& c) { return !c.empty(); });
}

Vector WeaklyHomogeneousMap::eval_leading(const Vector& x) const {
  require_dim(x.size(), n_, "eval_leading");
  Vector out = Vector::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    for (const auto& m : leading_[static_cast<std::size_t>(i)]) out[i] += m.eval(x);
  }
  return out;
}

Vector WeaklyHomogeneousMap::eval_remainder(const Vector& x) const {
  require_dim(x.size(), n_, "eval_remainder");
  Vector out = Vector::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    for (const auto& m : remainder_poly_[k]) out[i] += m.eval(x);
    for (const auto& r : remainder_radical_[k]) out[i] += r.eval(x);
  }
  return out;
}

Vector WeaklyHomogeneousMap::eval(const Vector& x) const {
  require_dim(x.size(), n_, "eval_map");
  return eval_leading(x) + eval_remainder(x);
}

Matrix WeaklyHomogeneousMap::jacobian_leading(const Vector& x) const {
  require_dim(x.size(), n_, "jacobian_leading");
  Matrix J = Matrix::Zero(n_, n_);
  Vector row(n_);
  for (int i = 0; i < n_; ++i) {
    row.setZero();
    for (const auto& m : leading_[static_cast<std::size_t>(i)]) m.accumulate_gradient(x, row);
    J.row(i) = row.transpose();
  }
  return J;
}

Matrix WeaklyHomogeneousMap::jacobian_remainder(const Vector& x, double kink_floor) const {
  require_dim(x.size(), n_, "jacobian_remainder");
  Matrix J = Matrix::Zero(n_, n_);
  Vector row(n_);
  for (int i = 0; i < n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    row.setZero();
    for (const auto& m : remainder_poly_[k]) m.accumulate_gradient(x, row);
    for (const auto& r : remainder_radical_[k]) r.accumulate_gradient(x, kink_floor, row);
    J.row(i) = row.transpose();
  }
  return J;
}

Matrix WeaklyHomogeneousMap::jacobian(const Vector& x, double kink_floor) const {
  return jacobian_leading(x) + jacobian_remainder(x, kink_floor);
}

double WeaklyHomogeneousMap::kink_distance(const Vector& x) const {
  require_dim(x.size(), n_, "kink_distance");
  double d = std::numeric_limits<double>::infinity();
  for (const auto& comp : remainder_radical_) {
    for (const auto& r : comp) d = std::min(d, std::abs(r.inner(x)));
  }
  return d;
}

WeaklyHomogeneousMap WeaklyHomogeneousMap::leading_part() const {
  return WeaklyHomogeneousMap(n_, gamma_, leading_);
}

WeaklyHomogeneousMap WeaklyHomogeneousMap::shifted(const Vector& q) const {
  require_dim(q.size(), n_, "shifted");
  auto rem = remainder_poly_;
  for (int i = 0; i < n_; ++i) {
    if (q[i] != 0.0) {
      rem[static_cast<std::size_t>(i)].push_back(
          Monomial{-q[i], std::vector<int>(static_cast<std::size_t>(n_), 0)});
    }
  }
  return WeaklyHomogeneousMap(n_, gamma_, leading_, std::move(rem), remainder_radical_);
}

bool WeaklyHomogeneousMap::operator==(const WeaklyHomogeneousMap& o) const {
  return n_ == o.n_ && gamma_ == o.gamma_ && leading_ == o.leading_ &&
         remainder_poly_ == o.remainder_poly_ && remainder_radical_ == o.remainder_radical_;
}

WeakHomogeneityReport verify_weak_homogeneity(const WeaklyHomogeneousMap& m,
                                              std::span<const Vector> directions,
                                              std::span<const double> radii, double tol) {
  if (directions.empty()) throw PreconditionError("verify_weak_homogeneity: no directions");
  if (radii.empty()) throw PreconditionError("verify_weak_homogeneity: no radii");
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1])) {
      throw PreconditionError("verify_weak_homogeneity: radii must be strictly increasing");
    }
  }
  if (radii.front() <= 0.0 || radii.back() < 1e4) {
    throw PreconditionError("verify_weak_homogeneity: radii must be positive and reach 1e4");
  }

  WeakHomogeneityReport report;
  report.radii.assign(radii.begin(), radii.end());
  report.pass = true;
  const std::size_t half = radii.size() / 2;
  for (const auto& d0 : directions) {
    require_dim(d0.size(), m.dimension(), "verify_weak_homogeneity");
    const double nd = d0.norm();
    if (nd == 0.0) throw PreconditionError("verify_weak_homogeneity: zero direction");
    RayRatios ray;
    ray.direction = d0 / nd;
    for (double R : radii) {
      const Vector x = R * ray.direction;
      ray.ratios.push_back(m.eval_remainder(x).norm() / std::pow(R, m.degree()));
    }
    bool decreasing = true;
    for (std::size_t k = std::max<std::size_t>(half, 1); k < ray.ratios.size(); ++k) {
      if (ray.ratios[k] > ray.ratios[k - 1] * (1.0 + 1e-12)) decreasing = false;
    }
    ray.pass = decreasing && ray.ratios.back() < tol;
    report.pass = report.pass && ray.pass;
    report.rays.push_back(std::move(ray));
  }
  return report;
}

}  // namespace whvi
