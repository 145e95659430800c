#include "whvi/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace whvi {

void Polynomial::add_term(const std::vector<int>& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(int variables, double c) {
  Polynomial p(variables);
  p.add_term(std::vector<int>(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::variable(int variables, int index) {
  Polynomial p(variables);
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::from_monomials(int variables, const MonomialList& terms) {
  Polynomial p(variables);
  for (const auto& m : terms) p.add_term(m.exponents, m.coefficient);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(nvars_);
  std::vector<int> e(static_cast<std::size_t>(nvars_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(double s) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

Polynomial Polynomial::substitute(const Vector& offset, const Matrix& basis) const {
  const int k = static_cast<int>(basis.cols());
  // x_i as a polynomial in u.
  std::vector<Polynomial> xs;
  xs.reserve(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    Polynomial xi = Polynomial::constant(k, offset[i]);
    for (int j = 0; j < k; ++j) xi += Polynomial::variable(k, j).scaled(basis(i, j));
    xs.push_back(std::move(xi));
  }
  Polynomial out(k);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(k, c);
    for (int i = 0; i < nvars_; ++i) {
      for (int p = 0; p < e[static_cast<std::size_t>(i)]; ++p) term = term * xs[static_cast<std::size_t>(i)];
    }
    out += term;
  }
  return out;
}

double Polynomial::max_abs_coefficient() const {
  double scale = 0.0;
  for (const auto& [e, c] : terms_) scale = std::max(scale, std::abs(c));
  return scale;
}

void Polynomial::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

double Polynomial::eval(const Vector& x) const {
  double v = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int p = 0; p < e[i]; ++p) t *= x[static_cast<Eigen::Index>(i)];
    }
    v += t;
  }
  return v;
}

}  // namespace whvi
