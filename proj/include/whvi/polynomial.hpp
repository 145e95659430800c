#pragma once

#include "whvi/map_model.hpp"

#include <map>
#include <vector>

namespace whvi {

/// Sparse multivariate polynomial with real coefficients. Only used for the closed-form
/// copositivity certificates, so it supports just what those need.
class Polynomial {
public:
  explicit Polynomial(int variables) : nvars_(variables) {}

  static Polynomial constant(int variables, double c);
  static Polynomial variable(int variables, int index);
  static Polynomial from_monomials(int variables, const MonomialList& terms);

  int variables() const { return nvars_; }
  const std::map<std::vector<int>, double>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(double s) const;

  /// Substitutes x = offset + basis * u and returns the polynomial in u.
  Polynomial substitute(const Vector& offset, const Matrix& basis) const;

  /// Drops terms with |coefficient| <= threshold.
  void prune(double threshold);
  double max_abs_coefficient() const;
  bool is_zero() const { return terms_.empty(); }
  double eval(const Vector& x) const;

private:
  void add_term(const std::vector<int>& e, double c);

  int nvars_;
  std::map<std::vector<int>, double> terms_;
};

}  // namespace whvi
