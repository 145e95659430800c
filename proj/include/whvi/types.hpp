#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace whvi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input vector or matrix does not have the expected shape.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An object would violate one of its construction invariants.
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// A polyhedron has no feasible point.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// A numerical sub-procedure could not decide its question.
class InconclusiveError : public Error {
public:
  using Error::Error;
};

/// Precondition of an operation is not met (t outside [0,1], non-cone input, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

inline void require_dim(Eigen::Index got, Eigen::Index expected, const char* what) {
  if (got != expected) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace whvi
