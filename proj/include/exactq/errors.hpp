#pragma once

#include <stdexcept>
#include <string>

namespace exactq {

// Common base so the CLI can catch everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct ClassificationError : Error { using Error::Error; };
struct InvalidAlgorithmError : Error { using Error::Error; };
struct SerializationError : Error { using Error::Error; };

struct NotPsdError : Error {
  double min_eigenvalue;
  NotPsdError(const std::string& msg, double eig) : Error(msg), min_eigenvalue(eig) {}
};

struct GramMismatchError : Error {
  double residual;
  GramMismatchError(const std::string& msg, double res) : Error(msg), residual(res) {}
};

struct ExtractionError : Error {
  int step;  // index j of the transition that failed
  ExtractionError(const std::string& msg, int j) : Error(msg), step(j) {}
};

struct SolverFailure : Error {
  double primal_residual;
  double dual_residual;
  double gap;
  SolverFailure(const std::string& msg, double pres, double dres, double g)
      : Error(msg), primal_residual(pres), dual_residual(dres), gap(g) {}
};

}  // namespace exactq
