#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exactq/errors.hpp"

namespace exactq {

// Quantum query algorithm in the oracle model: t+1 unitaries on
// H_in (x) H_work (x) H_out interleaved with t oracle calls, starting from
// |0>|0>|0> and ending with a measurement of the output qubit. H_in has
// n+1 levels (index 0 is the null query); H_out is a qubit and is the
// last tensor factor, so the flat index of |i>|a>|o> is (i*dim_work + a)*2 + o.
struct QueryAlgorithm {
  int t = 0;
  int dim_in = 1;
  int dim_work = 1;
  int dim_out = 2;
  std::vector<Eigen::MatrixXcd> unitaries;  // t+1 of them

  int arity() const { return dim_in - 1; }
  int total_dim() const { return dim_in * dim_work * dim_out; }
  int flat_index(int in, int work, int out) const { return (in * dim_work + work) * 2 + out; }

  // throws InvalidAlgorithmError when a unitary drifts beyond tol
  void validate(double tol = 1e-8) const;
};

std::string to_json(const QueryAlgorithm& alg);
QueryAlgorithm algorithm_from_json(const std::string& text);

}  // namespace exactq
