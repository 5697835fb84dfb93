#pragma once

#include <vector>

#include "exactq/boolfn.hpp"
#include "exactq/query_algorithm.hpp"

namespace exactq::sim {

using boolfn::BooleanFunction;

struct OutputDistribution {
  double p0 = 0.0;
  double p1 = 0.0;
};

// Exact state-vector evolution U_t O_x ... O_x U_0 |0>|0>|0> followed by
// the output-qubit measurement. x is an input index under the usual
// MSB-first convention.
OutputDistribution run(const QueryAlgorithm& alg, int x);

// Same, skipping the unitarity validation; for callers that sweep many
// inputs of an already validated algorithm.
OutputDistribution run_unchecked(const QueryAlgorithm& alg, int x);

// Final state just before measurement; mostly for state-level tests.
Eigen::VectorXcd final_state(const QueryAlgorithm& alg, int x);

// min over all inputs of Pr[output = f(x)]
double min_success(const QueryAlgorithm& alg, const BooleanFunction& f);

// Partial function: success asserted only on promise inputs.
struct PromiseAlgorithm {
  QueryAlgorithm alg;
  BooleanFunction f;
  std::vector<int> domain;
};
double min_success(const PromiseAlgorithm& pa);

// The two-query algorithm deciding |x| == 2 on four bits: 5-dimensional,
// no workspace, phases involving the cube root of unity. The final
// projection onto the start state is realised as a rotation into the
// output qubit.
QueryAlgorithm exact2_algorithm();

// Its raw pieces, for state-level checks.
Eigen::MatrixXcd exact2_core_unitary();
Eigen::VectorXcd exact2_core_state();

// Two-query algorithm distinguishing |x| = n/2 from |x| in {0,1,n-1,n} on
// n bits (n even, n >= 4). Output 1 means an extreme weight.
PromiseAlgorithm balanced_algorithm(int n);

// Pieces of its defining isometry, exposed for the coefficient checks:
// alpha^2, beta, gamma and the ancilla overlap c.
struct BalancedCoefficients {
  double alpha_sq, beta, gamma, c;
};
BalancedCoefficients balanced_coefficients(int n);

// The core unitary on H_in (x) H_work together with the unnormalised
// start state, for the orthogonality checks.
struct BalancedCore {
  Eigen::MatrixXd unitary;
  Eigen::VectorXd phi;
  int dim_in = 0;
  int dim_work = 0;
};
BalancedCore balanced_core(int n);

// One-query exact algorithm for x1 xor x2.
QueryAlgorithm parity2_algorithm();

}  // namespace exactq::sim
