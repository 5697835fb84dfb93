#pragma once

#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "exactq/errors.hpp"

namespace exactq::conic {

// Equality-form cone program over a product of dense PSD blocks and a
// nonnegative orthant:
//
//   minimise   sum_i c_i * u_i          (objective lives on the orthant)
//   subject to <A_k, (X, u)> = b_k      for k = 0..m-1
//              X_b PSD for each block,  u >= 0.
//
// Per-block coefficients are either an explicit symmetric entry list
// (value c at (p,q) contributes c*(X_pq + X_qp) off the diagonal and
// c*X_pp on it) or a rank-one dyad r r^T contributing r^T X r. The diag
// output constraints of the query SDP are rank-one; everything else in it
// touches a handful of entries, and the Schur complement assembly leans
// on that.

struct BlockCoeff {
  int block = 0;
  std::vector<std::tuple<int, int, double>> entries;  // used when rank1 is empty
  Eigen::VectorXd rank1;
};

struct Row {
  std::vector<BlockCoeff> psd;
  std::vector<std::pair<int, double>> lin;
  double rhs = 0.0;
};

struct Problem {
  std::vector<int> psd_dims;
  int num_lin = 0;
  std::vector<Row> rows;
  std::vector<std::pair<int, double>> lin_objective;
};

struct Options {
  int max_iterations = 100;
  double feas_tol = 1e-9;   // relative primal/dual residual target
  double gap_tol = 1e-9;    // relative duality gap target
  double step_fraction = 0.98;
  double time_limit_seconds = 0.0;  // 0 disables the limit
  bool verbose = false;
};

enum class Status { kOptimal, kSlowProgress, kIterationLimit, kTimeLimit };

struct Result {
  Status status = Status::kIterationLimit;
  std::vector<Eigen::MatrixXd> x_psd;
  Eigen::VectorXd x_lin;
  Eigen::VectorXd y;
  std::vector<Eigen::MatrixXd> s_psd;
  Eigen::VectorXd s_lin;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;  // max-norm, relative
  double dual_residual = 0.0;
  double mu = 0.0;
  int iterations = 0;

  bool converged() const { return status == Status::kOptimal; }
};

// Strictly feasible primal point, used as the starting iterate when given.
struct PrimalStart {
  std::vector<Eigen::MatrixXd> x_psd;
  Eigen::VectorXd x_lin;
};

// Infeasible-start Mehrotra predictor-corrector with the HKM direction and
// a dense Schur complement.
Result solve(const Problem& problem, const Options& options,
             const PrimalStart* start = nullptr);

}  // namespace exactq::conic
