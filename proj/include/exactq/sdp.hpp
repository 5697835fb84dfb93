#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exactq/boolfn.hpp"
#include "exactq/conic.hpp"

namespace exactq::sdp {

using boolfn::BooleanFunction;

// The t-query feasibility program for f: find PSD M_i^(j) (0<=i<=n,
// 0<=j<t), Gamma_0, Gamma_1 of dimension 2^n with
//   sum_i M_i^(0) = E_0,
//   sum_i M_i^(j) = sum_i E_i o M_i^(j-1)        (1 <= j <= t-1),
//   Gamma_0 + Gamma_1 = sum_i E_i o M_i^(t-1),
//   diag(Gamma_z) >= (1-eps) on f^{-1}(z),
// where <x|E_i|y> = (-1)^{x_i+y_i} and o is the entrywise product. The
// minimal eps is one minus the best t-query success probability.
struct SdpInstance {
  BooleanFunction f;
  int t = 1;

  int n() const { return f.arity(); }
  int dim() const { return 1 << f.arity(); }

  // sign vector s_i with E_i = s_i s_i^T; index 0 is the null query
  Eigen::VectorXd oracle_signs(int i) const;
  Eigen::MatrixXd oracle_sign_matrix(int i) const;  // E_i
  Eigen::VectorXd f_mask(int z) const;              // diagonal of F_z
};

SdpInstance build_instance(const BooleanFunction& f, int t);

struct SolverConfig {
  double opt_tol = 1e-5;
  double feas_tol = 1e-7;
  int max_iters = 100;
  double time_limit_seconds = 600.0;
  bool verbose = false;

  // Populated from the EXACTQ_TOL environment variable when set.
  static SolverConfig from_environment();
};

struct SdpSolution {
  int n = 0;
  int t = 0;
  std::string function_id;
  double eps = 1.0;
  std::vector<std::vector<Eigen::MatrixXd>> m;  // m[j][i], j = 0..t-1, i = 0..n
  Eigen::MatrixXd gamma0, gamma1;
};

// Minimise eps by an interior-point solve of the reduced program; the
// returned matrices are expanded back to full dimension 2^n.
SdpSolution solve_min_error(const SdpInstance& inst, const SolverConfig& cfg = {});

// Independent route: bisection on eps, each step a feasibility solve that
// maximises the cone margin at fixed eps. Returns the located eps to
// within +-width.
double bisection_min_error(const SdpInstance& inst, const SolverConfig& cfg = {},
                           double width = 1e-4);

struct ResidualReport {
  double eq_initial = 0.0;              // constraint (1)
  std::vector<double> eq_propagate;     // constraint (2), per level
  double eq_output = 0.0;               // constraint (3)
  double output_violation = 0.0;        // constraints (4)-(5)
  double min_eigenvalue = 0.0;          // most negative over all blocks
  double worst() const;
  bool passes(double tol) const { return worst() <= tol; }
  std::string summary() const;
};

ResidualReport verify_solution(const SdpInstance& inst, const SdpSolution& sol, double tol);

// The two exact two-query solutions for 3-bit functions 7 and 67, built
// from their eigensystems.
SdpSolution fixture_function7();
SdpSolution fixture_function67();

std::string to_json(const SdpSolution& sol);
SdpSolution solution_from_json(const std::string& text);

}  // namespace exactq::sdp
