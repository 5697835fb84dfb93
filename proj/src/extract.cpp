#include "exactq/extract.hpp"

#include <algorithm>
#include <cmath>

#include "exactq/linalg.hpp"
#include "exactq/simulate.hpp"

namespace exactq::extract {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

}  // namespace

QueryAlgorithm extract_algorithm(const sdp::SdpSolution& sol, bool reduce_rank) {
  auto f = boolfn::BooleanFunction::from_id(sol.n, std::stoull(sol.function_id));
  sdp::SdpInstance inst = sdp::build_instance(f, sol.t);
  sdp::ResidualReport rep = sdp::verify_solution(inst, sol, 1e-6);
  if (!rep.passes(1e-6))
    throw ExtractionError("solution fails verification at 1e-6: " + rep.summary(), -1);
  const double gram_tol = std::max(100.0 * rep.worst(), 1e-9);

  const int n = sol.n, t = sol.t, dim = inst.dim();

  // State factors: P^T P = block, columns are the workspace states.
  std::vector<std::vector<MatrixXd>> fac(t, std::vector<MatrixXd>(n + 1));
  MatrixXd gfac[2];
  int work = dim;
  if (reduce_rank) {
    int max_rank = 1;
    auto factored = [&](const MatrixXd& m) {
      linalg::PsdFactor pf = linalg::psd_factor(m, gram_tol, 1e-8);
      max_rank = std::max(max_rank, pf.rank);
      return pf.factor;
    };
    for (int j = 0; j < t; ++j)
      for (int i = 0; i <= n; ++i) fac[j][i] = factored(sol.m[j][i]);
    gfac[0] = factored(sol.gamma0);
    gfac[1] = factored(sol.gamma1);
    work = max_rank;
    auto pad = [&](MatrixXd& m) {
      MatrixXd out = MatrixXd::Zero(work, dim);
      out.topRows(m.rows()) = m;
      m = out;
    };
    for (auto& level : fac)
      for (auto& m : level) pad(m);
    pad(gfac[0]);
    pad(gfac[1]);
  } else {
    for (int j = 0; j < t; ++j)
      for (int i = 0; i <= n; ++i) fac[j][i] = linalg::psd_sqrt(sol.m[j][i], gram_tol);
    gfac[0] = linalg::psd_sqrt(sol.gamma0, gram_tol);
    gfac[1] = linalg::psd_sqrt(sol.gamma1, gram_tol);
  }

  const int inner = (n + 1) * work;
  auto stacked_states = [&](int j, bool oracle_phase) {
    // columns |psi_x> = sum_i |i> (x) P_i |x>, optionally with the oracle
    // signs (-1)^{x_i} in front (giving |phi_x> for the next transition)
    MatrixXd cols = MatrixXd::Zero(inner, dim);
    for (int x = 0; x < dim; ++x)
      for (int i = 0; i <= n; ++i) {
        double sign = 1.0;
        if (oracle_phase && i >= 1 && boolfn::BooleanFunction::input_bit(x, i, n)) sign = -1.0;
        cols.col(x).segment(i * work, work) = sign * fac[j][i].col(x);
      }
    return cols;
  };

  QueryAlgorithm alg;
  alg.t = t;
  alg.dim_in = n + 1;
  alg.dim_work = work;

  auto push_inner_unitary = [&](const MatrixXd& psi, const MatrixXd& phi, int step) {
    MatrixXd u;
    try {
      u = linalg::transition_unitary(psi, phi, gram_tol);
    } catch (const GramMismatchError& e) {
      throw ExtractionError("Gram mismatch at transition " + std::to_string(step) + ": " +
                                e.what(),
                            step);
    }
    MatrixXcd full = MatrixXcd::Zero(2 * inner, 2 * inner);
    for (int r = 0; r < inner; ++r)
      for (int c = 0; c < inner; ++c) {
        full(2 * r, 2 * c) = u(r, c);
        full(2 * r + 1, 2 * c + 1) = u(r, c);
      }
    alg.unitaries.push_back(std::move(full));
  };

  // U_0 maps the initial basis state to the time-0 states.
  MatrixXd phi0 = MatrixXd::Zero(inner, dim);
  for (int x = 0; x < dim; ++x) phi0(0, x) = 1.0;
  push_inner_unitary(stacked_states(0, false), phi0, 0);
  for (int j = 1; j < t; ++j)
    push_inner_unitary(stacked_states(j, false), stacked_states(j - 1, true), j);

  // Final unitary acts on the output qubit too: phi_x^(t) |0>_out maps to
  // |0>(sqrt Gamma_0 |x>)|0> + |0>(sqrt Gamma_1 |x>)|1>.
  MatrixXd phit = stacked_states(t - 1, true);
  MatrixXd phi_full = MatrixXd::Zero(2 * inner, dim);
  MatrixXd gamma_full = MatrixXd::Zero(2 * inner, dim);
  for (int x = 0; x < dim; ++x) {
    for (int k = 0; k < inner; ++k) phi_full(2 * k, x) = phit(k, x);
    for (int a = 0; a < work; ++a) {
      gamma_full(2 * a, x) = gfac[0](a, x);
      gamma_full(2 * a + 1, x) = gfac[1](a, x);
    }
  }
  MatrixXd ut;
  try {
    ut = linalg::transition_unitary(gamma_full, phi_full, gram_tol);
  } catch (const GramMismatchError& e) {
    throw ExtractionError(std::string("Gram mismatch at the output transition: ") + e.what(), t);
  }
  alg.unitaries.push_back(ut.cast<std::complex<double>>());
  return alg;
}

Eigen::VectorXd success_profile(const QueryAlgorithm& alg, const boolfn::BooleanFunction& f) {
  if (f.arity() != alg.arity()) throw ShapeError("arity mismatch");
  alg.validate();
  VectorXd profile(f.table_size());
  for (int x = 0; x < f.table_size(); ++x) {
    sim::OutputDistribution d = sim::run_unchecked(alg, x);
    profile[x] = f.value_at(x) ? d.p1 : d.p0;
  }
  return profile;
}

}  // namespace exactq::extract
