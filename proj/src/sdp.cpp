#include "exactq/sdp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace exactq::sdp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int popcount(int v) { return std::popcount(static_cast<unsigned>(v)); }

// Subset masks share the input-index bit layout: variable i sits at bit
// n-i, so the character value chi_S(x) is just a popcount of S & x.
double character(int subset, int x) { return (popcount(subset & x) & 1) ? -1.0 : 1.0; }

// Every feasible point of the program has M_i^(j) supported on
// span{chi_S : |S| <= j}: constraint (1) pins level 0 to the all-ones
// direction, and the entrywise products with E_i move supports by at most
// one character weight per query. Solving in that basis keeps the primal
// strictly feasible (the full-dimensional program has empty interior) and
// shrinks the blocks; expansion back to dimension 2^n is exact.
struct ReducedModel {
  int n = 0, t = 0, dim = 0;
  std::vector<std::vector<int>> levels;     // masks per level 0..t
  std::vector<std::vector<int>> positions;  // mask -> index in level, -1 if absent
  std::vector<VectorXd> rho;                // rows of B_t, one per input x

  int blocks_per_level() const { return n + 1; }
  int block_index(int j, int i) const { return j * (n + 1) + i; }
  int gamma_block(int z) const { return t * (n + 1) + z; }
  int level_size(int j) const { return static_cast<int>(levels[j].size()); }

  // mask of variable i as an input-index bit; i = 0 is the null query
  int var_bit(int i) const { return i == 0 ? 0 : 1 << (n - i); }
};

ReducedModel make_model(const SdpInstance& inst) {
  ReducedModel mdl;
  mdl.n = inst.n();
  mdl.t = inst.t;
  mdl.dim = inst.dim();
  mdl.levels.resize(mdl.t + 1);
  mdl.positions.assign(mdl.t + 1, std::vector<int>(mdl.dim, -1));
  for (int j = 0; j <= mdl.t; ++j) {
    for (int w = 0; w <= std::min(j, mdl.n); ++w)
      for (int mask = 0; mask < mdl.dim; ++mask)
        if (popcount(mask) == w) mdl.levels[j].push_back(mask);
    for (std::size_t r = 0; r < mdl.levels[j].size(); ++r)
      mdl.positions[j][mdl.levels[j][r]] = static_cast<int>(r);
  }
  const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(mdl.dim));
  mdl.rho.resize(mdl.dim);
  for (int x = 0; x < mdl.dim; ++x) {
    VectorXd r(mdl.level_size(mdl.t));
    for (int k = 0; k < r.size(); ++k) r[k] = character(mdl.levels[mdl.t][k], x) * inv_sqrt_dim;
    mdl.rho[x] = r;
  }
  return mdl;
}

// Shared constraint rows (1)-(5); the eps handling differs between the
// direct and bisection paths, so the diagonal rows take the lin entries
// as a callback.
conic::Problem base_problem(const SdpInstance& inst, const ReducedModel& mdl) {
  conic::Problem pb;
  const int n = mdl.n, t = mdl.t;
  for (int j = 0; j < t; ++j)
    for (int i = 0; i <= n; ++i) pb.psd_dims.push_back(mdl.level_size(j));
  pb.psd_dims.push_back(mdl.level_size(t));
  pb.psd_dims.push_back(mdl.level_size(t));

  // (1): sum_i X_i^(0) = 2^n in the one-dimensional level-0 space
  {
    conic::Row row;
    for (int i = 0; i <= n; ++i)
      row.psd.push_back({mdl.block_index(0, i), {{0, 0, 1.0}}, {}});
    row.rhs = static_cast<double>(mdl.dim);
    pb.rows.push_back(std::move(row));
  }
  // (2) for 1<=j<=t-1 and (3) for j=t, entry by entry
  for (int j = 1; j <= t; ++j) {
    const auto& cur = mdl.levels[j];
    for (std::size_t r = 0; r < cur.size(); ++r) {
      for (std::size_t q = r; q < cur.size(); ++q) {
        conic::Row row;
        if (j < t) {
          for (int i = 0; i <= n; ++i)
            row.psd.push_back({mdl.block_index(j, i),
                               {{static_cast<int>(r), static_cast<int>(q), 1.0}},
                               {}});
        } else {
          row.psd.push_back({mdl.gamma_block(0), {{(int)r, (int)q, 1.0}}, {}});
          row.psd.push_back({mdl.gamma_block(1), {{(int)r, (int)q, 1.0}}, {}});
        }
        for (int i = 0; i <= n; ++i) {
          int c = mdl.positions[j - 1][cur[r] ^ mdl.var_bit(i)];
          int c2 = mdl.positions[j - 1][cur[q] ^ mdl.var_bit(i)];
          if (c < 0 || c2 < 0) continue;
          row.psd.push_back({mdl.block_index(j - 1, i),
                             {{std::min(c, c2), std::max(c, c2), -1.0}},
                             {}});
        }
        pb.rows.push_back(std::move(row));
      }
    }
  }
  // (4)-(5): <rho_x rho_x^T, Gamma_{f(x)}>; lin parts appended by caller
  for (int x = 0; x < mdl.dim; ++x) {
    conic::Row row;
    row.psd.push_back({mdl.gamma_block(inst.f.value_at(x) ? 1 : 0), {}, mdl.rho[x]});
    row.rhs = 1.0;
    pb.rows.push_back(std::move(row));
  }
  return pb;
}

int diag_row_offset(const ReducedModel& mdl) {
  int off = 1;
  for (int j = 1; j <= mdl.t; ++j) {
    int s = mdl.level_size(j);
    off += s * (s + 1) / 2;
  }
  return off;
}

// Strictly feasible primal start: split the propagated right-hand side
// evenly across the n+1 blocks at every level.
conic::PrimalStart feasible_start(const SdpInstance& inst, const ReducedModel& mdl) {
  const int n = mdl.n, t = mdl.t;
  conic::PrimalStart st;
  st.x_psd.resize(t * (n + 1) + 2);  // M blocks plus the two gammas
  MatrixXd carry = MatrixXd::Constant(1, 1, static_cast<double>(mdl.dim));
  for (int j = 0; j < t; ++j) {
    MatrixXd share = carry / static_cast<double>(n + 1);
    for (int i = 0; i <= n; ++i) st.x_psd[mdl.block_index(j, i)] = share;
    // carry to the next level: sum_i T_{i,j+1} share T_{i,j+1}^T
    const auto& next = mdl.levels[j + 1];
    MatrixXd prop = MatrixXd::Zero(next.size(), next.size());
    for (int i = 0; i <= n; ++i) {
      for (std::size_t r = 0; r < next.size(); ++r) {
        int c = mdl.positions[j][next[r] ^ mdl.var_bit(i)];
        if (c < 0) continue;
        for (std::size_t q = 0; q < next.size(); ++q) {
          int c2 = mdl.positions[j][next[q] ^ mdl.var_bit(i)];
          if (c2 < 0) continue;
          prop(r, q) += share(c, c2);
        }
      }
    }
    carry = prop;
  }
  st.x_psd[mdl.gamma_block(0)] = carry / 2.0;
  st.x_psd[mdl.gamma_block(1)] = carry / 2.0;

  double min_diag = std::numeric_limits<double>::infinity();
  for (int x = 0; x < mdl.dim; ++x)
    min_diag = std::min(min_diag, 0.5 * mdl.rho[x].dot(carry * mdl.rho[x]));
  double eps0 = std::max(0.5, 1.0 - 0.5 * min_diag);
  st.x_lin.resize(mdl.dim + 1);
  for (int x = 0; x < mdl.dim; ++x) {
    double dx = 0.5 * mdl.rho[x].dot(carry * mdl.rho[x]);
    st.x_lin[x] = dx - 1.0 + eps0;
  }
  st.x_lin[mdl.dim] = eps0;
  return st;
}

MatrixXd basis_matrix(const ReducedModel& mdl, int level) {
  const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(mdl.dim));
  MatrixXd b(mdl.dim, mdl.level_size(level));
  for (int x = 0; x < mdl.dim; ++x)
    for (int r = 0; r < b.cols(); ++r)
      b(x, r) = character(mdl.levels[level][r], x) * inv_sqrt_dim;
  return b;
}

conic::Options conic_options(const SolverConfig& cfg) {
  conic::Options opt;
  opt.max_iterations = cfg.max_iters;
  opt.feas_tol = cfg.feas_tol * 1e-2;
  opt.gap_tol = std::max(1e-9, cfg.opt_tol * 1e-3);
  opt.time_limit_seconds = cfg.time_limit_seconds;
  opt.verbose = cfg.verbose;
  return opt;
}

}  // namespace

Eigen::VectorXd SdpInstance::oracle_signs(int i) const {
  if (i < 0 || i > n()) throw RangeError("oracle index out of range");
  VectorXd s(dim());
  for (int x = 0; x < dim(); ++x)
    s[x] = (i > 0 && BooleanFunction::input_bit(x, i, n())) ? -1.0 : 1.0;
  return s;
}

Eigen::MatrixXd SdpInstance::oracle_sign_matrix(int i) const {
  VectorXd s = oracle_signs(i);
  return s * s.transpose();
}

Eigen::VectorXd SdpInstance::f_mask(int z) const {
  VectorXd d(dim());
  for (int x = 0; x < dim(); ++x) d[x] = (f.value_at(x) == (z == 1)) ? 1.0 : 0.0;
  return d;
}

SdpInstance build_instance(const BooleanFunction& f, int t) {
  if (f.arity() < 1 || f.arity() > 6)
    throw CapacityError("query SDP supported for 1 <= n <= 6");
  if (t < 1 || t > f.arity())
    throw ParameterError("query count t must satisfy 1 <= t <= n");
  return SdpInstance{f, t};
}

SolverConfig SolverConfig::from_environment() {
  SolverConfig cfg;
  if (const char* env = std::getenv("EXACTQ_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && v < 1) {
      cfg.opt_tol = v;
      cfg.feas_tol = v * 1e-2;
    }
  }
  return cfg;
}

SdpSolution solve_min_error(const SdpInstance& inst, const SolverConfig& cfg) {
  ReducedModel mdl = make_model(inst);
  conic::Problem pb = base_problem(inst, mdl);
  pb.num_lin = mdl.dim + 1;  // slack per input, then eps
  const int eps_idx = mdl.dim;
  const int diag0 = diag_row_offset(mdl);
  for (int x = 0; x < mdl.dim; ++x) {
    pb.rows[diag0 + x].lin = {{eps_idx, 1.0}, {x, -1.0}};
  }
  pb.lin_objective = {{eps_idx, 1.0}};

  conic::PrimalStart start = feasible_start(inst, mdl);
  conic::Result res = conic::solve(pb, conic_options(cfg), &start);
  if (res.status == conic::Status::kTimeLimit)
    throw SolverFailure("SDP solve hit the time limit", res.primal_residual, res.dual_residual,
                        res.primal_objective - res.dual_objective);
  double gap = std::abs(res.primal_objective - res.dual_objective);
  if (!res.converged() &&
      (res.primal_residual > cfg.feas_tol || res.dual_residual > cfg.feas_tol ||
       gap > cfg.opt_tol))
    throw SolverFailure("SDP solve did not converge: final residuals " +
                            std::to_string(res.primal_residual) + " / " +
                            std::to_string(res.dual_residual),
                        res.primal_residual, res.dual_residual, gap);

  SdpSolution sol;
  sol.n = mdl.n;
  sol.t = mdl.t;
  sol.function_id = inst.f.id_string();
  sol.eps = res.x_lin[eps_idx];
  sol.m.assign(mdl.t, std::vector<MatrixXd>(mdl.n + 1));
  for (int j = 0; j < mdl.t; ++j) {
    MatrixXd b = basis_matrix(mdl, j);
    for (int i = 0; i <= mdl.n; ++i)
      sol.m[j][i] = b * res.x_psd[mdl.block_index(j, i)] * b.transpose();
  }
  MatrixXd bt = basis_matrix(mdl, mdl.t);
  sol.gamma0 = bt * res.x_psd[mdl.gamma_block(0)] * bt.transpose();
  sol.gamma1 = bt * res.x_psd[mdl.gamma_block(1)] * bt.transpose();
  return sol;
}

double bisection_min_error(const SdpInstance& inst, const SolverConfig& cfg, double width) {
  ReducedModel mdl = make_model(inst);
  const int diag0 = diag_row_offset(mdl);

  // Feasibility of a fixed eps is decided by maximising the margin delta
  // with every cone coordinate shifted: x = w + delta*e. delta >= 0 at the
  // optimum iff the program is feasible. delta is boxed to [-1, 2] via
  // d = delta + 1 >= 0 and a slack row.
  auto feasible = [&](double eps) {
    conic::Problem pb = base_problem(inst, mdl);
    pb.num_lin = mdl.dim + 2;  // slacks, d, box slack
    const int d_idx = mdl.dim, box_idx = mdl.dim + 1;
    for (int x = 0; x < mdl.dim; ++x) {
      pb.rows[diag0 + x].lin = {{x, -1.0}};
      pb.rows[diag0 + x].rhs = 1.0 - eps;
    }
    for (auto& row : pb.rows) {
      double shift = 0.0;
      for (const auto& bc : row.psd) {
        if (bc.rank1.size())
          shift += bc.rank1.squaredNorm();
        else
          for (auto [p, q, c] : bc.entries)
            if (p == q) shift += c;
      }
      for (auto [i, c] : row.lin) shift += c;
      if (shift != 0.0) row.lin.push_back({d_idx, shift});
      row.rhs += shift;
    }
    conic::Row box;
    box.lin = {{d_idx, 1.0}, {box_idx, 1.0}};
    box.rhs = 3.0;
    pb.rows.push_back(std::move(box));
    pb.lin_objective = {{d_idx, -1.0}};

    SolverConfig inner = cfg;
    inner.opt_tol = std::min(cfg.opt_tol, 1e-5);
    conic::Result res = conic::solve(pb, conic_options(inner), nullptr);
    if (res.status == conic::Status::kTimeLimit)
      throw SolverFailure("bisection step hit the time limit", res.primal_residual,
                          res.dual_residual, 0.0);
    return res.x_lin[d_idx] - 1.0 >= 0.0;
  };

  double lo = 0.0, hi = 1.0;
  if (feasible(0.0)) return 0.0;
  while (hi - lo > width) {
    double mid = (lo + hi) / 2.0;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2.0;
}

ResidualReport verify_solution(const SdpInstance& inst, const SdpSolution& sol, double tol) {
  const int n = inst.n(), t = inst.t, dim = inst.dim();
  if (sol.n != n || sol.t != t || static_cast<int>(sol.m.size()) != t)
    throw ShapeError("solution shape does not match the instance");
  for (const auto& level : sol.m) {
    if (static_cast<int>(level.size()) != n + 1) throw ShapeError("expected n+1 blocks per level");
    for (const auto& mat : level)
      if (mat.rows() != dim || mat.cols() != dim) throw ShapeError("block dimension mismatch");
  }
  if (sol.gamma0.rows() != dim || sol.gamma1.rows() != dim)
    throw ShapeError("gamma dimension mismatch");

  ResidualReport rep;
  auto max_abs = [](const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); };

  MatrixXd acc = MatrixXd::Zero(dim, dim);
  for (int i = 0; i <= n; ++i) acc += sol.m[0][i];
  rep.eq_initial = max_abs(acc - MatrixXd::Ones(dim, dim));

  std::vector<MatrixXd> signs;
  for (int i = 0; i <= n; ++i) signs.push_back(inst.oracle_sign_matrix(i));
  auto propagated = [&](int j) {
    MatrixXd rhs = MatrixXd::Zero(dim, dim);
    for (int i = 0; i <= n; ++i) rhs += signs[i].cwiseProduct(sol.m[j][i]);
    return rhs;
  };
  for (int j = 1; j < t; ++j) {
    MatrixXd lhs = MatrixXd::Zero(dim, dim);
    for (int i = 0; i <= n; ++i) lhs += sol.m[j][i];
    rep.eq_propagate.push_back(max_abs(lhs - propagated(j - 1)));
  }
  rep.eq_output = max_abs(sol.gamma0 + sol.gamma1 - propagated(t - 1));

  double viol = 0.0;
  for (int x = 0; x < dim; ++x) {
    const MatrixXd& g = inst.f.value_at(x) ? sol.gamma1 : sol.gamma0;
    viol = std::max(viol, (1.0 - sol.eps) - g(x, x));
  }
  rep.output_violation = std::max(0.0, viol);

  double min_eig = std::numeric_limits<double>::infinity();
  auto track = [&](const MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig((m + m.transpose()) / 2.0,
                                                Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
  };
  for (const auto& level : sol.m)
    for (const auto& mat : level) track(mat);
  track(sol.gamma0);
  track(sol.gamma1);
  rep.min_eigenvalue = min_eig;

  (void)tol;
  return rep;
}

double ResidualReport::worst() const {
  double w = std::max({eq_initial, eq_output, output_violation, std::max(0.0, -min_eigenvalue)});
  for (double v : eq_propagate) w = std::max(w, v);
  return w;
}

std::string ResidualReport::summary() const {
  std::ostringstream os;
  os << "eq1 " << eq_initial;
  for (std::size_t j = 0; j < eq_propagate.size(); ++j)
    os << "  eq2[" << (j + 1) << "] " << eq_propagate[j];
  os << "  eq3 " << eq_output << "  output " << output_violation << "  min-eig "
     << min_eigenvalue;
  return os.str();
}

namespace {

struct EigenGroup {
  double value;
  std::vector<VectorXd> vectors;
};

// Vectors printed for one eigenvalue span its eigenspace but need not be
// orthogonal; build value * projector onto their span.
MatrixXd from_eigengroups(const std::vector<EigenGroup>& groups, int dim) {
  MatrixXd m = MatrixXd::Zero(dim, dim);
  for (const auto& g : groups) {
    std::vector<VectorXd> basis;
    for (const auto& raw : g.vectors) {
      VectorXd v = raw;
      for (const auto& b : basis) v -= b.dot(v) * b;
      v.normalize();
      basis.push_back(v);
    }
    for (const auto& b : basis) m.noalias() += g.value * b * b.transpose();
  }
  return m;
}

VectorXd vec8(std::initializer_list<double> v) {
  VectorXd out(8);
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

SdpSolution assemble_fixture(std::uint64_t id, const std::vector<std::vector<EigenGroup>>& m1,
                             const std::vector<EigenGroup>& g0,
                             const std::vector<EigenGroup>& g1) {
  SdpSolution sol;
  sol.n = 3;
  sol.t = 2;
  sol.function_id = std::to_string(id);
  sol.eps = 0.0;
  sol.m.assign(2, std::vector<MatrixXd>(4));
  for (int i = 0; i <= 3; ++i)
    sol.m[0][i] = from_eigengroups({{2.0, {vec8({1, 1, 1, 1, 1, 1, 1, 1})}}}, 8);
  // The printed level-1 blocks pair with the oracle indices in reverse:
  // listed block 1 belongs to variable 3 and vice versa.
  const int reorder[4] = {0, 3, 2, 1};
  for (int printed = 0; printed <= 3; ++printed)
    sol.m[1][reorder[printed]] = from_eigengroups(m1[printed], 8);
  sol.gamma0 = from_eigengroups(g0, 8);
  sol.gamma1 = from_eigengroups(g1, 8);
  return sol;
}

}  // namespace

SdpSolution fixture_function7() {
  std::vector<std::vector<EigenGroup>> m1 = {
      {{1.5, {vec8({1, 1, 1, 1, 0, 0, 0, 0})}},
       {1.0, {vec8({-1, 1, -1, 1, 0, 2, 0, 2}), vec8({0, -1, 1, 0, 0, -1, 1, 0})}}},
      {{1.0, {vec8({1, 0, 0, -1, 2, 1, 1, 0})}}, {0.5, {vec8({-1, 0, -1, 0, 0, 1, 0, 1})}}},
      {{1.0, {vec8({1, 0, 0, -1, 2, 1, 1, 0})}}, {0.5, {vec8({-1, -1, 0, 0, 0, 0, 1, 1})}}},
      {{0.75, {vec8({0, 1, 0, 1, 0, 1, 0, 1}), vec8({0, -1, 1, 0, 0, -1, 1, 0})}}},
  };
  std::vector<EigenGroup> g0 = {
      {2.5, {vec8({3, 2, 2, 3, 2, 0, 0, 0})}},
      {1.0, {vec8({0, -1, 0, 0, 1, 0, 0, 0}), vec8({0, -1, 1, 0, 0, 0, 0, 0})}},
      {0.5, {vec8({-1, 0, 0, 1, 0, 0, 0, 0})}},
  };
  std::vector<EigenGroup> g1 = {
      {1.5, {vec8({0, 0, 0, 0, 0, 1, 0, 1}), vec8({0, 0, 0, 0, 0, -1, 1, 0})}},
  };
  return assemble_fixture(7, m1, g0, g1);
}

SdpSolution fixture_function67() {
  const double s5 = std::sqrt(5.0);
  const double ap = -1.0 + 0.5 * (5.0 + s5);
  const double am = -1.0 + 0.5 * (5.0 - s5);
  std::vector<std::vector<EigenGroup>> m1 = {
      {{1.0, {vec8({-2, -1, -1, 0, -1, 0, 0, 1})}},
       {0.75, {vec8({0, 0, -1, -1, 2, 2, 1, 1})}},
       {0.25, {vec8({0, 0, 1, 1, 0, 0, 1, 1})}}},
      {{1.0, {vec8({-2, -1, -1, 0, -1, 0, 0, 1})}},
       {0.75, {vec8({0, -1, 2, 1, -1, -2, 1, 0})}},
       {0.25, {vec8({0, -1, 0, -1, 1, 0, 1, 0})}}},
      {{1.0, {vec8({0, 1, 1, 2, 1, 2, 2, 3})}},
       {0.75, {vec8({0, -1, 0, -1, 1, 0, 1, 0})}},
       {0.25, {vec8({0, -1, 2, 1, -1, -2, 1, 0})}}},
      {{1.0, {vec8({0, 3, -1, 2, -1, 2, -2, 1})}},
       {0.75, {vec8({0, 0, 1, 1, 0, 0, 1, 1})}},
       {0.25, {vec8({0, 0, -1, -1, 2, 2, 1, 1})}}},
  };
  std::vector<EigenGroup> g0 = {
      {(5.0 + s5) / 4.0, {vec8({1 + s5, 0, ap, 1, ap, 1, 0, 0})}},
      {1.5, {vec8({0, 0, 0, -1, 0, 1, 0, 0})}},
      {1.0, {vec8({0, 0, -1, 0, 1, 0, 0, 0})}},
      {(5.0 - s5) / 4.0, {vec8({1 - s5, 0, am, 1, am, 1, 0, 0})}},
  };
  std::vector<EigenGroup> g1 = {
      {1.5, {vec8({0, -1, 0, 0, 0, 0, 0, 1}), vec8({0, 1, 0, 0, 0, 0, 1, 0})}},
  };
  return assemble_fixture(67, m1, g0, g1);
}

namespace {

nlohmann::json matrix_to_json(const MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw SerializationError("expected a matrix");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  return m;
}

}  // namespace

std::string to_json(const SdpSolution& sol) {
  nlohmann::json j;
  j["n"] = sol.n;
  j["t"] = sol.t;
  j["id"] = sol.function_id;
  j["eps"] = sol.eps;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : sol.m) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& mat : level) blocks.push_back(matrix_to_json(mat));
    levels.push_back(std::move(blocks));
  }
  j["M"] = std::move(levels);
  j["Gamma0"] = matrix_to_json(sol.gamma0);
  j["Gamma1"] = matrix_to_json(sol.gamma1);
  return j.dump();
}

SdpSolution solution_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SerializationError("bad SDP solution JSON");
  SdpSolution sol;
  sol.n = j.at("n").get<int>();
  sol.t = j.at("t").get<int>();
  sol.function_id = j.at("id").get<std::string>();
  sol.eps = j.at("eps").get<double>();
  for (const auto& level : j.at("M")) {
    std::vector<MatrixXd> blocks;
    for (const auto& mat : level) blocks.push_back(matrix_from_json(mat));
    sol.m.push_back(std::move(blocks));
  }
  sol.gamma0 = matrix_from_json(j.at("Gamma0"));
  sol.gamma1 = matrix_from_json(j.at("Gamma1"));
  return sol;
}

}  // namespace exactq::sdp
