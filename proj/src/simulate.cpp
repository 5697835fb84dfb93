#include "exactq/simulate.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "exactq/linalg.hpp"

namespace exactq::sim {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

// U on H_in (x) H_work, extended by the identity on the output qubit.
MatrixXcd extend_by_output(const MatrixXcd& u) {
  const int d = static_cast<int>(u.rows());
  MatrixXcd out = MatrixXcd::Zero(2 * d, 2 * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      out(2 * r, 2 * c) = u(r, c);
      out(2 * r + 1, 2 * c + 1) = u(r, c);
    }
  return out;
}

// projector * X_out + (I - projector) * I_out; flips the output qubit
// exactly on the given subspace of H_in (x) H_work.
MatrixXcd flip_output_on(const MatrixXcd& projector) {
  const int d = static_cast<int>(projector.rows());
  MatrixXcd out = MatrixXcd::Zero(2 * d, 2 * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      complex<double> p = projector(r, c);
      complex<double> q = (r == c ? complex<double>(1.0) : complex<double>(0.0)) - p;
      out(2 * r + 1, 2 * c) = p;
      out(2 * r, 2 * c + 1) = p;
      out(2 * r, 2 * c) = q;
      out(2 * r + 1, 2 * c + 1) = q;
    }
  return out;
}

MatrixXcd prepare_from_zero(const VectorXcd& target) {
  MatrixXcd col(target.size(), 1);
  col.col(0) = target.normalized();
  return linalg::complete_isometry(MatrixXcd(col));
}

void apply_oracle(const QueryAlgorithm& alg, int x, VectorXcd& state) {
  const int n = alg.arity();
  for (int i = 1; i <= n; ++i) {
    if (!boolfn::BooleanFunction::input_bit(x, i, n)) continue;
    for (int a = 0; a < alg.dim_work; ++a)
      for (int o = 0; o < 2; ++o) {
        int idx = alg.flat_index(i, a, o);
        state[idx] = -state[idx];
      }
  }
}

}  // namespace

namespace {

VectorXcd evolve(const QueryAlgorithm& alg, int x) {
  if (x < 0 || x >= (1 << alg.arity())) throw RangeError("input index out of range");
  VectorXcd state = VectorXcd::Zero(alg.total_dim());
  state[alg.flat_index(0, 0, 0)] = 1.0;
  state = alg.unitaries[0] * state;
  for (int j = 1; j <= alg.t; ++j) {
    apply_oracle(alg, x, state);
    state = alg.unitaries[j] * state;
  }
  return state;
}

OutputDistribution measure(const QueryAlgorithm& alg, const VectorXcd& state) {
  OutputDistribution dist;
  for (int i = 0; i < alg.dim_in; ++i)
    for (int a = 0; a < alg.dim_work; ++a) {
      dist.p0 += std::norm(state[alg.flat_index(i, a, 0)]);
      dist.p1 += std::norm(state[alg.flat_index(i, a, 1)]);
    }
  return dist;
}

}  // namespace

Eigen::VectorXcd final_state(const QueryAlgorithm& alg, int x) {
  alg.validate();
  return evolve(alg, x);
}

OutputDistribution run(const QueryAlgorithm& alg, int x) {
  alg.validate();
  return measure(alg, evolve(alg, x));
}

OutputDistribution run_unchecked(const QueryAlgorithm& alg, int x) {
  return measure(alg, evolve(alg, x));
}

double min_success(const QueryAlgorithm& alg, const BooleanFunction& f) {
  if (f.arity() != alg.arity()) throw ShapeError("function arity does not match the algorithm");
  alg.validate();
  double worst = 1.0;
  for (int x = 0; x < f.table_size(); ++x) {
    OutputDistribution d = run_unchecked(alg, x);
    worst = std::min(worst, f.value_at(x) ? d.p1 : d.p0);
  }
  return worst;
}

double min_success(const PromiseAlgorithm& pa) {
  if (pa.f.arity() != pa.alg.arity()) throw ShapeError("promise arity mismatch");
  pa.alg.validate();
  double worst = 1.0;
  for (int x : pa.domain) {
    OutputDistribution d = run_unchecked(pa.alg, x);
    worst = std::min(worst, pa.f.value_at(x) ? d.p1 : d.p0);
  }
  return worst;
}

Eigen::MatrixXcd exact2_core_unitary() {
  const complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
  const complex<double> w2 = std::polar(1.0, 4.0 * M_PI / 3.0);
  MatrixXcd u(5, 5);
  u << 0, 1, 1, 1, 1,
       1, 0, 1, w, w2,
       1, 1, 0, w2, w,
       1, w, w2, 0, 1,
       1, w2, w, 1, 0;
  return 0.5 * u;
}

Eigen::VectorXcd exact2_core_state() {
  VectorXcd psi = VectorXcd::Zero(5);
  for (int i = 1; i <= 4; ++i) psi[i] = 0.5;
  return psi;
}

QueryAlgorithm exact2_algorithm() {
  QueryAlgorithm alg;
  alg.t = 2;
  alg.dim_in = 5;
  alg.dim_work = 1;
  VectorXcd psi = exact2_core_state();
  VectorXcd start = VectorXcd::Zero(10);
  for (int i = 0; i < 5; ++i) start[2 * i] = psi[i];
  alg.unitaries.push_back(prepare_from_zero(start));
  alg.unitaries.push_back(extend_by_output(exact2_core_unitary()));
  alg.unitaries.push_back(flip_output_on(MatrixXcd(psi * psi.adjoint())));
  return alg;
}

BalancedCoefficients balanced_coefficients(int n) {
  if (n < 4 || n % 2 != 0) throw ParameterError("balanced algorithm needs even n >= 4");
  BalancedCoefficients c;
  c.c = -1.0 / (n - 1);
  c.alpha_sq = (std::pow(n, 3) - 6.0 * n * n + 12.0 * n - 12.0) / (n * (n - 2.0));
  c.beta = 2.0 * (n - 1) / (n * std::sqrt(n - 2.0));
  c.gamma = -2.0 / std::sqrt(n - 2.0);
  return c;
}

BalancedCore balanced_core(int n) {
  BalancedCoefficients cf = balanced_coefficients(n);
  const int din = n + 1, dwork = n, dim = din * dwork;

  // ancilla vectors: unit simplex directions with pairwise overlap c,
  // plus the all-ones direction playing the role of |0>_anc
  std::vector<VectorXd> a(n);
  for (int i = 0; i < n; ++i) {
    a[i] = VectorXd::Constant(n, -1.0 / n);
    a[i][i] = (n - 1.0) / n;
    a[i] *= std::sqrt(double(n) / (n - 1.0));
  }
  VectorXd anc0 = VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));

  auto embed = [&](int in_level, const VectorXd& anc) {
    VectorXd v = VectorXd::Zero(dim);
    v.segment(in_level * dwork, dwork) = anc;
    return v;
  };
  VectorXd phi = VectorXd::Zero(dim);
  for (int i = 1; i <= n; ++i) phi += embed(i, anc0);

  // |tau_i> = O_{e_i} |phi> and its image under the defining isometry
  const double alpha = std::sqrt(cf.alpha_sq);
  MatrixXd taus(dim, n), targets(dim, n);
  for (int i = 1; i <= n; ++i) {
    VectorXd tau = phi - 2.0 * embed(i, anc0);
    VectorXd tgt = alpha * embed(0, anc0) + cf.gamma * embed(i, a[0]);
    for (int j = 1; j <= n; ++j) tgt += cf.beta * embed(j, a[((j - i) % n + n) % n]);
    taus.col(i - 1) = tau;
    targets.col(i - 1) = tgt;
  }
  BalancedCore core;
  core.dim_in = din;
  core.dim_work = dwork;
  core.phi = phi;
  core.unitary = linalg::transition_unitary(targets, taus, 1e-9);
  return core;
}

PromiseAlgorithm balanced_algorithm(int n) {
  BalancedCore core = balanced_core(n);
  const int dim = core.dim_in * core.dim_work;

  QueryAlgorithm alg;
  alg.t = 2;
  alg.dim_in = core.dim_in;
  alg.dim_work = core.dim_work;
  VectorXcd start = VectorXcd::Zero(2 * dim);
  VectorXd phin = core.phi.normalized();
  for (int k = 0; k < dim; ++k) start[2 * k] = phin[k];
  alg.unitaries.push_back(prepare_from_zero(start));
  alg.unitaries.push_back(extend_by_output(core.unitary.cast<complex<double>>()));

  // measurement subspace: span of V_z|phi> over the extreme-weight inputs
  auto oracle_diag = [&](int x) {
    VectorXd d = VectorXd::Ones(dim);
    for (int i = 1; i <= n; ++i)
      if (boolfn::BooleanFunction::input_bit(x, i, n))
        d.segment(i * core.dim_work, core.dim_work).array() *= -1.0;
    return d;
  };
  std::vector<int> extreme, domain;
  for (int x = 0; x < (1 << n); ++x) {
    int w = std::popcount(static_cast<unsigned>(x));
    if (w == 0 || w == 1 || w == n - 1 || w == n) {
      extreme.push_back(x);
      domain.push_back(x);
    } else if (w == n / 2) {
      domain.push_back(x);
    }
  }
  MatrixXd images(dim, extreme.size());
  for (std::size_t k = 0; k < extreme.size(); ++k) {
    VectorXd d = oracle_diag(extreme[k]);
    images.col(k) = d.asDiagonal() * (core.unitary * (d.asDiagonal() * core.phi));
  }
  Eigen::JacobiSVD<MatrixXd> svd(images, Eigen::ComputeThinU);
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > 1e-9 * svd.singularValues()[0]) ++rank;
  MatrixXd qw = svd.matrixU().leftCols(rank);
  alg.unitaries.push_back(flip_output_on((qw * qw.transpose()).cast<complex<double>>()));

  PromiseAlgorithm pa;
  pa.alg = std::move(alg);
  std::vector<std::uint8_t> sym(n + 1, 0);
  sym[0] = sym[1] = sym[n - 1] = sym[n] = 1;
  pa.f = boolfn::from_family({boolfn::Family::kSym, 0, sym}, n);
  pa.domain = std::move(domain);
  return pa;
}

QueryAlgorithm parity2_algorithm() {
  QueryAlgorithm alg;
  alg.t = 1;
  alg.dim_in = 3;
  alg.dim_work = 1;
  const double s = 1.0 / std::sqrt(2.0);
  // columns: the two post-oracle states and their target encodings
  MatrixXcd phi = MatrixXcd::Zero(6, 2), psi = MatrixXcd::Zero(6, 2);
  phi(2, 0) = s;  // (|1> + |2>)/sqrt 2, output still |0>
  phi(4, 0) = s;
  phi(2, 1) = s;  // (|1> - |2>)/sqrt 2
  phi(4, 1) = -s;
  psi(2, 0) = 1.0;  // |1>|0>_out : answer 0
  psi(5, 1) = 1.0;  // |2>|1>_out : answer 1
  VectorXcd start = VectorXcd::Zero(6);
  start[2] = s;
  start[4] = s;
  alg.unitaries.push_back(prepare_from_zero(start));
  alg.unitaries.push_back(linalg::transition_unitary(psi, phi, 1e-12));
  return alg;
}

}  // namespace exactq::sim
