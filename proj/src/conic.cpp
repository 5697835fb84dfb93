#include "exactq/conic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

namespace exactq::conic {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct BlockRef {
  int row;
  const BlockCoeff* coef;
};

struct Workspace {
  const Problem& pb;
  int m, p, nu;  // rows, psd blocks, barrier degree
  double b_scale, c_scale;
  VectorXd b, c_lin;
  std::vector<std::vector<BlockRef>> block_rows;              // per block, row-sorted
  std::vector<std::vector<std::pair<int, double>>> lin_rows;  // per lin coordinate

  explicit Workspace(const Problem& problem) : pb(problem) {
    m = static_cast<int>(pb.rows.size());
    p = static_cast<int>(pb.psd_dims.size());
    nu = pb.num_lin;
    for (int d : pb.psd_dims) nu += d;
    b.resize(m);
    for (int k = 0; k < m; ++k) b[k] = pb.rows[k].rhs;
    c_lin = VectorXd::Zero(pb.num_lin);
    for (auto [i, c] : pb.lin_objective) c_lin[i] += c;
    block_rows.assign(p, {});
    lin_rows.assign(pb.num_lin, {});
    for (int k = 0; k < m; ++k) {
      for (const auto& bc : pb.rows[k].psd) block_rows[bc.block].push_back({k, &bc});
      for (auto [i, c] : pb.rows[k].lin) lin_rows[i].push_back({k, c});
    }
    b_scale = 1.0 + (m ? b.cwiseAbs().maxCoeff() : 0.0);
    c_scale = 1.0 + (pb.num_lin ? c_lin.cwiseAbs().maxCoeff() : 0.0);
  }
};

double coeff_dot(const BlockCoeff& bc, const MatrixXd& mat) {
  if (bc.rank1.size()) return bc.rank1.dot(mat * bc.rank1);
  double acc = 0.0;
  for (auto [pp, qq, cc] : bc.entries)
    acc += (pp == qq) ? cc * mat(pp, pp) : cc * (mat(pp, qq) + mat(qq, pp));
  return acc;
}

void coeff_add(const BlockCoeff& bc, double w, MatrixXd& mat) {
  if (bc.rank1.size()) {
    mat.noalias() += w * bc.rank1 * bc.rank1.transpose();
    return;
  }
  for (auto [pp, qq, cc] : bc.entries) {
    mat(pp, qq) += w * cc;
    if (pp != qq) mat(qq, pp) += w * cc;
  }
}

VectorXd apply_A(const Workspace& ws, const std::vector<MatrixXd>& blocks, const VectorXd& lin) {
  VectorXd out(ws.m);
  for (int k = 0; k < ws.m; ++k) {
    const Row& row = ws.pb.rows[k];
    double acc = 0.0;
    for (const auto& bc : row.psd) acc += coeff_dot(bc, blocks[bc.block]);
    for (auto [i, c] : row.lin) acc += c * lin[i];
    out[k] = acc;
  }
  return out;
}

void apply_At(const Workspace& ws, const VectorXd& y, std::vector<MatrixXd>& blocks,
              VectorXd& lin) {
  for (auto& blk : blocks) blk.setZero();
  lin.setZero();
  for (int k = 0; k < ws.m; ++k) {
    double w = y[k];
    if (w == 0.0) continue;
    const Row& row = ws.pb.rows[k];
    for (const auto& bc : row.psd) coeff_add(bc, w, blocks[bc.block]);
    for (auto [i, c] : row.lin) lin[i] += c * w;
  }
}

// Largest alpha keeping x + alpha*dx in the cone.
double max_step(const MatrixXd& x, const MatrixXd& dx) {
  MatrixXd t;
  Eigen::LLT<MatrixXd> llt(x);
  if (llt.info() == Eigen::Success) {
    MatrixXd l = llt.matrixL();
    t = l.triangularView<Eigen::Lower>().solve(dx);
    t = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
  } else {
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(x);
    VectorXd lam = eig.eigenvalues().cwiseMax(1e-300);
    MatrixXd isq = eig.eigenvectors() * lam.cwiseSqrt().cwiseInverse().asDiagonal() *
                   eig.eigenvectors().transpose();
    t = isq * dx * isq;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig((t + t.transpose()) / 2.0, Eigen::EigenvaluesOnly);
  double lam_min = eig.eigenvalues().minCoeff();
  return lam_min >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lam_min;
}

double max_step_lin(const VectorXd& x, const VectorXd& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i)
    if (dx[i] < 0.0) alpha = std::min(alpha, -x[i] / dx[i]);
  return alpha;
}

// M_kl = <A_l, X A_k Sinv>, accumulated blockwise. Symmetry of every A
// makes this equal to the HKM-symmetrised pairing, and M itself symmetric.
void assemble_schur(const Workspace& ws, const std::vector<MatrixXd>& X,
                    const std::vector<MatrixXd>& Sinv, const VectorXd& ulin,
                    const VectorXd& slin, MatrixXd& M) {
  M.setZero();
  std::vector<VectorXd> xr, sr;
  for (int bidx = 0; bidx < ws.p; ++bidx) {
    const auto& list = ws.block_rows[bidx];
    const MatrixXd& Xb = X[bidx];
    const MatrixXd& Zb = Sinv[bidx];
    xr.assign(list.size(), {});
    sr.assign(list.size(), {});
    for (std::size_t a = 0; a < list.size(); ++a) {
      if (list[a].coef->rank1.size()) {
        xr[a] = Xb * list[a].coef->rank1;
        sr[a] = Zb * list[a].coef->rank1;
      }
    }
    for (std::size_t a = 0; a < list.size(); ++a) {
      int k = list[a].row;
      const BlockCoeff& ak = *list[a].coef;
      for (std::size_t b2 = a; b2 < list.size(); ++b2) {
        int l = list[b2].row;
        const BlockCoeff& al = *list[b2].coef;
        double val = 0.0;
        if (ak.rank1.size() && al.rank1.size()) {
          val = al.rank1.dot(xr[a]) * al.rank1.dot(sr[a]);
        } else if (ak.rank1.size()) {
          for (auto [pp, qq, cc] : al.entries)
            val += (pp == qq) ? cc * xr[a][pp] * sr[a][pp]
                              : cc * (xr[a][pp] * sr[a][qq] + xr[a][qq] * sr[a][pp]);
        } else if (al.rank1.size()) {
          for (auto [pp, qq, cc] : ak.entries)
            val += (pp == qq) ? cc * xr[b2][pp] * sr[b2][pp]
                              : cc * (xr[b2][pp] * sr[b2][qq] + xr[b2][qq] * sr[b2][pp]);
        } else {
          for (auto [pp, qq, cc] : ak.entries) {
            for (auto [rr, ss, dd] : al.entries) {
              double w_rs, w_sr;
              if (pp == qq) {
                w_rs = Xb(rr, pp) * Zb(pp, ss);
                w_sr = Xb(ss, pp) * Zb(pp, rr);
              } else {
                w_rs = Xb(rr, pp) * Zb(qq, ss) + Xb(rr, qq) * Zb(pp, ss);
                w_sr = Xb(ss, pp) * Zb(qq, rr) + Xb(ss, qq) * Zb(pp, rr);
              }
              val += (rr == ss) ? cc * dd * w_rs : cc * dd * (w_rs + w_sr);
            }
          }
        }
        M(std::min(k, l), std::max(k, l)) += val;
      }
    }
  }
  for (int i = 0; i < ulin.size(); ++i) {
    double w = ulin[i] / slin[i];
    const auto& list = ws.lin_rows[i];
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b2 = a; b2 < list.size(); ++b2) {
        auto [k, ck] = list[a];
        auto [l, cl] = list[b2];
        M(std::min(k, l), std::max(k, l)) += ck * cl * w;
      }
  }
  M = M.selfadjointView<Eigen::Upper>();
}

}  // namespace

Result solve(const Problem& pb, const Options& opt, const PrimalStart* start) {
  Workspace ws(pb);
  const int m = ws.m, p = ws.p;
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::vector<MatrixXd> X(p), S(p);
  VectorXd u, slin, y = VectorXd::Zero(m);
  double dp = std::max(1.0, ws.b_scale / std::max(1, m));
  double ds = ws.c_scale;
  bool warm = false;
  if (start && static_cast<int>(start->x_psd.size()) == p &&
      start->x_lin.size() == pb.num_lin) {
    warm = true;
    for (int bi = 0; bi < p && warm; ++bi) {
      Eigen::SelfAdjointEigenSolver<MatrixXd> eig(start->x_psd[bi], Eigen::EigenvaluesOnly);
      if (!(eig.eigenvalues().minCoeff() > 0.0)) warm = false;
    }
    if (warm && pb.num_lin && !(start->x_lin.minCoeff() > 0.0)) warm = false;
  }
  for (int bi = 0; bi < p; ++bi) {
    X[bi] = warm ? start->x_psd[bi]
                 : MatrixXd(dp * MatrixXd::Identity(pb.psd_dims[bi], pb.psd_dims[bi]));
    S[bi] = ds * MatrixXd::Identity(pb.psd_dims[bi], pb.psd_dims[bi]);
  }
  u = warm ? start->x_lin : VectorXd(dp * VectorXd::Ones(pb.num_lin));
  slin = ds * VectorXd::Ones(pb.num_lin);

  std::vector<MatrixXd> aty(p), Rd(p), Sinv(p), K(p);
  std::vector<MatrixXd> dX(p), dS(p), dX2(p), dS2(p), aty_dy(p);
  for (int bi = 0; bi < p; ++bi) {
    int d = pb.psd_dims[bi];
    aty[bi].resize(d, d);
    K[bi].resize(d, d);
    aty_dy[bi].resize(d, d);
  }
  VectorXd aty_lin(pb.num_lin), rd_lin(pb.num_lin);
  VectorXd du(pb.num_lin), ds_lin(pb.num_lin), du2(pb.num_lin), ds2_lin(pb.num_lin);
  MatrixXd M(m, m);
  Eigen::LDLT<MatrixXd> fact;

  Result res;
  double mu_prev = std::numeric_limits<double>::infinity();
  int stall = 0;

  for (int iter = 0; iter <= opt.max_iterations; ++iter) {
    apply_At(ws, y, aty, aty_lin);
    double gap = u.dot(slin), dres = 0.0;
    for (int bi = 0; bi < p; ++bi) {
      gap += (X[bi].array() * S[bi].array()).sum();
      Rd[bi] = -S[bi] - aty[bi];  // objective is zero on the PSD part
      dres = std::max(dres, Rd[bi].size() ? Rd[bi].cwiseAbs().maxCoeff() : 0.0);
    }
    rd_lin = ws.c_lin - slin - aty_lin;
    if (pb.num_lin) dres = std::max(dres, rd_lin.cwiseAbs().maxCoeff());
    VectorXd rp = ws.b - apply_A(ws, X, u);
    double pres = rp.size() ? rp.cwiseAbs().maxCoeff() : 0.0;
    double mu = gap / ws.nu;
    double pobj = ws.c_lin.dot(u), dobj = ws.b.dot(y);
    double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

    res.iterations = iter;
    res.primal_residual = pres / ws.b_scale;
    res.dual_residual = dres / ws.c_scale;
    res.mu = mu;
    res.primal_objective = pobj;
    res.dual_objective = dobj;
    if (opt.verbose)
      std::printf("it %2d  mu %9.2e  pres %8.1e  dres %8.1e  pobj %+.9f  dobj %+.9f\n", iter, mu,
                  res.primal_residual, res.dual_residual, pobj, dobj);

    if (res.primal_residual <= opt.feas_tol && res.dual_residual <= opt.feas_tol &&
        (relgap <= opt.gap_tol || mu <= opt.gap_tol)) {
      res.status = Status::kOptimal;
      break;
    }
    if (iter == opt.max_iterations) {
      res.status = Status::kIterationLimit;
      break;
    }
    if (opt.time_limit_seconds > 0 && elapsed() > opt.time_limit_seconds) {
      res.status = Status::kTimeLimit;
      break;
    }
    if (mu > 0.97 * mu_prev) {
      if (++stall >= 6) {
        res.status = Status::kSlowProgress;
        break;
      }
    } else {
      stall = 0;
    }
    mu_prev = mu;

    bool numerical_bail = false;
    for (int bi = 0; bi < p; ++bi) {
      Eigen::LLT<MatrixXd> llt(S[bi]);
      if (llt.info() != Eigen::Success) {
        numerical_bail = true;
        break;
      }
      Sinv[bi] = llt.solve(MatrixXd::Identity(pb.psd_dims[bi], pb.psd_dims[bi]));
    }
    if (numerical_bail) {
      res.status = Status::kSlowProgress;
      break;
    }
    assemble_schur(ws, X, Sinv, u, slin, M);
    double reg = 0.0;
    for (int attempt = 0;; ++attempt) {
      if (reg == 0.0) {
        fact.compute(M);
      } else {
        MatrixXd Mreg = M;
        Mreg.diagonal().array() += reg;
        fact.compute(Mreg);
      }
      if (fact.info() == Eigen::Success && fact.isPositive()) break;
      reg = (reg == 0.0) ? 1e-12 * (1.0 + M.diagonal().cwiseAbs().maxCoeff()) : reg * 100.0;
      if (attempt >= 6) {
        numerical_bail = true;
        break;
      }
    }
    if (numerical_bail) {
      res.status = Status::kSlowProgress;
      break;
    }

    VectorXd a_s = apply_A(ws, Sinv, VectorXd(slin.cwiseInverse()));

    // corrector=false computes the affine direction into (dX, dS, du, ds_lin);
    // corrector=true folds in sigma*mu and the Mehrotra cross terms using them.
    auto newton = [&](double sigma_mu, bool corrector, std::vector<MatrixXd>& outX,
                      std::vector<MatrixXd>& outS, VectorXd& out_du, VectorXd& out_ds) {
      for (int bi = 0; bi < p; ++bi) {
        MatrixXd num = X[bi] * Rd[bi];
        if (corrector) num.noalias() += dX[bi] * dS[bi];
        K[bi].noalias() = num * Sinv[bi];
      }
      VectorXd klin(pb.num_lin);
      for (int i = 0; i < pb.num_lin; ++i) {
        double t = u[i] * rd_lin[i];
        if (corrector) t += du[i] * ds_lin[i];
        klin[i] = t / slin[i];
      }
      VectorXd rhs = ws.b - sigma_mu * a_s + apply_A(ws, K, klin);
      VectorXd dy = fact.solve(rhs);
      dy += fact.solve(rhs - M.selfadjointView<Eigen::Upper>() * dy);
      apply_At(ws, dy, aty_dy, aty_lin);  // aty_lin reused as scratch
      for (int bi = 0; bi < p; ++bi) {
        outS[bi] = Rd[bi] - aty_dy[bi];
        MatrixXd num = X[bi] * outS[bi];
        if (corrector) num.noalias() += dX[bi] * dS[bi];
        MatrixXd W = num * Sinv[bi];
        outX[bi] = -X[bi] - (W + W.transpose()) / 2.0;
        if (sigma_mu != 0.0) outX[bi] += sigma_mu * Sinv[bi];
      }
      for (int i = 0; i < pb.num_lin; ++i) {
        out_ds[i] = rd_lin[i] - aty_lin[i];
        double cross = corrector ? du[i] * ds_lin[i] : 0.0;
        out_du[i] = sigma_mu / slin[i] - u[i] - (u[i] * out_ds[i] + cross) / slin[i];
      }
      return dy;
    };

    newton(0.0, false, dX, dS, du, ds_lin);
    double ap = 1.0, ad = 1.0;
    for (int bi = 0; bi < p; ++bi) {
      ap = std::min(ap, max_step(X[bi], dX[bi]));
      ad = std::min(ad, max_step(S[bi], dS[bi]));
    }
    ap = std::min(ap, max_step_lin(u, du));
    ad = std::min(ad, max_step_lin(slin, ds_lin));

    double gap_aff = (u + ap * du).dot(slin + ad * ds_lin);
    for (int bi = 0; bi < p; ++bi)
      gap_aff += ((X[bi] + ap * dX[bi]).array() * (S[bi] + ad * dS[bi]).array()).sum();
    double sigma = std::clamp(std::pow(std::max(0.0, gap_aff / gap), 3.0), 1e-8, 0.999);

    VectorXd dy = newton(sigma * mu, true, dX2, dS2, du2, ds2_lin);

    ap = 1.0;
    ad = 1.0;
    for (int bi = 0; bi < p; ++bi) {
      ap = std::min(ap, max_step(X[bi], dX2[bi]));
      ad = std::min(ad, max_step(S[bi], dS2[bi]));
    }
    ap = std::min(ap, max_step_lin(u, du2));
    ad = std::min(ad, max_step_lin(slin, ds2_lin));
    double tau = (iter < 2) ? 0.9 : opt.step_fraction;
    ap = std::min(1.0, tau * ap);
    ad = std::min(1.0, tau * ad);
    if (ap < 1e-10 && ad < 1e-10) {
      res.status = Status::kSlowProgress;
      break;
    }

    for (int bi = 0; bi < p; ++bi) {
      X[bi] += ap * dX2[bi];
      X[bi] = ((X[bi] + X[bi].transpose()) / 2.0).eval();
      S[bi] += ad * dS2[bi];
      S[bi] = ((S[bi] + S[bi].transpose()) / 2.0).eval();
    }
    u += ap * du2;
    slin += ad * ds2_lin;
    y += ad * dy;
  }

  res.x_psd = std::move(X);
  res.x_lin = std::move(u);
  res.s_psd = std::move(S);
  res.s_lin = std::move(slin);
  res.y = std::move(y);
  return res;
}

}  // namespace exactq::conic
