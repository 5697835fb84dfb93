#include "exactq/linalg.hpp"

#include <algorithm>

namespace exactq::linalg {

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Matrix psd_sqrt(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("psd_sqrt needs a square matrix");
  if (max_abs(m - m.transpose()) > 1e-12 * std::max(1.0, max_abs(m)))
    throw ShapeError("psd_sqrt needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> eig((m + m.transpose()) / 2.0);
  const auto& lam = eig.eigenvalues();
  if (lam.size() && lam.minCoeff() < -tol)
    throw NotPsdError("matrix has eigenvalue " + std::to_string(lam.minCoeff()) +
                          " below -tol",
                      lam.minCoeff());
  Vector sq = lam.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * sq.asDiagonal() * eig.eigenvectors().transpose();
}

PsdFactor psd_factor(const Matrix& m, double tol, double rank_threshold) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig((m + m.transpose()) / 2.0);
  const auto& lam = eig.eigenvalues();
  if (lam.size() && lam.minCoeff() < -tol)
    throw NotPsdError("matrix has eigenvalue below -tol", lam.minCoeff());
  double top = lam.size() ? std::max(0.0, lam.maxCoeff()) : 0.0;
  double cut = std::max(rank_threshold * std::max(top, 1.0), tol);
  PsdFactor out;
  int d = static_cast<int>(m.rows());
  std::vector<int> keep;
  for (int k = 0; k < d; ++k)
    if (lam[k] > cut) keep.push_back(k);
  out.rank = static_cast<int>(keep.size());
  out.factor.resize(out.rank, d);
  for (int r = 0; r < out.rank; ++r)
    out.factor.row(r) = std::sqrt(lam[keep[r]]) * eig.eigenvectors().col(keep[r]).transpose();
  return out;
}

namespace {

template <typename Mat>
Mat complete_isometry_impl(const Mat& v) {
  const int d = static_cast<int>(v.rows());
  const int r = static_cast<int>(v.cols());
  if (r > d) throw ShapeError("isometry has more columns than rows");
  if (r > 0) {
    Mat gram = v.adjoint() * v;
    if (max_abs(Mat(gram - Mat::Identity(r, r))) > 1e-9)
      throw ShapeError("columns are not orthonormal");
  }
  if (r == d) return v;
  // Orthonormal basis of the complement from the projector's eigenspace.
  Mat proj = Mat::Identity(d, d) - v * v.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> eig(proj);
  Mat out(d, d);
  out.leftCols(r) = v;
  int col = r;
  for (int k = 0; k < d && col < d; ++k)
    if (eig.eigenvalues()[k] > 0.5) out.col(col++) = eig.eigenvectors().col(k);
  if (col != d) throw ShapeError("complement basis extraction failed");
  return out;
}

template <typename Mat>
Mat transition_unitary_impl(const Mat& psi, const Mat& phi, double tol) {
  if (psi.rows() != phi.rows() || psi.cols() != phi.cols())
    throw ShapeError("state families must have matching shapes");
  Mat gpsi = psi.adjoint() * psi;
  Mat gphi = phi.adjoint() * phi;
  double mismatch = max_abs(Mat(gpsi - gphi));
  if (mismatch > tol)
    throw GramMismatchError("Gram matrices differ by " + std::to_string(mismatch), mismatch);

  Mat gram = (gpsi + gphi) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram);
  Eigen::VectorXd lam = eig.eigenvalues().real();
  double top = lam.size() ? std::max(0.0, lam.maxCoeff()) : 0.0;
  double cut = std::max({tol, 1e-13 * top, 0.0});

  const int d = static_cast<int>(psi.rows());
  std::vector<int> keep;
  for (int k = 0; k < lam.size(); ++k)
    if (lam[k] > cut) keep.push_back(k);
  const int r = static_cast<int>(keep.size());
  Mat v(d, r), w(d, r);
  for (int c = 0; c < r; ++c) {
    double s = 1.0 / std::sqrt(lam[keep[c]]);
    v.col(c) = psi * eig.eigenvectors().col(keep[c]) * s;
    w.col(c) = phi * eig.eigenvectors().col(keep[c]) * s;
  }
  // Loewdin orthogonalisation: the columns are orthonormal only up to the
  // Gram mismatch, and complete_isometry insists on exactness.
  auto orthonormalise = [](Mat& iso) {
    if (iso.cols() == 0) return;
    Eigen::SelfAdjointEigenSolver<Mat> g(iso.adjoint() * iso);
    Eigen::VectorXd gl = g.eigenvalues().real();
    Mat invroot = g.eigenvectors() *
                  gl.cwiseMax(1e-300).cwiseSqrt().cwiseInverse().asDiagonal() *
                  g.eigenvectors().adjoint();
    iso = iso * invroot;
  };
  orthonormalise(v);
  orthonormalise(w);
  return complete_isometry_impl(v) * complete_isometry_impl(w).adjoint();
}

}  // namespace

Matrix transition_unitary(const Matrix& psi, const Matrix& phi, double tol) {
  return transition_unitary_impl<Matrix>(psi, phi, tol);
}
CMatrix transition_unitary(const CMatrix& psi, const CMatrix& phi, double tol) {
  return transition_unitary_impl<CMatrix>(psi, phi, tol);
}
Matrix complete_isometry(const Matrix& v) { return complete_isometry_impl<Matrix>(v); }
CMatrix complete_isometry(const CMatrix& v) { return complete_isometry_impl<CMatrix>(v); }

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(CMatrix(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()))) <= tol;
}

}  // namespace exactq::linalg
