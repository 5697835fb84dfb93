#pragma once

#include <Eigen/Dense>

#include "exactq/errors.hpp"

namespace exactq::linalg {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

double max_abs(const Matrix& m);
double max_abs(const CMatrix& m);

// Unique PSD square root via symmetric eigendecomposition. Eigenvalues in
// [-tol, 0) are clamped to zero; anything below -tol is rejected.
Matrix psd_sqrt(const Matrix& m, double tol);

// Low-rank factor P (rank x dim) with P^T P = M, rank counted at
// max(rank_threshold, tol) relative to the top eigenvalue.
struct PsdFactor {
  Matrix factor;
  int rank = 0;
};
PsdFactor psd_factor(const Matrix& m, double tol, double rank_threshold);

// Square unitary U with U*phi ~= psi, valid whenever the two column
// families have (numerically) equal Gram matrices. Built from the shared
// Gram eigenbasis: isometries V, W of the polar decompositions are
// completed to unitaries and U = V' W'^dag. With Gram mismatch delta <=
// tol the residual max|U*phi - psi| stays below c*sqrt(tol) with c = 10
// on unit-scale inputs (exercised by the property tests).
Matrix transition_unitary(const Matrix& psi, const Matrix& phi, double tol);
CMatrix transition_unitary(const CMatrix& psi, const CMatrix& phi, double tol);

// Extend a d x r matrix with orthonormal columns to a d x d unitary whose
// first r columns are the input.
Matrix complete_isometry(const Matrix& v);
CMatrix complete_isometry(const CMatrix& v);

bool is_unitary(const CMatrix& u, double tol);

}  // namespace exactq::linalg
