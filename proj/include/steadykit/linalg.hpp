#pragma once

#include "steadykit/qops.hpp"

namespace steadykit {

/// Orthonormal basis (columns) of the right null space of m, with the
/// rank cut at rel_tol times the largest singular value.
Matrix svd_kernel(const Matrix& m, double rel_tol);

/// Orthonormal basis of the column span of m (near-dependent columns dropped).
Matrix orthonormalize_columns(const Matrix& m, double drop_tol = 1e-9);

/// sin of the largest principal angle between two column spans of equal
/// dimension; returns 1 when the dimensions differ.
double subspace_distance(const Matrix& qa, const Matrix& qb);

/// Eigendecomposition of a Hermitian matrix with deterministic output:
/// ascending eigenvalues, and for real-symmetric input the eigenvectors are
/// real; each eigenvector's largest-magnitude component is made real
/// positive.
struct HermitianEigen {
  Eigen::VectorXd values;
  Matrix vectors;  // columns
};
HermitianEigen hermitian_eigs(const Matrix& m);

/// Orthonormalize a family of Hermitian matrices over the reals
/// (Gram-Schmidt in the Hilbert-Schmidt inner product, small residuals
/// dropped). Keeps every element Hermitian.
std::vector<Matrix> orthonormalize_hermitian(const std::vector<Matrix>& mats,
                                             double drop_tol = 1e-9);

}  // namespace steadykit
