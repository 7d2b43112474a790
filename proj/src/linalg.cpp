#include "steadykit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace steadykit {

Matrix svd_kernel(const Matrix& m, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = s.size() > 0 ? rel_tol * s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix orthonormalize_columns(const Matrix& m, double drop_tol) {
  if (m.cols() == 0) return m;
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > drop_tol * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

double subspace_distance(const Matrix& qa, const Matrix& qb) {
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(qa.adjoint() * qb);
  const double c = std::min(1.0, svd.singularValues().minCoeff());
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

HermitianEigen hermitian_eigs(const Matrix& m) {
  HermitianEigen out;
  const double scale = std::max(1.0, m.norm());
  if (m.imag().norm() <= 1e-13 * scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
    out.values = es.eigenvalues();
    out.vectors = es.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
    out.values = es.eigenvalues();
    out.vectors = es.eigenvectors();
  }
  // phase convention: largest-magnitude component real positive
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    out.vectors.col(j).cwiseAbs().maxCoeff(&imax);
    const Complex z = out.vectors(imax, j);
    if (std::abs(z) > 0) out.vectors.col(j) *= std::conj(z) / std::abs(z);
  }
  return out;
}

std::vector<Matrix> orthonormalize_hermitian(const std::vector<Matrix>& mats,
                                             double drop_tol) {
  std::vector<Matrix> basis;
  for (const auto& m : mats) {
    Matrix v = hermitian_part(m);
    for (const auto& b : basis) v -= hs_inner(b, v).real() * b;
    for (const auto& b : basis) v -= hs_inner(b, v).real() * b;  // re-orthogonalize
    const double n = v.norm();
    if (n > drop_tol) basis.push_back(v / n);
  }
  return basis;
}

}  // namespace steadykit
