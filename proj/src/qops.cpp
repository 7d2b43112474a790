#include "steadykit/qops.hpp"

#include <Eigen/Eigenvalues>

namespace steadykit {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw ShapeError("pauli: index must be in 0..3");
  }
  return m;
}

Matrix tensor(const Matrix& target, const Matrix& probe) {
  if (target.rows() != target.cols() || probe.rows() != probe.cols())
    throw ShapeError("tensor: factors must be square");
  const Eigen::Index m = target.rows(), n = probe.rows();
  Matrix out(m * n, m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = target(i, j) * probe;
  return out;
}

Matrix partial_trace_probe(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw ShapeError("partial_trace_probe: expected a 4x4 operator");
  Matrix out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

Matrix bloch_to_density(const Bloch& b, const Tolerances& tol) {
  if (b.norm() > 1.0 + tol.pos)
    throw ValidationError("bloch_to_density: |b| > 1 is unphysical");
  Matrix rho = pauli(0);
  for (int k = 0; k < 3; ++k) rho += b[k] * pauli(k + 1);
  return rho / 2.0;
}

Bloch density_to_bloch(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw ShapeError("density_to_bloch: expected a 2x2 state");
  Bloch b;
  for (int k = 0; k < 3; ++k) b[k] = (pauli(k + 1) * rho).trace().real();
  return b;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

CVector vectorize(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("vectorize: expected a square matrix");
  CVector v(m.size());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    v.segment(j * m.rows(), m.rows()) = m.col(j);
  return v;
}

Matrix devectorize(const CVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) throw ShapeError("devectorize: length is not a perfect square");
  Matrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) m.col(j) = v.segment(j * d, d);
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw ShapeError("commutator: expected equal square shapes");
  return a * b - b * a;
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).norm(); }

DensityMatrix DensityMatrix::validated(Matrix m, const Tolerances& tol) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4))
    throw ValidationError("DensityMatrix: dimension must be 2 or 4");
  if (!m.allFinite()) throw ValidationError("DensityMatrix: non-finite entries");
  if (hermiticity_defect(m) > tol.herm)
    throw ValidationError("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(m.trace() - Complex(1.0)) > tol.trace)
    throw ValidationError("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  if (es.eigenvalues().minCoeff() < -tol.pos)
    throw ValidationError("DensityMatrix: negative eigenvalue beyond tolerance");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_bloch(const Bloch& b, const Tolerances& tol) {
  return validated(bloch_to_density(b, tol), tol);
}

DensityMatrix partial_trace_probe(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4)
    throw ValidationError("partial_trace_probe: expected a two-qubit state");
  return DensityMatrix::validated(partial_trace_probe(rho.matrix()), tol);
}

}  // namespace steadykit
