#include "steadykit/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "steadykit/linalg.hpp"

namespace steadykit {

Matrix propagate(const Liouvillian& l, const Matrix& rho, double t) {
  if (t < 0) throw ValidationError("propagate: t must be non-negative");
  if (rho.rows() != l.hilbert_dim || rho.cols() != l.hilbert_dim)
    throw ShapeError("propagate: state dimension mismatch");
  if (t == 0 || l.matrix.norm() == 0) return rho;

  Eigen::ComplexEigenSolver<Matrix> es(l.matrix);
  const Matrix& v = es.eigenvectors();
  Eigen::JacobiSVD<Matrix> svd(v);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  Matrix etl;
  if (smin > 0 && smax / smin < 1e12) {
    const CVector phases = (t * es.eigenvalues().array()).exp();
    etl = v * phases.asDiagonal() * v.inverse();
  } else {
    // near-defective generator: scaling-and-squaring
    etl = (t * l.matrix).exp();
  }
  return devectorize(etl * vectorize(rho));
}

Matrix rk4_evolve(const Liouvillian& l, const Matrix& rho, double t, double dt) {
  if (t < 0) throw ValidationError("rk4_evolve: t must be non-negative");
  if (dt <= 0) throw ValidationError("rk4_evolve: dt must be positive");
  if (dt * l.matrix.norm() > 2.7)
    throw ValidationError("rk4_evolve: step exceeds the RK4 stability bound");
  auto apply = [&](const Matrix& x) { return devectorize(l.matrix * vectorize(x)); };
  Matrix state = rho;
  double remaining = t;
  while (remaining > 0) {
    const double h = std::min(dt, remaining);
    const Matrix k1 = apply(state);
    const Matrix k2 = apply(state + (h / 2) * k1);
    const Matrix k3 = apply(state + (h / 2) * k2);
    const Matrix k4 = apply(state + h * k3);
    state += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    remaining -= h;
  }
  return state;
}

namespace {

// Swap the adjacent diagonal entries (j-1, j) of the upper-triangular t,
// accumulating the rotation into q.
void swap_adjacent(Matrix& t, Matrix& q, Eigen::Index j) {
  const Eigen::Index i = j - 1;
  const Complex a = t(i, i), b = t(i, j), c = t(j, j);
  Eigen::Vector2cd x(b, c - a);  // eigenvector of [[a, b], [0, c]] for c
  Matrix g(2, 2);
  if (x.norm() < 1e-300) {
    g << 0, 1, 1, 0;
  } else {
    x.normalize();
    g << x(0), -std::conj(x(1)), x(1), std::conj(x(0));
  }
  t.block(0, i, t.rows(), 2) = (t.block(0, i, t.rows(), 2) * g).eval();
  t.block(i, 0, 2, t.cols()) = (g.adjoint() * t.block(i, 0, 2, t.cols())).eval();
  q.block(0, i, q.rows(), 2) = (q.block(0, i, q.rows(), 2) * g).eval();
  t(j, i) = 0;  // exact by construction
}

}  // namespace

SpectralData peripheral_projector(const Liouvillian& l, const Tolerances& tol) {
  const Eigen::Index n = l.matrix.rows();
  SpectralData out;
  out.zero_threshold = tol.eig_rel * std::max(1.0, l.matrix.norm());

  Eigen::ComplexSchur<Matrix> schur(l.matrix);
  Matrix t = schur.matrixT();
  Matrix q = schur.matrixU();

  const auto is_peripheral = [&](const Complex& z) {
    return z.real() >= -out.zero_threshold;
  };

  // cluster peripheral eigenvalues into the leading block
  Eigen::Index k = 0;
  for (Eigen::Index scan = 0; scan < n; ++scan) {
    if (!is_peripheral(t(scan, scan))) continue;
    for (Eigen::Index j = scan; j > k; --j) swap_adjacent(t, q, j);
    ++k;
  }

  out.eigenvalues = t.diagonal();
  out.peripheral_dimension = k;

  Matrix p_schur = Matrix::Zero(n, n);
  p_schur.topLeftCorner(k, k) = Matrix::Identity(k, k);
  if (k > 0 && k < n) {
    // t11 x - x t22 = t12, both triangular: solve column by column
    const Matrix t11 = t.topLeftCorner(k, k);
    const Matrix t12 = t.topRightCorner(k, n - k);
    const Matrix t22 = t.bottomRightCorner(n - k, n - k);
    Matrix x(k, n - k);
    for (Eigen::Index j = 0; j < n - k; ++j) {
      CVector rhs = t12.col(j);
      for (Eigen::Index m = 0; m < j; ++m) rhs += x.col(m) * t22(m, j);
      Matrix lhs = t11;
      lhs.diagonal().array() -= t22(j, j);
      x.col(j) = lhs.triangularView<Eigen::Upper>().solve(rhs);
    }
    p_schur.topRightCorner(k, n - k) = x;
  }
  out.peripheral_projector = q * p_schur * q.adjoint();
  return out;
}

SemigroupClass classify_semigroup(const SpectralData& spec, const Tolerances& tol) {
  const double tau = std::max(spec.zero_threshold, tol.eig_rel);
  bool oscillatory = false;
  for (Eigen::Index i = 0; i < spec.peripheral_dimension; ++i)
    if (std::abs(spec.eigenvalues(i).imag()) > tau) oscillatory = true;
  if (oscillatory) return SemigroupClass::NonRelaxing;
  return spec.peripheral_dimension == 1 ? SemigroupClass::UniquelyRelaxing
                                        : SemigroupClass::Relaxing;
}

InvariantReport invariant_monitor(const std::vector<Matrix>& trajectory) {
  if (trajectory.empty())
    throw ValidationError("invariant_monitor: empty trajectory");
  InvariantReport out;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  const double trace0 = trajectory.front().trace().real();
  for (const auto& rho : trajectory) {
    out.max_trace_drift =
        std::max(out.max_trace_drift, std::abs(rho.trace().real() - trace0) +
                                          std::abs(rho.trace().imag()));
    out.max_hermiticity_defect =
        std::max(out.max_hermiticity_defect, hermiticity_defect(rho));
    const auto eigs = hermitian_eigs(hermitian_part(rho)).values;
    out.min_eigenvalue = std::min(out.min_eigenvalue, eigs.minCoeff());
  }
  return out;
}

}  // namespace steadykit
