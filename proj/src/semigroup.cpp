#include "steadykit/semigroup.hpp"

#include <Eigen/Eigenvalues>

#include "steadykit/linalg.hpp"

namespace steadykit {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_hermitian(const Matrix& m, double tol, const char* what) {
  if (hermiticity_defect(m) > tol * std::max(1.0, m.norm()))
    throw ValidationError(std::string(what) + ": not Hermitian within tolerance");
}
}  // namespace

KossakowskiBlocks assemble_kossakowski(const Matrix& a, const Matrix& b,
                                       const Tolerances& tol) {
  if (a.rows() != 3 || a.cols() != 3 || b.rows() != 3 || b.cols() != 3)
    throw ShapeError("assemble_kossakowski: blocks must be 3x3");
  require_hermitian(a, tol.herm, "assemble_kossakowski: block a");
  require_hermitian(b, tol.herm, "assemble_kossakowski: block b");
  KossakowskiBlocks out;
  out.a = a;
  out.b = b;
  out.c = Matrix(6, 6);
  out.c.block(0, 0, 3, 3) = a;
  out.c.block(0, 3, 3, 3) = b;
  out.c.block(3, 0, 3, 3) = b.adjoint();
  out.c.block(3, 3, 3, 3) = a;
  return out;
}

CpReport check_complete_positivity(const Matrix& c, const Tolerances& tol) {
  require_hermitian(c, tol.herm, "check_complete_positivity");
  CpReport out;
  out.eigenvalues = hermitian_eigs(c).values;
  out.verdict = out.eigenvalues.minCoeff() >= -tol.pos
                    ? CpVerdict::CompletelyPositive
                    : CpVerdict::NotCompletelyPositive;
  return out;
}

namespace {

// sigma_i = sum_k conj(u_ik) sigma_k / sqrt(2) for each row u_i of u.
std::vector<Matrix> rows_to_sigmas(const Matrix& u) {
  std::vector<Matrix> out;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    Matrix s = Matrix::Zero(2, 2);
    for (int k = 0; k < 3; ++k) s += std::conj(u(i, k)) * pauli(k + 1);
    out.push_back(s / std::sqrt(2.0));
  }
  return out;
}

}  // namespace

DiagonalizedGenerator diagonalize_blocks(const KossakowskiBlocks& blocks,
                                         const Tolerances& tol) {
  DiagonalizedGenerator out;
  const HermitianEigen ep = hermitian_eigs(blocks.a + blocks.b);
  const HermitianEigen em = hermitian_eigs(blocks.a - blocks.b);
  // descending order: surviving channels first
  Matrix up(3, 3), um(3, 3);
  for (int i = 0; i < 3; ++i) {
    out.lambda_plus(i) = ep.values(2 - i);
    out.lambda_minus(i) = em.values(2 - i);
    up.row(i) = ep.vectors.col(2 - i).adjoint();
    um.row(i) = em.vectors.col(2 - i).adjoint();
  }
  out.u_plus = up;
  out.u_minus = um;
  out.sigma_plus = rows_to_sigmas(up);
  out.sigma_minus = rows_to_sigmas(um);
  const double spectral_norm = hermitian_eigs(blocks.c).values.cwiseAbs().maxCoeff();
  out.zero_threshold = tol.eig_rel * std::max(1.0, spectral_norm);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(out.lambda_plus(i)) > out.zero_threshold) ++out.n_plus;
    if (std::abs(out.lambda_minus(i)) > out.zero_threshold) ++out.n_minus;
  }
  return out;
}

std::vector<Matrix> build_lindblad_operators(const DiagonalizedGenerator& diag,
                                             const Tolerances& tol) {
  const Matrix id = pauli(0);
  std::vector<Matrix> out;
  auto emit = [&](double lambda, const Matrix& sigma, double side) {
    if (lambda < -std::max(diag.zero_threshold, tol.pos))
      throw NotCompletelyPositiveError(
          "build_lindblad_operators: negative Kossakowski eigenvalue");
    if (lambda <= diag.zero_threshold) return;  // vanishing channel
    const double rate = std::sqrt(std::max(lambda, 0.0)) / 2.0;
    out.push_back(rate * (tensor(id, sigma) + side * tensor(sigma, id)));
  };
  for (int i = 0; i < 3; ++i) emit(diag.lambda_plus(i), diag.sigma_plus[i], +1.0);
  for (int i = 0; i < 3; ++i) emit(diag.lambda_minus(i), diag.sigma_minus[i], -1.0);
  return out;
}

InvolutorySimilarity similarity_transform(const Matrix& sigma, const Tolerances& tol) {
  if (sigma.rows() != 2 || sigma.cols() != 2)
    throw ShapeError("similarity_transform: expected 2x2");
  const double scale = std::max(1.0, sigma.norm());
  if (std::abs(sigma.trace()) > tol.herm * scale)
    throw ValidationError("similarity_transform: sigma must be traceless");
  Eigen::Vector3cd u;
  for (int k = 0; k < 3; ++k) u(k) = (sigma * pauli(k + 1)).trace() / 2.0;
  const Complex mu2 = u(0) * u(0) + u(1) * u(1) + u(2) * u(2);
  if (std::abs(mu2) <= 1e-12 * scale * scale)
    throw SingularSigmaError("similarity_transform: mu^2 = sum u_j^2 vanishes");
  Complex mu = std::sqrt(mu2);
  if (std::abs(u(2) + mu) < std::abs(u(2) - mu)) mu = -mu;  // well-conditioned branch
  const Complex nu = std::sqrt(2.0 * mu * (u(2) + mu));
  InvolutorySimilarity out;
  out.mu = mu;
  out.r = (sigma + mu * pauli(3)) / nu;
  return out;
}

std::vector<Matrix> coupling_basis_two_qubit() {
  const Matrix id = pauli(0);
  std::vector<Matrix> f;
  for (int k = 1; k <= 3; ++k) f.push_back(tensor(pauli(k), id) / 2.0);
  for (int k = 1; k <= 3; ++k) f.push_back(tensor(id, pauli(k)) / 2.0);
  return f;
}

std::vector<Matrix> coupling_basis_single_qubit() {
  std::vector<Matrix> f;
  for (int k = 1; k <= 3; ++k) f.push_back(pauli(k) / std::sqrt(2.0));
  return f;
}

namespace {

Matrix coherent_superoperator(const Matrix& h) {
  const Eigen::Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  return -kI * (tensor(id, h) - tensor(h.transpose(), id));
}

Matrix dissipator_superoperator(const Matrix& v, const Matrix& w) {
  // rho -> v rho w^dag - 1/2 {w^dag v, rho}, vectorized column-stacked
  const Eigen::Index d = v.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix wv = w.adjoint() * v;
  return tensor(w.conjugate(), v) - 0.5 * tensor(id, wv) -
         0.5 * tensor(wv.transpose(), id);
}

}  // namespace

Liouvillian build_liouvillian(const Matrix& hamiltonian,
                              const std::vector<Matrix>& lindblad_ops) {
  const Eigen::Index d = hamiltonian.rows();
  if (hamiltonian.cols() != d) throw ShapeError("build_liouvillian: H must be square");
  require_hermitian(hamiltonian, 1e-10, "build_liouvillian: H");
  Matrix l = coherent_superoperator(hamiltonian);
  for (const auto& v : lindblad_ops) {
    if (v.rows() != d || v.cols() != d)
      throw ShapeError("build_liouvillian: operator dimension mismatch");
    l += dissipator_superoperator(v, v);
  }
  return Liouvillian{std::move(l), d};
}

Liouvillian liouvillian_from_kossakowski(const Matrix& hamiltonian, const Matrix& c,
                                         const std::vector<Matrix>& basis) {
  const Eigen::Index n = c.rows();
  if (c.cols() != n || static_cast<Eigen::Index>(basis.size()) != n)
    throw ShapeError("liouvillian_from_kossakowski: basis/matrix size mismatch");
  Matrix l = coherent_superoperator(hamiltonian);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(c(i, j)) > 0) l += c(i, j) * dissipator_superoperator(basis[i], basis[j]);
  return Liouvillian{std::move(l), hamiltonian.rows()};
}

Liouvillian build_single_qubit_liouvillian(const Matrix& a, const Matrix& hamiltonian,
                                           const Tolerances& tol) {
  if (a.rows() != 3 || a.cols() != 3)
    throw ShapeError("build_single_qubit_liouvillian: a must be 3x3");
  require_hermitian(a, tol.herm, "build_single_qubit_liouvillian: a");
  const auto cp = check_complete_positivity(a, tol);
  if (cp.verdict != CpVerdict::CompletelyPositive)
    throw NotCompletelyPositiveError("build_single_qubit_liouvillian: a is not PSD");
  return liouvillian_from_kossakowski(hamiltonian, a, coupling_basis_single_qubit());
}

Matrix pumped_kossakowski(double a, double b, double c, double d) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(0, 1) = kI * d;
  m(1, 0) = -kI * d;
  return m;
}

}  // namespace steadykit
