#pragma once

#include <vector>

#include "steadykit/qops.hpp"

namespace steadykit {

/// Block Kossakowski data for two identical qubits coupled to a common
/// environment: c = [[a, b], [b^dag, a]] with a = a^dag and (assumed) b = b^dag.
struct KossakowskiBlocks {
  Matrix a;  // 3x3 single-party block
  Matrix b;  // 3x3 dissipative coupling
  Matrix c;  // assembled 6x6
};

KossakowskiBlocks assemble_kossakowski(const Matrix& a, const Matrix& b,
                                       const Tolerances& tol = {});

enum class CpVerdict { CompletelyPositive, NotCompletelyPositive };

struct CpReport {
  CpVerdict verdict = CpVerdict::CompletelyPositive;
  Eigen::VectorXd eigenvalues;  // ascending
};

/// Complete positivity holds iff the Kossakowski matrix is PSD.
CpReport check_complete_positivity(const Matrix& c, const Tolerances& tol = {});

/// Unitary diagonalization of a+b and a-b. Rows of u_plus/u_minus are the
/// diagonalizing rows (u (a+b) u^dag diagonal); eigenvalues are sorted
/// descending so the surviving dissipation channels come first. The
/// sigma_plus/sigma_minus operators are traceless and HS-orthonormal; they
/// are Hermitian whenever the corresponding block is real symmetric.
struct DiagonalizedGenerator {
  Eigen::Vector3d lambda_plus;
  Eigen::Vector3d lambda_minus;
  Matrix u_plus;   // 3x3
  Matrix u_minus;  // 3x3
  std::vector<Matrix> sigma_plus;   // 2x2, one per row of u_plus
  std::vector<Matrix> sigma_minus;  // 2x2, one per row of u_minus
  int n_plus = 0;
  int n_minus = 0;
  double zero_threshold = 0.0;  // absolute eigenvalue cut used for n_plus/n_minus
};

DiagonalizedGenerator diagonalize_blocks(const KossakowskiBlocks& blocks,
                                         const Tolerances& tol = {});

/// Lindblad operators of the diagonal generator form. Plus-kind channels map
/// to sqrt(lambda)/2 (I (x) sigma + sigma (x) I), minus-kind to
/// sqrt(lambda)/2 (I (x) sigma - sigma (x) I); channels with eigenvalues
/// below the zero threshold are omitted, negative eigenvalues beyond the
/// positivity tolerance are rejected.
std::vector<Matrix> build_lindblad_operators(const DiagonalizedGenerator& diag,
                                             const Tolerances& tol = {});

/// Involutory similarity r with sigma = mu r sigma_3 r^-1, r = r^-1.
/// Requires traceless sigma with mu^2 = sum_j u_j^2 != 0 where
/// sigma = sum_j u_j sigma_j.
struct InvolutorySimilarity {
  Complex mu;
  Matrix r;  // 2x2
};

InvolutorySimilarity similarity_transform(const Matrix& sigma,
                                          const Tolerances& tol = {});

/// Vectorized generator in the column-stacking convention.
struct Liouvillian {
  Matrix matrix;                 // d^2 x d^2
  Eigen::Index hilbert_dim = 0;  // d
};

/// Hilbert-Schmidt orthonormal coupling bases used by the generator:
/// {(sigma_k (x) I)/2, (I (x) sigma_k)/2} for two qubits, {sigma_k/sqrt(2)}
/// for a single qubit.
std::vector<Matrix> coupling_basis_two_qubit();
std::vector<Matrix> coupling_basis_single_qubit();

/// Generator from the diagonal (Lindblad-operator) form.
Liouvillian build_liouvillian(const Matrix& hamiltonian,
                              const std::vector<Matrix>& lindblad_ops);

/// Generator straight from a Kossakowski matrix over a coupling basis.
Liouvillian liouvillian_from_kossakowski(const Matrix& hamiltonian, const Matrix& c,
                                         const std::vector<Matrix>& basis);

/// Single-qubit generator for the target alone.
Liouvillian build_single_qubit_liouvillian(const Matrix& a, const Matrix& hamiltonian,
                                           const Tolerances& tol = {});

/// Single-party Kossakowski matrix with decay rates a, b, c and an imaginary
/// xy coupling d that pumps sigma_3: [[a, id, 0], [-id, b, 0], [0, 0, c]].
Matrix pumped_kossakowski(double a, double b, double c, double d);

}  // namespace steadykit
