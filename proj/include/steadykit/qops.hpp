#pragma once

#include <Eigen/Dense>
#include <complex>

#include "steadykit/errors.hpp"

namespace steadykit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Bloch = Eigen::Vector3d;

/// Numerical thresholds shared across the library. All operators handled
/// here are O(1) in norm, so the absolute entries are meaningful as-is;
/// the *_rel entries are scaled by the norm of the operator they apply to.
struct Tolerances {
  double herm = 1e-10;       // Hermiticity defect
  double trace = 1e-10;      // trace deviation
  double pos = 1e-10;        // allowed eigenvalue negativity
  double eig_rel = 1e-10;    // zero threshold for Kossakowski eigenvalues
  double rank_rel = 1e-10;   // SVD kernel threshold
  double group = 1e-6;       // eigenvalue grouping in projector extraction
  double subspace = 1e-8;    // principal-angle threshold for span equality
  double mat_eq = 1e-9;      // relative Frobenius matrix equality
  double stationary = 1e-9;  // residual ||L[rho]|| accepted as stationary
};

/// Pauli matrix; k = 0 returns the identity, sigma_3 is diag(1, -1).
Matrix pauli(int k);

/// Kronecker product, first factor = target, second factor = probe.
Matrix tensor(const Matrix& target, const Matrix& probe);

/// Trace out the second tensor factor of a 4x4 operator.
Matrix partial_trace_probe(const Matrix& rho);

/// rho = (I + sum_k b_k sigma_k) / 2. Rejects |b| > 1 beyond tolerance.
Matrix bloch_to_density(const Bloch& b, const Tolerances& tol = {});

/// Inverse of bloch_to_density: b_k = Re Tr(sigma_k rho).
Bloch density_to_bloch(const Matrix& rho);

/// Hilbert-Schmidt inner product Tr(a^dag b).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization and its inverse (square matrices).
CVector vectorize(const Matrix& m);
Matrix devectorize(const CVector& v);

Matrix commutator(const Matrix& a, const Matrix& b);

inline Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

double hermiticity_defect(const Matrix& m);

/// Validated quantum state: Hermitian, unit trace, positive semidefinite
/// within tolerance, dimension 2 or 4.
class DensityMatrix {
 public:
  static DensityMatrix validated(Matrix m, const Tolerances& tol = {});
  static DensityMatrix from_bloch(const Bloch& b, const Tolerances& tol = {});

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Trace out the probe factor of a validated two-qubit state.
DensityMatrix partial_trace_probe(const DensityMatrix& rho, const Tolerances& tol = {});

}  // namespace steadykit
