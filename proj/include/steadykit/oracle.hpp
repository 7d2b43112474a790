#pragma once

#include <vector>

#include "steadykit/semigroup.hpp"

namespace steadykit {

/// Spectral picture of a generator: every eigenvalue, plus the spectral
/// projector onto the peripheral cluster Re(lambda) >= -zero_threshold.
/// When the peripheral spectrum sits entirely at 0 the projector equals the
/// t -> infinity limit of exp(tL).
struct SpectralData {
  CVector eigenvalues;          // Schur diagonal, peripheral entries first
  Matrix peripheral_projector;  // d^2 x d^2, idempotent, commutes with L
  Eigen::Index peripheral_dimension = 0;
  double zero_threshold = 0.0;
};

/// rho(t) = devec(exp(tL) vec(rho)); eigendecomposition with a
/// scaling-and-squaring fallback when the eigenvector basis is
/// ill-conditioned.
Matrix propagate(const Liouvillian& l, const Matrix& rho, double t);

/// Fixed-step classical RK4 integration of rho' = L[rho]; the independent
/// second integrator. Rejects steps beyond the linear stability bound.
Matrix rk4_evolve(const Liouvillian& l, const Matrix& rho, double t, double dt);

/// Schur decomposition, clustering of the peripheral eigenvalues to the
/// leading block, and the associated spectral projector via a triangular
/// Sylvester solve.
SpectralData peripheral_projector(const Liouvillian& l, const Tolerances& tol = {});

enum class SemigroupClass { UniquelyRelaxing, Relaxing, NonRelaxing };

/// UniquelyRelaxing: one peripheral eigenvalue, at 0. Relaxing: several, all
/// at 0. NonRelaxing: peripheral eigenvalues with surviving imaginary parts.
SemigroupClass classify_semigroup(const SpectralData& spec, const Tolerances& tol = {});

struct InvariantReport {
  double max_trace_drift = 0.0;
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
};

InvariantReport invariant_monitor(const std::vector<Matrix>& trajectory);

}  // namespace steadykit
