#pragma once

#include <array>
#include <random>

#include "steadykit/commutant.hpp"
#include "steadykit/oracle.hpp"

namespace steadykit {

/// Kernel of a generator: kernel_dim is the complex dimension; basis is a
/// Hermitian HS-orthonormal spanning set of the (adjoint-closed) kernel.
struct StationaryFamily {
  std::vector<Matrix> basis;
  Eigen::Index kernel_dim = 0;
};

StationaryFamily stationary_subspace(const Liouvillian& l, const Tolerances& tol = {});

struct MaximalRankResult {
  bool found = false;
  Matrix rho0;                  // trace-1 stationary state when found
  double min_eigenvalue = 0.0;  // best achieved minimum eigenvalue
};

/// Searches the trace-1 slice of the stationary family for a full-rank
/// state: the projection of the maximally mixed state first, then a
/// multi-start concave ascent of the minimum eigenvalue.
MaximalRankResult find_maximal_rank_state(const StationaryFamily& fam,
                                          std::mt19937_64& rng,
                                          const Tolerances& tol = {});

enum class LimitMode { CenterEqualsM, CenterEqualsMPrime };

/// The two extreme asymptotic maps of the structure theorem:
///   CenterEqualsM:      sum_n Tr(P_n rho_init P_n) P_n rho0 P_n / Tr(P_n rho0 P_n)
///   CenterEqualsMPrime: sum_n P_n rho_init P_n
/// rho0 is only consulted in the first mode and must give every block
/// positive weight there.
Matrix theorem1_limit(const Matrix& rho0, const ProjectorFamily& fam,
                      const Matrix& rho_init, LimitMode mode,
                      const Tolerances& tol = {});

/// Ground-truth asymptote: the peripheral spectral projector applied to the
/// initial state, reduced to the target's Bloch vector (the state's own
/// Bloch vector for single-qubit generators). Throws NoLimitError for
/// non-relaxing dynamics.
Bloch asymptotic_target_state(const Matrix& rho_init, const Liouvillian& l,
                              const Tolerances& tol = {});

/// Closed-form single-channel asymptotes for a real orthogonal row u (the
/// direction of the surviving collective dissipator): the dynamics dephases
/// onto that axis. Verified against asymptotic_target_state.
Bloch case1_product_asymptote(const Eigen::Vector3d& u_row, const Bloch& bloch_t);
Bloch case1_schmidt_asymptote(const Eigen::Vector3d& u_row, double p);

/// Stationary family of a single non-Hermitian collective channel with
/// direction (e^{i beta1} cos gamma, e^{i beta2} sin gamma, 0); every member
/// is singular, so no maximal-rank stationary state exists.
Matrix case2_stationary_family(double beta1, double beta2, double gamma, double r5);

/// Stationary family 1/4 (I + r1 I(x)s + r2 s(x)I + r3 s(x)s) of the mixed
/// plus/minus pair sharing a Hermitian direction s (unit Bloch coefficients).
/// equal_rates = false forces r2 := r1.
Matrix case3_stationary_family(const Matrix& sigma, double r1, double r2, double r3,
                               bool equal_rates);

/// Closed forms for the pumped-Kossakowski family with b = a:
/// maximal-rank state, its coefficients, and the asymptote evaluators
/// (oracle-verified forms).
struct CaseFourForms {
  std::array<double, 3> r{};  // r1 = -2d/(a+b), r2, r3
  Matrix rho0;

  double uncorrelated_z(const Bloch& bloch_t, const Bloch& bloch_a) const;
  double schmidt_z(double p) const;  // independent of p
};

CaseFourForms case4_closed_forms(double a, double b, double c, double d,
                                 const Tolerances& tol = {});

/// Unique single-qubit stationary Bloch vector (0, 0, -2d/(a+b)).
Bloch single_qubit_asymptote(double a, double b, double d);

/// sqrt(P)|up,up> + sqrt(1-P)|down,down> as a density matrix.
Matrix schmidt_state(double p);

}  // namespace steadykit
