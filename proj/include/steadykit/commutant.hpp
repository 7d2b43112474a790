#pragma once

#include <random>
#include <vector>

#include "steadykit/semigroup.hpp"

namespace steadykit {

/// A linear span of operators on a fixed Hilbert space, kept HS-orthonormal.
/// The spans produced here (commutants, centers) are closed under adjoint
/// and contain the identity.
struct OperatorAlgebra {
  Eigen::Index dim = 0;        // Hilbert-space dimension
  std::vector<Matrix> basis;   // HS-orthonormal
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis.size()); }
};

/// {x : [x, o] = 0 for every o in ops}, computed as the null space of the
/// stacked commutation map. Callers wanting the adjoint-closed form
/// {v, v^dag}' must include the adjoints in ops.
OperatorAlgebra commutant_of_set(const std::vector<Matrix>& ops,
                                 const Tolerances& tol = {});

OperatorAlgebra algebra_intersection(const OperatorAlgebra& x, const OperatorAlgebra& y,
                                     const Tolerances& tol = {});

/// m = {h, v_i, v_i^dag; i}': the commutant driving the stationary-state
/// structure. The Hamiltonian is omitted when (numerically) zero; the
/// dissipator list is expected to carry surviving channels only.
OperatorAlgebra compute_commutant_m(const Matrix& hamiltonian,
                                    const std::vector<Matrix>& dissipators,
                                    const Tolerances& tol = {});

/// Complete family of pairwise-orthogonal projectors spanning an abelian
/// algebra.
struct ProjectorFamily {
  std::vector<Matrix> projectors;
  std::vector<int> ranks;
};

struct CenterDecomposition {
  OperatorAlgebra center;  // z = m intersect m'
  ProjectorFamily family;  // minimal projectors of z
};

/// Extracts z = m intersect m' and its minimal projectors by diagonalizing a
/// random Hermitian element of z (retries on ambiguous eigenvalue grouping).
CenterDecomposition center_and_projectors(const OperatorAlgebra& m,
                                          std::mt19937_64& rng,
                                          const Tolerances& tol = {});

enum class CaseLabel { CaseI, CaseII, CaseIII, CaseIV, TrivialUnique, Unclassified };

struct CaseClassification {
  CaseLabel label = CaseLabel::Unclassified;
  int n_plus = 0;
  int n_minus = 0;
  bool a_symmetric = false;     // a == a^T
  bool b_equals_a = false;      // b == a
  bool b_proportional = false;  // b == alpha a with real alpha
  double alpha = 0.0;           // valid when b_proportional
};

/// Structural classification of the dissipative dynamics (Hamiltonian-free):
///   I:   n+ = 1, a = a^T, b = a          II:  n+ = 1, a != a^T, b = a
///   III: n+ = n- = 1, a = a^T, b = alpha a (alpha real, != +-1)
///   IV:  n+ > 1, b = a
/// otherwise TrivialUnique when the commutant m collapses to span(I), else
/// Unclassified.
CaseClassification classify_case(const KossakowskiBlocks& blocks,
                                 const DiagonalizedGenerator& diag,
                                 const Tolerances& tol = {});

enum class CommutantKind { Plus, Minus };

/// Closed-form six-element commutant basis of a single collective dissipator,
/// used as a differential cross-check of commutant_of_set. Requires a
/// non-singular sigma (SingularSigmaError otherwise).
OperatorAlgebra canonical_commutant(const Matrix& sigma, CommutantKind kind,
                                    const Tolerances& tol = {});

/// sum_k sigma_k (x) sigma_k; eigenvalue +1 on the triplet, -3 on the singlet.
Matrix omega_plus();
Matrix singlet_projector();
Matrix triplet_projector();

/// Projection residual of x onto the span of alg (0 when contained).
double containment_residual(const OperatorAlgebra& alg, const Matrix& x);
bool spans_equal(const OperatorAlgebra& x, const OperatorAlgebra& y,
                 const Tolerances& tol = {});

}  // namespace steadykit
