#include "steadykit/commutant.hpp"

#include <algorithm>

#include "steadykit/linalg.hpp"

namespace steadykit {

namespace {

Matrix stack_as_columns(const std::vector<Matrix>& mats) {
  if (mats.empty()) return Matrix(0, 0);
  const Eigen::Index n = mats[0].size();
  Matrix out(n, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) out.col(i) = vectorize(mats[i]);
  return out;
}

OperatorAlgebra algebra_from_columns(Eigen::Index dim, const Matrix& cols) {
  OperatorAlgebra out;
  out.dim = dim;
  for (Eigen::Index j = 0; j < cols.cols(); ++j)
    out.basis.push_back(devectorize(cols.col(j)));
  return out;
}

}  // namespace

OperatorAlgebra commutant_of_set(const std::vector<Matrix>& ops, const Tolerances& tol) {
  if (ops.empty()) throw ValidationError("commutant_of_set: empty operator set");
  const Eigen::Index d = ops[0].rows();
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(ops.size()) * d * d, d * d);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Matrix& o = ops[i];
    if (o.rows() != d || o.cols() != d)
      throw ShapeError("commutant_of_set: mixed operator dimensions");
    // vec([x, o]) = (o^T (x) I - I (x) o) vec(x)
    stacked.middleRows(static_cast<Eigen::Index>(i) * d * d, d * d) =
        tensor(o.transpose(), id) - tensor(id, o);
  }
  return algebra_from_columns(d, svd_kernel(stacked, tol.rank_rel));
}

OperatorAlgebra algebra_intersection(const OperatorAlgebra& x, const OperatorAlgebra& y,
                                     const Tolerances& tol) {
  if (x.dim != y.dim) throw ShapeError("algebra_intersection: dimension mismatch");
  if (x.basis.empty() || y.basis.empty()) return OperatorAlgebra{x.dim, {}};
  const Matrix qx = stack_as_columns(x.basis);
  const Matrix qy = stack_as_columns(y.basis);
  Matrix joint(qx.rows(), qx.cols() + qy.cols());
  joint << qx, -qy;
  const Matrix null_pairs = svd_kernel(joint, tol.rank_rel * 10);
  if (null_pairs.cols() == 0) return OperatorAlgebra{x.dim, {}};
  const Matrix members = qx * null_pairs.topRows(qx.cols());
  return algebra_from_columns(x.dim, orthonormalize_columns(members, 1e-7));
}

OperatorAlgebra compute_commutant_m(const Matrix& hamiltonian,
                                    const std::vector<Matrix>& dissipators,
                                    const Tolerances& tol) {
  std::vector<Matrix> set;
  for (const auto& v : dissipators) {
    set.push_back(v);
    set.push_back(v.adjoint());
  }
  if (hamiltonian.size() > 0 && hamiltonian.norm() > tol.herm)
    set.push_back(hamiltonian);
  if (set.empty()) {
    // nothing constrains the dynamics: the commutant is everything
    const Eigen::Index d = hamiltonian.rows();
    OperatorAlgebra out;
    out.dim = d;
    for (Eigen::Index k = 0; k < d * d; ++k) {
      CVector e = CVector::Zero(d * d);
      e(k) = 1.0;
      out.basis.push_back(devectorize(e));
    }
    return out;
  }
  return commutant_of_set(set, tol);
}

CenterDecomposition center_and_projectors(const OperatorAlgebra& m,
                                          std::mt19937_64& rng,
                                          const Tolerances& tol) {
  CenterDecomposition out;
  const OperatorAlgebra m_prime = commutant_of_set(m.basis, tol);
  out.center = algebra_intersection(m, m_prime, tol);

  // Hermitian spanning set of the center (closed under adjoint).
  std::vector<Matrix> herm;
  for (const auto& z : out.center.basis) {
    herm.push_back(hermitian_part(z));
    herm.push_back((z - z.adjoint()) / Complex(0.0, 2.0));
  }
  const std::vector<Matrix> hbasis = orthonormalize_hermitian(herm);
  const auto groups_wanted = out.center.dimension();
  if (static_cast<Eigen::Index>(hbasis.size()) != groups_wanted)
    throw Error("center_and_projectors: center is not adjoint-closed");

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Matrix probe = Matrix::Zero(m.dim, m.dim);
    for (const auto& h : hbasis) probe += gauss(rng) * h;
    const HermitianEigen eig = hermitian_eigs(probe);

    std::vector<std::pair<int, int>> groups;  // [first, last] eigenvalue index
    int start = 0;
    for (int i = 1; i <= eig.values.size(); ++i) {
      if (i == eig.values.size() || eig.values(i) - eig.values(i - 1) > tol.group) {
        groups.emplace_back(start, i - 1);
        start = i;
      }
    }
    if (static_cast<Eigen::Index>(groups.size()) != groups_wanted) continue;

    ProjectorFamily fam;
    for (const auto& [lo, hi] : groups) {
      Matrix p = Matrix::Zero(m.dim, m.dim);
      for (int k = lo; k <= hi; ++k)
        p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
      fam.projectors.push_back(p);
      fam.ranks.push_back(hi - lo + 1);
    }
    // deterministic order: rank descending, then position of the range
    const Matrix pos = [&] {
      Matrix n = Matrix::Zero(m.dim, m.dim);
      for (Eigen::Index i = 0; i < m.dim; ++i) n(i, i) = double(i);
      return n;
    }();
    std::vector<std::size_t> order(fam.projectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (fam.ranks[a] != fam.ranks[b]) return fam.ranks[a] > fam.ranks[b];
      const double ka = (pos * fam.projectors[a]).trace().real();
      const double kb = (pos * fam.projectors[b]).trace().real();
      return ka < kb - 1e-9;
    });
    ProjectorFamily sorted;
    for (std::size_t i : order) {
      sorted.projectors.push_back(fam.projectors[i]);
      sorted.ranks.push_back(fam.ranks[i]);
    }
    out.family = std::move(sorted);
    return out;
  }
  throw GroupingAmbiguousError(
      "center_and_projectors: eigenvalue groups stayed ambiguous after 5 probes");
}

namespace {

bool matrices_equal(const Matrix& x, const Matrix& y, double rel_tol) {
  return (x - y).norm() <= rel_tol * std::max(1.0, std::max(x.norm(), y.norm()));
}

}  // namespace

CaseClassification classify_case(const KossakowskiBlocks& blocks,
                                 const DiagonalizedGenerator& diag,
                                 const Tolerances& tol) {
  CaseClassification out;
  out.n_plus = diag.n_plus;
  out.n_minus = diag.n_minus;
  out.a_symmetric = matrices_equal(blocks.a, blocks.a.transpose(), tol.mat_eq);
  out.b_equals_a = matrices_equal(blocks.b, blocks.a, tol.mat_eq);

  const double a2 = hs_inner(blocks.a, blocks.a).real();
  if (a2 > tol.mat_eq) {
    const Complex alpha = hs_inner(blocks.a, blocks.b) / a2;
    if (std::abs(alpha.imag()) <= tol.mat_eq &&
        matrices_equal(blocks.b, alpha.real() * blocks.a, tol.mat_eq)) {
      out.b_proportional = true;
      out.alpha = alpha.real();
    }
  }

  const bool alpha_unit = out.b_proportional && (std::abs(out.alpha - 1.0) <= tol.mat_eq ||
                                                 std::abs(out.alpha + 1.0) <= tol.mat_eq);
  if (out.n_plus == 1 && out.a_symmetric && out.b_equals_a) {
    out.label = CaseLabel::CaseI;
  } else if (out.n_plus == 1 && !out.a_symmetric && out.b_equals_a) {
    out.label = CaseLabel::CaseII;
  } else if (out.n_plus == 1 && out.n_minus == 1 && out.a_symmetric &&
             out.b_proportional && !alpha_unit) {
    out.label = CaseLabel::CaseIII;
  } else if (out.n_plus > 1 && out.b_equals_a) {
    out.label = CaseLabel::CaseIV;
  } else {
    const auto dissipators = build_lindblad_operators(diag, tol);
    const Matrix h0 = Matrix::Zero(4, 4);
    const OperatorAlgebra m = compute_commutant_m(h0, dissipators, tol);
    out.label = m.dimension() == 1 ? CaseLabel::TrivialUnique : CaseLabel::Unclassified;
  }
  return out;
}

OperatorAlgebra canonical_commutant(const Matrix& sigma, CommutantKind kind,
                                    const Tolerances& tol) {
  const InvolutorySimilarity sim = similarity_transform(sigma, tol);
  const Matrix id = pauli(0);
  const Matrix rr = tensor(sim.r, sim.r);
  std::vector<Matrix> basis = {
      tensor(id, id), tensor(id, sigma), tensor(sigma, id), tensor(sigma, sigma)};
  if (kind == CommutantKind::Plus) {
    basis.push_back(omega_plus());
    basis.push_back(rr * (tensor(pauli(1), pauli(2)) - tensor(pauli(2), pauli(1))) * rr);
  } else {
    basis.push_back(rr * (tensor(pauli(1), pauli(1)) - tensor(pauli(2), pauli(2))) * rr);
    basis.push_back(rr * (tensor(pauli(1), pauli(2)) + tensor(pauli(2), pauli(1))) * rr);
  }
  return algebra_from_columns(4, orthonormalize_columns(stack_as_columns(basis), 1e-9));
}

Matrix omega_plus() {
  Matrix out = Matrix::Zero(4, 4);
  for (int k = 1; k <= 3; ++k) out += tensor(pauli(k), pauli(k));
  return out;
}

Matrix singlet_projector() {
  return (tensor(pauli(0), pauli(0)) - omega_plus()) / 4.0;
}

Matrix triplet_projector() {
  return tensor(pauli(0), pauli(0)) - singlet_projector();
}

double containment_residual(const OperatorAlgebra& alg, const Matrix& x) {
  Matrix res = x;
  for (const auto& b : alg.basis) res -= hs_inner(b, x) * b;
  return res.norm();
}

bool spans_equal(const OperatorAlgebra& x, const OperatorAlgebra& y,
                 const Tolerances& tol) {
  if (x.dimension() != y.dimension()) return false;
  if (x.basis.empty()) return true;
  Matrix qx(x.dim * x.dim, x.dimension());
  Matrix qy(y.dim * y.dim, y.dimension());
  for (Eigen::Index i = 0; i < x.dimension(); ++i) qx.col(i) = vectorize(x.basis[i]);
  for (Eigen::Index i = 0; i < y.dimension(); ++i) qy.col(i) = vectorize(y.basis[i]);
  return subspace_distance(qx, qy) <= tol.subspace;
}

}  // namespace steadykit
