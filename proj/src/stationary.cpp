#include "steadykit/stationary.hpp"

#include <cmath>

#include "steadykit/linalg.hpp"

namespace steadykit {

StationaryFamily stationary_subspace(const Liouvillian& l, const Tolerances& tol) {
  StationaryFamily out;
  const Matrix kernel = svd_kernel(l.matrix, tol.rank_rel);
  out.kernel_dim = kernel.cols();
  std::vector<Matrix> herm;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    const Matrix k = devectorize(kernel.col(j));
    herm.push_back(hermitian_part(k));
    herm.push_back((k - k.adjoint()) / Complex(0.0, 2.0));
  }
  out.basis = orthonormalize_hermitian(herm, 1e-7);
  return out;
}

namespace {

double min_eigenvalue(const Matrix& m) {
  return hermitian_eigs(m).values.minCoeff();
}

}  // namespace

MaximalRankResult find_maximal_rank_state(const StationaryFamily& fam,
                                          std::mt19937_64& rng,
                                          const Tolerances& tol) {
  MaximalRankResult out;
  if (fam.basis.empty()) return out;
  const Eigen::Index d = fam.basis[0].rows();
  const auto m = static_cast<Eigen::Index>(fam.basis.size());

  // trace functional over the family
  Eigen::VectorXd traces(m);
  for (Eigen::Index i = 0; i < m; ++i) traces(i) = fam.basis[i].trace().real();
  const double tnorm2 = traces.squaredNorm();
  if (tnorm2 < 1e-20) return out;  // no trace-carrying element

  auto assemble = [&](const Eigen::VectorXd& coeff) {
    Matrix x = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < m; ++i) x += coeff(i) * fam.basis[i];
    return x;
  };

  // first candidate: projection of the maximally mixed state
  Eigen::VectorXd c0(m);
  const Matrix mixed = Matrix::Identity(d, d) / double(d);
  for (Eigen::Index i = 0; i < m; ++i) c0(i) = hs_inner(fam.basis[i], mixed).real();
  if (std::abs(c0.dot(traces)) > 1e-12) {
    c0 /= c0.dot(traces);
    const Matrix cand = assemble(c0);
    const double lam = min_eigenvalue(cand);
    if (lam > tol.pos) {
      out.found = true;
      out.rho0 = hermitian_part(cand);
      out.min_eigenvalue = lam;
      return out;
    }
  } else {
    c0 = traces / tnorm2;  // minimum-norm trace-1 coefficients
  }

  // traceless directions within the family (null space of the trace row)
  Matrix trow(1, m);
  for (Eigen::Index i = 0; i < m; ++i) trow(0, i) = traces(i);
  const Matrix dirs_c = svd_kernel(trow, 1e-12);
  const Eigen::Index ndir = dirs_c.cols();
  Eigen::MatrixXd dirs = dirs_c.real();

  // concave maximization of the minimum eigenvalue over the trace-1 slice
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd best_c = c0;
  double best = min_eigenvalue(assemble(c0));
  const int starts = 4, iters = ndir > 0 ? 120 : 0;
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ndir);
    if (s > 0)
      for (Eigen::Index i = 0; i < ndir; ++i) x(i) = 0.3 * gauss(rng);
    Eigen::VectorXd coeff = c0 + dirs * x;
    for (int it = 0; it < iters; ++it) {
      const Matrix state = assemble(coeff);
      const HermitianEigen eig = hermitian_eigs(state);
      const double lam = eig.values.minCoeff();
      if (lam > best) {
        best = lam;
        best_c = coeff;
      }
      // supergradient of lambda_min: v v^dag projected onto the slice
      const CVector v = eig.vectors.col(0);
      Eigen::VectorXd g(ndir);
      for (Eigen::Index j = 0; j < ndir; ++j) {
        const Matrix dj = assemble(dirs.col(j));
        g(j) = (v.adjoint() * dj * v)(0).real();
      }
      const double gn = g.norm();
      if (gn < 1e-14) break;
      const double step = 0.25 / (1.0 + it / 15.0);
      x += step * g / gn;
      coeff = c0 + dirs * x;
    }
  }
  out.min_eigenvalue = best;
  if (best > tol.pos) {
    Matrix rho = hermitian_part(assemble(best_c));
    rho /= rho.trace().real();
    out.found = true;
    out.rho0 = rho;
  }
  return out;
}

Matrix theorem1_limit(const Matrix& rho0, const ProjectorFamily& fam,
                      const Matrix& rho_init, LimitMode mode, const Tolerances& tol) {
  if (fam.projectors.empty()) throw ValidationError("theorem1_limit: empty family");
  const Eigen::Index d = fam.projectors[0].rows();
  Matrix out = Matrix::Zero(d, d);
  for (const auto& p : fam.projectors) {
    if (mode == LimitMode::CenterEqualsMPrime) {
      out += p * rho_init * p;
    } else {
      const double w0 = (p * rho0 * p).trace().real();
      if (w0 <= tol.pos)
        throw ValidationError("theorem1_limit: block weight of rho0 vanishes");
      const double w = (p * rho_init * p).trace().real();
      out += w * (p * rho0 * p) / w0;
    }
  }
  return hermitian_part(out);
}

Bloch asymptotic_target_state(const Matrix& rho_init, const Liouvillian& l,
                              const Tolerances& tol) {
  const SpectralData spec = peripheral_projector(l, tol);
  if (classify_semigroup(spec, tol) == SemigroupClass::NonRelaxing)
    throw NoLimitError("asymptotic_target_state: oscillatory peripheral spectrum");
  const Matrix limit =
      hermitian_part(devectorize(spec.peripheral_projector * vectorize(rho_init)));
  if (l.hilbert_dim == 4) return density_to_bloch(partial_trace_probe(limit));
  return density_to_bloch(limit);
}

Bloch case1_product_asymptote(const Eigen::Vector3d& u_row, const Bloch& bloch_t) {
  return u_row * u_row.dot(bloch_t);
}

Bloch case1_schmidt_asymptote(const Eigen::Vector3d& u_row, double p) {
  return (2.0 * p - 1.0) * u_row(2) * u_row;
}

Matrix case2_stationary_family(double beta1, double beta2, double gamma, double r5) {
  const double s2g = std::sin(2 * gamma), c2g = std::cos(2 * gamma);
  const double db = beta1 - beta2;
  const double r1 = -0.5 * (r5 + 1) * std::sin(db) * s2g;
  const double r2 = 0.5 * ((r5 - 1) - (r5 + 1) * c2g);
  const double r3 = -0.5 * (r5 + 1) * std::cos(db) * s2g;
  const double r4 = 0.5 * ((r5 - 1) + (r5 + 1) * c2g);
  const Matrix id = pauli(0);
  return (tensor(id, id) + r1 * (tensor(id, pauli(3)) + tensor(pauli(3), id)) +
          r2 * tensor(pauli(1), pauli(1)) +
          r3 * (tensor(pauli(1), pauli(2)) + tensor(pauli(2), pauli(1))) +
          r4 * tensor(pauli(2), pauli(2)) + r5 * tensor(pauli(3), pauli(3))) /
         4.0;
}

Matrix case3_stationary_family(const Matrix& sigma, double r1, double r2, double r3,
                               bool equal_rates) {
  if (sigma.rows() != 2 || sigma.cols() != 2)
    throw ShapeError("case3_stationary_family: sigma must be 2x2");
  if (hermiticity_defect(sigma) > 1e-10 || std::abs(sigma.trace()) > 1e-10)
    throw ValidationError("case3_stationary_family: sigma must be Hermitian traceless");
  if (!equal_rates) r2 = r1;
  const Matrix id = pauli(0);
  return (tensor(id, id) + r1 * tensor(id, sigma) + r2 * tensor(sigma, id) +
          r3 * tensor(sigma, sigma)) /
         4.0;
}

CaseFourForms case4_closed_forms(double a, double b, double c, double d,
                                 const Tolerances& tol) {
  if (a < -tol.pos || b < -tol.pos || c < -tol.pos || a * b - d * d < -tol.pos)
    throw NotCompletelyPositiveError("case4_closed_forms: rates violate positivity");
  if (a + b <= tol.pos)
    throw ValidationError("case4_closed_forms: a + b must be positive");
  CaseFourForms out;
  const double den = (a + b) * (a * b + a * c + b * c);
  out.r[0] = -2.0 * d / (a + b);
  out.r[1] = den > 0 ? (b - a) * d * d / den : 0.0;
  out.r[2] = den > 0 ? (a + b + 4 * c) * d * d / den : 0.0;
  const Matrix id = pauli(0);
  out.rho0 = (tensor(id, id) +
              out.r[0] * (tensor(id, pauli(3)) + tensor(pauli(3), id)) +
              out.r[1] * (tensor(pauli(1), pauli(1)) - tensor(pauli(2), pauli(2))) +
              out.r[2] * tensor(pauli(3), pauli(3))) /
             4.0;
  return out;
}

double CaseFourForms::uncorrelated_z(const Bloch& bloch_t, const Bloch& bloch_a) const {
  return r[0] * (3.0 + bloch_t.dot(bloch_a)) / (3.0 + r[2]);
}

double CaseFourForms::schmidt_z(double) const { return 4.0 * r[0] / (3.0 + r[2]); }

Bloch single_qubit_asymptote(double a, double b, double d) {
  if (a + b <= 0) {
    if (std::abs(d) > 0)
      throw NotCompletelyPositiveError("single_qubit_asymptote: a + b = 0 with d != 0");
    throw ValidationError("single_qubit_asymptote: a + b must be positive");
  }
  return Bloch(0.0, 0.0, -2.0 * d / (a + b));
}

Matrix schmidt_state(double p) {
  if (p < 0.0 || p > 1.0) throw ValidationError("schmidt_state: P must lie in [0, 1]");
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = p;
  rho(3, 3) = 1.0 - p;
  rho(0, 3) = rho(3, 0) = std::sqrt(p * (1.0 - p));
  return rho;
}

}  // namespace steadykit
