#include "steadykit/verify.hpp"

#include <random>
#include <sstream>

#include "steadykit/linalg.hpp"
#include "steadykit/report.hpp"

namespace steadykit {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Pipeline {
  KossakowskiBlocks blocks;
  DiagonalizedGenerator diag;
  std::vector<Matrix> dissipators;
  Liouvillian l;
};

Pipeline make_pipeline(const Matrix& a, const Matrix& b,
                       const Matrix& h = Matrix::Zero(4, 4)) {
  Pipeline p;
  p.blocks = assemble_kossakowski(a, b);
  p.diag = diagonalize_blocks(p.blocks);
  p.dissipators = build_lindblad_operators(p.diag);
  p.l = build_liouvillian(h, p.dissipators);
  return p;
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
  while (v.norm() < 1e-3) v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  return v.normalized();
}

Bloch random_bloch(std::mt19937_64& rng, double radius = 0.9) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Bloch b(u(rng), u(rng), u(rng));
  if (b.norm() > 1.0) b /= b.norm();
  return radius * b;
}

Matrix product_state(const Bloch& bt, const Bloch& ba) {
  return tensor(bloch_to_density(bt), bloch_to_density(ba));
}

/// Rank-1 Hermitian block (lambda/2) g g^dag whose diagonalization row is
/// conj(g) — the single surviving channel has direction sum_k g_k sigma_k.
Matrix rank_one_block(const Eigen::Vector3cd& g, double lambda) {
  return (lambda / 2.0) * (g * g.adjoint());
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::string fmt_full(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

CheckResult single_qubit_baseline(std::uint64_t seed) {
  CheckResult r{"single_qubit_baseline", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rate(0.1, 2.0), cdist(0.0, 2.0),
      frac(-0.95, 0.95);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rate(rng), b = rate(rng), c = cdist(rng);
    const double d = frac(rng) * std::sqrt(a * b);
    const Liouvillian l =
        build_single_qubit_liouvillian(pumped_kossakowski(a, b, c, d), Matrix::Zero(2, 2));
    const SpectralData spec = peripheral_projector(l);
    if (classify_semigroup(spec) != SemigroupClass::UniquelyRelaxing) {
      r.passed = false;
      r.detail = "not uniquely relaxing at trial " + std::to_string(trial);
      return r;
    }
    const StationaryFamily fam = stationary_subspace(l);
    Matrix rho = fam.basis.at(0);
    rho /= rho.trace().real();
    const Bloch got = density_to_bloch(hermitian_part(rho));
    const Bloch want = single_qubit_asymptote(a, b, d);
    worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
  }
  r.passed = worst <= 1e-8;
  r.detail = "max |bloch - (0,0,-2d/(a+b))| = " + fmt(worst) + " (tol 1e-8)";
  return r;
}

CheckResult case1_formula_reproduction(std::uint64_t seed) {
  CheckResult r{"case1_product_and_schmidt_formulas", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(0.3, 2.0), pdist(0.0, 1.0);
  double worst_prod = 0, worst_schmidt = 0, worst_variant = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Vector3d v = random_unit(rng);
    const Matrix a = lam(rng) * (v * v.transpose()).cast<Complex>();
    const Pipeline p = make_pipeline(a, a);
    const Bloch bt = random_bloch(rng), ba = random_bloch(rng);
    const Bloch oracle = asymptotic_target_state(product_state(bt, ba), p.l);
    worst_prod = std::max(
        worst_prod, (oracle - case1_product_asymptote(v, bt)).cwiseAbs().maxCoeff());
    const double s = bt(0) * v(0) - bt(1) * v(1) + bt(2) * v(2);
    const Bloch variant(v(0) * s, -v(1) * s, v(2) * s);
    worst_variant = std::max(worst_variant, (oracle - variant).cwiseAbs().maxCoeff());

    const double pval = pdist(rng);
    const Bloch oracle_s = asymptotic_target_state(schmidt_state(pval), p.l);
    worst_schmidt = std::max(
        worst_schmidt,
        (oracle_s - case1_schmidt_asymptote(v, pval)).cwiseAbs().maxCoeff());
  }
  r.passed = worst_prod <= 1e-7 && worst_schmidt <= 1e-7;
  r.detail = "max |oracle - formula|: product " + fmt(worst_prod) + ", schmidt " +
             fmt(worst_schmidt) + " (tol 1e-7)";
  if (worst_variant > formula_tolerance)
    r.warnings.push_back("conjugated sign-pattern variant of the product formula "
                         "deviates from the oracle by up to " +
                         fmt(worst_variant) + "; the plain projection form matches");
  return r;
}

CheckResult case1_probe_independence(std::uint64_t seed) {
  CheckResult r{"case1_probe_independence", true, "", {}};
  std::mt19937_64 rng(seed);
  const Eigen::Vector3d v = random_unit(rng);
  const Matrix a = 0.8 * (v * v.transpose()).cast<Complex>();
  const Pipeline p = make_pipeline(a, a);
  const Bloch bt = random_bloch(rng);
  double lo[3] = {1e9, 1e9, 1e9}, hi[3] = {-1e9, -1e9, -1e9};
  const double grid[5] = {-0.5, -0.25, 0.0, 0.25, 0.5};
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) {
        const Bloch oracle =
            asymptotic_target_state(product_state(bt, Bloch(x, y, z)), p.l);
        for (int k = 0; k < 3; ++k) {
          lo[k] = std::min(lo[k], oracle(k));
          hi[k] = std::max(hi[k], oracle(k));
        }
      }
  const double spread =
      std::max({hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]});
  r.passed = spread <= 1e-8;
  r.detail = "asymptote spread over the 5^3 probe grid = " + fmt(spread) + " (tol 1e-8)";
  return r;
}

CheckResult case2_obstruction(std::uint64_t seed) {
  CheckResult r{"case2_no_maximal_rank", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI), gdist(0.25, 1.3),
      lam(0.5, 1.5);
  double worst_det = 0, worst_res = 0, worst_eig = -1e9;
  for (int trial = 0; trial < 20; ++trial) {
    double b1 = angle(rng), b2 = angle(rng);
    while (std::abs(std::sin(b1 - b2)) < 0.2) b2 = angle(rng);
    const double g = gdist(rng), l0 = lam(rng);
    const Eigen::Vector3cd ustar(std::exp(kI * b1) * std::cos(g),
                                 std::exp(kI * b2) * std::sin(g), 0.0);
    const Matrix a = rank_one_block(ustar, l0);
    const Pipeline p = make_pipeline(a, a);
    const CaseClassification cls = classify_case(p.blocks, p.diag);
    if (cls.label != CaseLabel::CaseII) {
      r.passed = false;
      r.detail = "fixture not classified as CaseII at trial " + std::to_string(trial);
      return r;
    }
    for (double r5 : {-0.4, -0.1, 0.0, 0.15, 0.35}) {
      const Matrix member = case2_stationary_family(b1, b2, g, r5);
      const Complex det = Eigen::FullPivLU<Matrix>(member).determinant();
      worst_det = std::max(worst_det, std::abs(det));
      worst_res = std::max(worst_res, (p.l.matrix * vectorize(member)).norm());
    }
    const StationaryFamily fam = stationary_subspace(p.l);
    const MaximalRankResult mr = find_maximal_rank_state(fam, rng);
    if (mr.found) {
      r.passed = false;
      r.detail = "a full-rank stationary state appeared at trial " +
                 std::to_string(trial);
      return r;
    }
    worst_eig = std::max(worst_eig, mr.min_eigenvalue);
  }
  r.passed = worst_det <= 1e-9 && worst_res <= 1e-9 && worst_eig <= 1e-9;
  r.detail = "max |det| = " + fmt(worst_det) + ", max residual = " + fmt(worst_res) +
             ", ascent max min-eig = " + fmt(worst_eig) + " (tol 1e-9)";
  return r;
}

CheckResult case3_equivalence(std::uint64_t seed) {
  CheckResult r{"case3_matches_case1_formulas", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(0.3, 1.5), adist(0.1, 0.9),
      pdist(0.0, 1.0);
  std::bernoulli_distribution flip(0.5);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d v = random_unit(rng);
    const double alpha = (flip(rng) ? 1.0 : -1.0) * adist(rng);
    const Matrix a = lam(rng) * (v * v.transpose()).cast<Complex>();
    const Pipeline p = make_pipeline(a, alpha * a);
    const CaseClassification cls = classify_case(p.blocks, p.diag);
    if (cls.label != CaseLabel::CaseIII) {
      r.passed = false;
      r.detail = "fixture not classified as CaseIII at trial " + std::to_string(trial);
      return r;
    }
    const Bloch bt = random_bloch(rng), ba = random_bloch(rng);
    const Bloch oracle = asymptotic_target_state(product_state(bt, ba), p.l);
    worst = std::max(worst,
                     (oracle - case1_product_asymptote(v, bt)).cwiseAbs().maxCoeff());
    const double pval = pdist(rng);
    const Bloch oracle_s = asymptotic_target_state(schmidt_state(pval), p.l);
    worst = std::max(
        worst, (oracle_s - case1_schmidt_asymptote(v, pval)).cwiseAbs().maxCoeff());
  }
  r.passed = worst <= 1e-7;
  r.detail = "max |oracle - single-channel formula| = " + fmt(worst) + " (tol 1e-7)";
  return r;
}

CheckResult case4_example(std::uint64_t seed) {
  CheckResult r{"case4_pumped_example", true, "", {}};
  (void)seed;
  const CaseFourForms forms = case4_closed_forms(1.0, 1.0, 1.0, 0.5);
  const Pipeline p = make_pipeline(pumped_kossakowski(1, 1, 1, 0.5),
                                   pumped_kossakowski(1, 1, 1, 0.5));
  const double r_err = std::max({std::abs(forms.r[0] + 0.5), std::abs(forms.r[1]),
                                 std::abs(forms.r[2] - 0.25)});
  const double res = (p.l.matrix * vectorize(forms.rho0)).norm();
  const Bloch oracle = asymptotic_target_state(Matrix::Identity(4, 4) / 4.0, p.l);
  const double z_want = -6.0 / 13.0;
  const double z_err = std::abs(oracle(2) - z_want);
  const double xy = std::max(std::abs(oracle(0)), std::abs(oracle(1)));

  // indirect control: the probe Bloch moves the asymptote
  const Bloch bt(0, 0, 0.5);
  double zlo = 1e9, zhi = -1e9;
  for (int i = 0; i < 9; ++i) {
    const double za = -0.8 + 0.2 * i;
    const Bloch out = asymptotic_target_state(product_state(bt, Bloch(0, 0, za)), p.l);
    zlo = std::min(zlo, out(2));
    zhi = std::max(zhi, out(2));
  }
  const double spread = zhi - zlo;

  r.passed = r_err <= 1e-9 && res <= 1e-9 && z_err <= 1e-7 && xy <= 1e-8 &&
             spread > 0.01;
  r.detail = "r error " + fmt(r_err) + ", ||L rho0|| " + fmt(res) + ", |z - (-6/13)| " +
             fmt(z_err) + ", probe-sweep spread " + fmt_full(spread);
  r.warnings.push_back(
      "published sign convention gives z = +0.461538 for the maximally mixed input; "
      "oracle value is " + fmt_full(oracle(2)));
  const double pub_schmidt = 4.0 * 0.5 * 1.5 / 3.25;
  const Bloch oracle_s = asymptotic_target_state(schmidt_state(0.5), p.l);
  r.warnings.push_back("published correlated form gives z = " + fmt_full(pub_schmidt) +
                       " at P = 1/2; oracle value is " + fmt_full(oracle_s(2)) +
                       " independent of P");
  return r;
}

CheckResult case4_symmetric_null(std::uint64_t seed) {
  CheckResult r{"case4_symmetric_a_null_asymptote", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rate(0.2, 1.8);
  double worst = 0;
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix a = pumped_kossakowski(rate(rng), rate(rng), rate(rng), 0.0);
    const Pipeline p = make_pipeline(a, a);
    const CaseClassification cls = classify_case(p.blocks, p.diag);
    if (cls.label != CaseLabel::CaseIV || !cls.a_symmetric) {
      r.passed = false;
      r.detail = "fixture not a symmetric CaseIV at trial " + std::to_string(trial);
      return r;
    }
    for (int k = 0; k < 4; ++k) {
      const Bloch oracle = asymptotic_target_state(
          product_state(random_bloch(rng), random_bloch(rng)), p.l);
      worst = std::max(worst, oracle.cwiseAbs().maxCoeff());
    }
  }
  r.passed = worst <= 1e-8;
  r.detail = "max |asymptote| over d = 0 fixtures = " + fmt(worst) + " (tol 1e-8)";
  return r;
}

CheckResult case4_formula_grid(std::uint64_t seed) {
  CheckResult r{"case4_formula_grid_crosscheck", true, "", {}};
  (void)seed;
  const Bloch bt(0.3, -0.2, 0.4), ba(-0.1, 0.5, 0.2);
  double worst_required = 0;    // corrected forms at a == b
  double worst_corrected = 0;   // corrected forms anywhere
  double worst_variant = 0;
  int variant_count = 0;
  std::string variant_example;
  for (double a : {0.6, 1.0, 1.4})
    for (double b : {0.6, 1.0, 1.4})
      for (double c : {0.5, 1.2})
        for (double dfrac : {0.25, 0.6}) {
          const double d = dfrac * std::sqrt(a * b);
          const CaseFourForms forms = case4_closed_forms(a, b, c, d);
          const Pipeline p =
              make_pipeline(pumped_kossakowski(a, b, c, d), pumped_kossakowski(a, b, c, d));
          const Bloch oracle_u = asymptotic_target_state(product_state(bt, ba), p.l);
          const double du = std::abs(forms.uncorrelated_z(bt, ba) - oracle_u(2));
          worst_corrected = std::max(worst_corrected, du);
          if (a == b) worst_required = std::max(worst_required, du);

          const double r1v = -forms.r[0], r2 = forms.r[1], r3 = forms.r[2];
          const double vu = r1v * (3 + bt.dot(ba)) / (3 + 2 * r2 + r3);
          if (std::abs(vu - oracle_u(2)) > formula_tolerance) {
            ++variant_count;
            worst_variant = std::max(worst_variant, std::abs(vu - oracle_u(2)));
            if (variant_example.empty())
              variant_example = "uncorrelated variant at a=" + fmt_full(a) +
                                " b=" + fmt_full(b) + ": formula " + fmt_full(vu) +
                                " vs oracle " + fmt_full(oracle_u(2));
          }
          for (double pval : {0.0, 0.3, 0.5, 0.8, 1.0}) {
            const Bloch oracle_s = asymptotic_target_state(schmidt_state(pval), p.l);
            const double ds = std::abs(forms.schmidt_z(pval) - oracle_s(2));
            worst_corrected = std::max(worst_corrected, ds);
            if (a == b) worst_required = std::max(worst_required, ds);
            const double vs =
                4 * r1v * (1 + std::sqrt(pval * (1 - pval))) / (3 + 2 * r2 + r3);
            if (std::abs(vs - oracle_s(2)) > formula_tolerance) {
              ++variant_count;
              worst_variant = std::max(worst_variant, std::abs(vs - oracle_s(2)));
            }
          }
        }
  r.passed = worst_required <= 1e-6;
  r.detail = "corrected forms vs oracle: " + fmt(worst_required) +
             " at a=b (required <= 1e-6), " + fmt(worst_corrected) + " on the whole grid";
  if (variant_count > 0) {
    r.warnings.push_back("published-variant formulas deviate from the oracle at " +
                         std::to_string(variant_count) + " grid points, worst " +
                         fmt(worst_variant));
    r.warnings.push_back(variant_example);
  }
  return r;
}

CheckResult table1_dimensions(std::uint64_t seed) {
  CheckResult r{"table1_algebra_dimensions", true, "", {}};
  std::mt19937_64 rng(seed);
  struct Fixture {
    const char* tag;
    Matrix a, b;
    CaseLabel label;
    Eigen::Index m_dim;
    std::vector<int> ranks;  // descending
  };
  std::vector<Fixture> fixtures;
  {
    Matrix a = Matrix::Zero(3, 3);
    a(2, 2) = 1.0;
    fixtures.push_back({"I", a, a, CaseLabel::CaseI, 6, {2, 1, 1}});
  }
  {
    const Eigen::Vector3cd ustar(std::exp(kI * 0.7) * std::cos(0.9),
                                 std::exp(kI * 0.1) * std::sin(0.9), 0.0);
    const Matrix a = rank_one_block(ustar, 1.0);
    fixtures.push_back({"II", a, a, CaseLabel::CaseII, 2, {3, 1}});
  }
  {
    const Eigen::Vector3d v = Eigen::Vector3d(1, 2, 2) / 3.0;
    const Matrix a = (v * v.transpose()).cast<Complex>();
    fixtures.push_back({"III", a, 0.5 * a, CaseLabel::CaseIII, 4, {1, 1, 1, 1}});
  }
  fixtures.push_back({"IV", pumped_kossakowski(1, 1, 1, 0.5),
                      pumped_kossakowski(1, 1, 1, 0.5), CaseLabel::CaseIV, 2, {3, 1}});

  std::string detail;
  for (const auto& f : fixtures) {
    const Pipeline p = make_pipeline(f.a, f.b);
    const CaseClassification cls = classify_case(p.blocks, p.diag);
    const OperatorAlgebra m =
        compute_commutant_m(Matrix::Zero(4, 4), p.dissipators);
    const CenterDecomposition center = center_and_projectors(m, rng);
    const bool ok = cls.label == f.label && m.dimension() == f.m_dim &&
                    center.family.ranks == f.ranks;
    if (!ok) r.passed = false;
    detail += std::string(f.tag) + ": dim M = " + std::to_string(m.dimension()) +
              ", ranks {";
    for (std::size_t i = 0; i < center.family.ranks.size(); ++i)
      detail += (i ? "," : "") + std::to_string(center.family.ranks[i]);
    detail += ok ? "} ok; " : "} MISMATCH; ";
  }
  r.detail = detail;
  return r;
}

CheckResult property_suite(std::uint64_t seed) {
  CheckResult r{"property_suite", true, "", {}};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::ostringstream detail;

  auto random_psd3 = [&] {
    Matrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = Complex(gauss(rng), gauss(rng)) / 2.0;
    return Matrix(g * g.adjoint());
  };
  auto random_blocks = [&] {
    const Matrix p1 = random_psd3(), p2 = random_psd3();  // a + b and a - b
    return std::pair<Matrix, Matrix>{(p1 + p2) / 2.0, (p1 - p2) / 2.0};
  };

  // generator reconstruction: Kossakowski route vs diagonalized route
  double worst_rec = 0;
  const auto basis2 = coupling_basis_two_qubit();
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = random_blocks();
    const Pipeline p = make_pipeline(a, b);
    const Liouvillian direct =
        liouvillian_from_kossakowski(Matrix::Zero(4, 4), p.blocks.c, basis2);
    worst_rec = std::max(worst_rec, (direct.matrix - p.l.matrix).norm() /
                                        std::max(1.0, direct.matrix.norm()));
  }
  const bool rec_ok = worst_rec <= 1e-10;
  detail << "reconstruction " << fmt(worst_rec) << (rec_ok ? " ok" : " FAIL");

  // trace/Hermiticity/positivity preservation along trajectories
  double worst_trace = 0, worst_herm = 0, min_eig = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const auto [a, b] = random_blocks();
    const Pipeline p = make_pipeline(a, b);
    const Matrix rho0 = product_state(random_bloch(rng), random_bloch(rng));
    std::vector<Matrix> traj{rho0};
    for (double t : {0.5, 5.0, 50.0, 100.0}) traj.push_back(propagate(p.l, rho0, t));
    const InvariantReport inv = invariant_monitor(traj);
    worst_trace = std::max(worst_trace, inv.max_trace_drift);
    worst_herm = std::max(worst_herm, inv.max_hermiticity_defect);
    min_eig = std::min(min_eig, inv.min_eigenvalue);
  }
  const bool traj_ok = worst_trace <= 1e-10 && worst_herm <= 1e-10 && min_eig >= -1e-9;
  detail << "; invariants trace " << fmt(worst_trace) << " herm " << fmt(worst_herm)
         << " mineig " << fmt(min_eig) << (traj_ok ? " ok" : " FAIL");

  // commutant residuals and double commutant growth
  double worst_comm = 0, worst_grow = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const auto [a, b] = random_blocks();
    const Pipeline p = make_pipeline(a, b);
    std::vector<Matrix> set;
    for (const auto& v : p.dissipators) {
      set.push_back(v);
      set.push_back(v.adjoint());
    }
    const OperatorAlgebra m = commutant_of_set(set);
    for (const auto& x : m.basis)
      for (const auto& o : set)
        worst_comm = std::max(worst_comm, commutator(x, o).norm());
    const OperatorAlgebra mpp = commutant_of_set(commutant_of_set(m.basis).basis);
    for (const auto& x : m.basis)
      worst_grow = std::max(worst_grow, containment_residual(mpp, x));
  }
  const bool comm_ok = worst_comm <= 1e-9 && worst_grow <= 1e-9;
  detail << "; commutant " << fmt(worst_comm) << " double " << fmt(worst_grow)
         << (comm_ok ? " ok" : " FAIL");

  // projector family axioms on the table fixtures
  double worst_proj = 0;
  {
    Matrix a1 = Matrix::Zero(3, 3);
    a1(2, 2) = 1.0;
    const std::vector<std::pair<Matrix, Matrix>> fixtures = {
        {a1, a1},
        {pumped_kossakowski(1, 1, 1, 0.5), pumped_kossakowski(1, 1, 1, 0.5)}};
    for (const auto& [a, b] : fixtures) {
      const Pipeline p = make_pipeline(a, b);
      const OperatorAlgebra m =
          compute_commutant_m(Matrix::Zero(4, 4), p.dissipators);
      const CenterDecomposition c = center_and_projectors(m, rng);
      Matrix sum = Matrix::Zero(4, 4);
      for (std::size_t i = 0; i < c.family.projectors.size(); ++i) {
        const Matrix& pi = c.family.projectors[i];
        worst_proj = std::max(worst_proj, (pi * pi - pi).norm());
        worst_proj = std::max(worst_proj, hermiticity_defect(pi));
        for (std::size_t j = i + 1; j < c.family.projectors.size(); ++j)
          worst_proj = std::max(worst_proj, (pi * c.family.projectors[j]).norm());
        sum += pi;
      }
      worst_proj = std::max(worst_proj, (sum - Matrix::Identity(4, 4)).norm());
    }
  }
  const bool proj_ok = worst_proj <= 1e-9;
  detail << "; projectors " << fmt(worst_proj) << (proj_ok ? " ok" : " FAIL");

  // exact propagation vs fixed-step RK4
  double worst_rk4 = 0;
  for (int trial = 0; trial < 3; ++trial) {
    const auto [a, b] = random_blocks();
    const Pipeline p = make_pipeline(a, b);
    const Matrix rho0 = product_state(random_bloch(rng), random_bloch(rng));
    const Matrix exact = propagate(p.l, rho0, 5.0);
    const Matrix stepped = rk4_evolve(p.l, rho0, 5.0, 1e-3);
    worst_rk4 = std::max(worst_rk4, (exact - stepped).norm());
  }
  const bool rk4_ok = worst_rk4 <= 1e-7;
  detail << "; rk4 " << fmt(worst_rk4) << (rk4_ok ? " ok" : " FAIL");

  // an exchange-breaking Hamiltonian collapses the commutant
  const Matrix h = tensor(pauli(3), pauli(0));
  const Pipeline p4 = make_pipeline(pumped_kossakowski(1, 1, 1, 0.5),
                                    pumped_kossakowski(1, 1, 1, 0.5));
  const bool h_breaks = commutator(h, omega_plus()).norm() > 1e-6;
  const OperatorAlgebra m_h = compute_commutant_m(h, p4.dissipators);
  const bool collapse_ok = h_breaks && m_h.dimension() == 1;
  detail << "; H collapse dim M = " << m_h.dimension() << (collapse_ok ? " ok" : " FAIL");

  r.passed = rec_ok && traj_ok && comm_ok && proj_ok && rk4_ok && collapse_ok;
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CheckResult> acceptance_case_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(single_qubit_baseline(seed + 1));
  out.push_back(case1_formula_reproduction(seed + 2));
  out.push_back(case1_probe_independence(seed + 3));
  out.push_back(case2_obstruction(seed + 4));
  out.push_back(case3_equivalence(seed + 5));
  out.push_back(case4_example(seed + 6));
  out.push_back(case4_symmetric_null(seed + 7));
  out.push_back(case4_formula_grid(seed + 8));
  out.push_back(table1_dimensions(seed + 9));
  return out;
}

std::vector<CheckResult> acceptance_property_checks(std::uint64_t seed) {
  return {property_suite(seed + 10)};
}

std::vector<CheckResult> acceptance_checks(std::uint64_t seed) {
  auto out = acceptance_case_checks(seed);
  auto props = acceptance_property_checks(seed);
  out.insert(out.end(), props.begin(), props.end());
  return out;
}

}  // namespace steadykit
