#include "steadykit/report.hpp"

#include <random>

namespace steadykit {

namespace {

/// Recognize the pumped single-party form [[a, id, 0], [-id, b, 0], [0, 0, c]].
bool match_pumped_form(const Matrix& m, double tol, double& a, double& b, double& c,
                       double& d) {
  a = m(0, 0).real();
  b = m(1, 1).real();
  c = m(2, 2).real();
  d = m(0, 1).imag();
  const Matrix rebuilt = pumped_kossakowski(a, b, c, d);
  return (m - rebuilt).norm() <= tol * std::max(1.0, m.norm());
}

void flag_bloch(std::vector<DiscrepancyFlag>& flags, const std::string& stem,
                const Bloch& formula, const Bloch& oracle) {
  const char* axis[] = {"_x", "_y", "_z"};
  for (int k = 0; k < 3; ++k)
    if (std::abs(formula(k) - oracle(k)) > formula_tolerance)
      flags.push_back({stem + axis[k], formula(k), oracle(k)});
}

}  // namespace

Report analyze(const RunConfig& cfg) {
  Report rep;
  std::mt19937_64 rng(cfg.seed);

  const KossakowskiBlocks blocks = assemble_kossakowski(cfg.a, cfg.b, cfg.tol);
  rep.cp = check_complete_positivity(blocks.c, cfg.tol);
  if (rep.cp.verdict == CpVerdict::NotCompletelyPositive) return rep;

  const DiagonalizedGenerator diag = diagonalize_blocks(blocks, cfg.tol);
  rep.lambda_plus = diag.lambda_plus;
  rep.lambda_minus = diag.lambda_minus;
  rep.n_plus = diag.n_plus;
  rep.n_minus = diag.n_minus;
  rep.classification = classify_case(blocks, diag, cfg.tol);

  const auto dissipators = build_lindblad_operators(diag, cfg.tol);
  const OperatorAlgebra m = compute_commutant_m(cfg.h, dissipators, cfg.tol);
  rep.m_dim = m.dimension();
  rep.m_prime_dim = commutant_of_set(m.basis, cfg.tol).dimension();
  const CenterDecomposition center = center_and_projectors(m, rng, cfg.tol);
  rep.center_dim = center.center.dimension();
  rep.projector_ranks = center.family.ranks;

  const Liouvillian l = build_liouvillian(cfg.h, dissipators);
  const StationaryFamily family = stationary_subspace(l, cfg.tol);
  rep.kernel_dim = family.kernel_dim;
  const MaximalRankResult mr = find_maximal_rank_state(family, rng, cfg.tol);
  rep.has_maximal_rank = mr.found;
  if (mr.found) rep.rho0 = mr.rho0;

  const SpectralData spec = peripheral_projector(l, cfg.tol);
  rep.semigroup_class = classify_semigroup(spec, cfg.tol);
  const Matrix rho_init = initial_state(cfg);
  if (rep.semigroup_class != SemigroupClass::NonRelaxing) {
    rep.has_limit = true;
    rep.target_bloch = asymptotic_target_state(rho_init, l, cfg.tol);
  }

  // closed forms and their published sign/shape variants
  const bool schmidt = cfg.initial.kind == InitialState::Kind::Schmidt;
  const auto label = rep.classification.label;
  if (rep.has_limit && (label == CaseLabel::CaseI || label == CaseLabel::CaseIII)) {
    const Eigen::Vector3d u = diag.u_plus.row(0).real();
    rep.has_closed_form = true;
    Bloch variant;
    if (schmidt) {
      const double p = cfg.initial.schmidt_p;
      rep.closed_form_bloch = case1_schmidt_asymptote(u, p);
      variant = Bloch((2 * p - 1) * u(0) * u(2), -(2 * p - 1) * u(1) * u(2),
                      (2 * p - 1) * u(2) * u(2));
      flag_bloch(rep.flags, "case1_schmidt_conjugated_variant", variant,
                 rep.target_bloch);
    } else {
      rep.closed_form_bloch = case1_product_asymptote(u, cfg.initial.bloch_t);
      const auto& bt = cfg.initial.bloch_t;
      const double s = bt(0) * u(0) - bt(1) * u(1) + bt(2) * u(2);
      variant = Bloch(u(0) * s, -u(1) * s, u(2) * s);
      flag_bloch(rep.flags, "case1_product_conjugated_variant", variant,
                 rep.target_bloch);
    }
    flag_bloch(rep.flags, "case1_closed_form", rep.closed_form_bloch, rep.target_bloch);
  }

  double pa, pb, pc, pd;
  if (rep.has_limit && label == CaseLabel::CaseIV &&
      match_pumped_form(blocks.a, cfg.tol.mat_eq, pa, pb, pc, pd)) {
    const CaseFourForms forms = case4_closed_forms(pa, pb, pc, pd, cfg.tol);
    rep.case4_r = forms.r;
    rep.has_closed_form = true;
    const double z = schmidt
                         ? forms.schmidt_z(cfg.initial.schmidt_p)
                         : forms.uncorrelated_z(cfg.initial.bloch_t, cfg.initial.bloch_a);
    rep.closed_form_bloch = Bloch(0, 0, z);
    flag_bloch(rep.flags, "case4_closed_form", rep.closed_form_bloch, rep.target_bloch);

    // published variants: opposite r1 sign, 2 r2 denominator, entanglement-
    // weighted Schmidt dependence
    const double r1v = -forms.r[0], r2 = forms.r[1], r3 = forms.r[2];
    double zv;
    if (schmidt) {
      const double p = cfg.initial.schmidt_p;
      zv = 4 * r1v * (1 + std::sqrt(p * (1 - p))) / (3 + 2 * r2 + r3);
      flag_bloch(rep.flags, "case4_schmidt_published_variant", Bloch(0, 0, zv),
                 rep.target_bloch);
    } else {
      zv = r1v * (3 + cfg.initial.bloch_t.dot(cfg.initial.bloch_a)) / (3 + 2 * r2 + r3);
      flag_bloch(rep.flags, "case4_uncorrelated_published_variant", Bloch(0, 0, zv),
                 rep.target_bloch);
    }
  }
  return rep;
}

std::string case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::CaseI: return "CaseI";
    case CaseLabel::CaseII: return "CaseII";
    case CaseLabel::CaseIII: return "CaseIII";
    case CaseLabel::CaseIV: return "CaseIV";
    case CaseLabel::TrivialUnique: return "TrivialUnique";
    case CaseLabel::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::string semigroup_class_name(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::UniquelyRelaxing: return "UniquelyRelaxing";
    case SemigroupClass::Relaxing: return "Relaxing";
    case SemigroupClass::NonRelaxing: return "NonRelaxing";
  }
  return "Relaxing";
}

std::string cp_verdict_name(CpVerdict v) {
  return v == CpVerdict::CompletelyPositive ? "CP" : "NotCP";
}

nlohmann::json report_to_json(const Report& rep) {
  using nlohmann::json;
  json doc;
  doc["cp"] = {{"verdict", cp_verdict_name(rep.cp.verdict)},
               {"eigenvalues", std::vector<double>(rep.cp.eigenvalues.begin(),
                                                   rep.cp.eigenvalues.end())}};
  if (rep.cp.verdict == CpVerdict::NotCompletelyPositive) return doc;

  doc["lambda_plus"] = {rep.lambda_plus(0), rep.lambda_plus(1), rep.lambda_plus(2)};
  doc["lambda_minus"] = {rep.lambda_minus(0), rep.lambda_minus(1), rep.lambda_minus(2)};
  doc["n_plus"] = rep.n_plus;
  doc["n_minus"] = rep.n_minus;
  doc["case"] = case_label_name(rep.classification.label);
  doc["witnesses"] = {{"a_symmetric", rep.classification.a_symmetric},
                      {"b_equals_a", rep.classification.b_equals_a},
                      {"b_proportional", rep.classification.b_proportional},
                      {"alpha", rep.classification.alpha}};
  doc["algebra"] = {{"m_dim", rep.m_dim},
                    {"m_prime_dim", rep.m_prime_dim},
                    {"center_dim", rep.center_dim},
                    {"projector_ranks", rep.projector_ranks}};
  doc["semigroup_class"] = semigroup_class_name(rep.semigroup_class);
  doc["kernel_dim"] = rep.kernel_dim;
  doc["rho0"] = rep.has_maximal_rank ? complex_matrix_to_json(rep.rho0)
                                     : nlohmann::json();
  doc["no_maximal_rank"] = !rep.has_maximal_rank;
  doc["target_bloch"] =
      rep.has_limit
          ? json::array({rep.target_bloch(0), rep.target_bloch(1), rep.target_bloch(2)})
          : json();
  doc["closed_form_bloch"] =
      rep.has_closed_form
          ? json::array({rep.closed_form_bloch(0), rep.closed_form_bloch(1),
                         rep.closed_form_bloch(2)})
          : json();
  doc["case4_r"] = rep.case4_r
                       ? json::array({(*rep.case4_r)[0], (*rep.case4_r)[1],
                                      (*rep.case4_r)[2]})
                       : json();
  json flags = json::array();
  for (const auto& f : rep.flags)
    flags.push_back({{"name", f.name},
                     {"formula_value", f.formula_value},
                     {"oracle_value", f.oracle_value}});
  doc["flags"] = flags;
  return doc;
}

}  // namespace steadykit
