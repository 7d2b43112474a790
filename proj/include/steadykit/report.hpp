#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steadykit/config.hpp"
#include "steadykit/stationary.hpp"

namespace steadykit {

/// A closed-form value that was checked against the numerical asymptote.
/// Emitted whenever the two disagree beyond formula_tolerance; variant
/// entries track alternative published sign/shape conventions.
struct DiscrepancyFlag {
  std::string name;
  double formula_value = 0.0;
  double oracle_value = 0.0;
};

struct Report {
  CpReport cp;
  Eigen::Vector3d lambda_plus = Eigen::Vector3d::Zero();
  Eigen::Vector3d lambda_minus = Eigen::Vector3d::Zero();
  int n_plus = 0;
  int n_minus = 0;
  CaseClassification classification;
  Eigen::Index m_dim = 0;
  Eigen::Index m_prime_dim = 0;
  Eigen::Index center_dim = 0;
  std::vector<int> projector_ranks;
  SemigroupClass semigroup_class = SemigroupClass::Relaxing;
  Eigen::Index kernel_dim = 0;
  bool has_maximal_rank = false;
  Matrix rho0;
  bool has_limit = false;
  Bloch target_bloch = Bloch::Zero();
  bool has_closed_form = false;
  Bloch closed_form_bloch = Bloch::Zero();
  std::optional<std::array<double, 3>> case4_r;
  std::vector<DiscrepancyFlag> flags;
};

/// Threshold above which a closed form vs oracle deviation becomes a flag.
inline constexpr double formula_tolerance = 1e-6;

/// Full pipeline: assemble -> positivity -> diagonalize -> classify ->
/// commutant/center/projectors -> stationary family and maximal-rank state ->
/// spectral asymptote -> closed-form cross-checks. When the Kossakowski
/// matrix is not PSD the report carries only the positivity section.
Report analyze(const RunConfig& cfg);

std::string case_label_name(CaseLabel label);
std::string semigroup_class_name(SemigroupClass c);
std::string cp_verdict_name(CpVerdict v);

nlohmann::json report_to_json(const Report& report);

}  // namespace steadykit
