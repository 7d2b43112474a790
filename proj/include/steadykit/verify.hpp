#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steadykit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> warnings;
};

/// Reproduction checks for the classified dynamics: the single-qubit
/// baseline, the four two-qubit cases, and the closed-form/oracle grid
/// cross-check. Deterministic for a fixed seed.
std::vector<CheckResult> acceptance_case_checks(std::uint64_t seed);

/// Structural property checks: trace/Hermiticity/positivity preservation,
/// commutant residuals, projector axioms, generator reconstruction,
/// integrator agreement, Hamiltonian-induced commutant collapse.
std::vector<CheckResult> acceptance_property_checks(std::uint64_t seed);

/// Both suites, case checks first.
std::vector<CheckResult> acceptance_checks(std::uint64_t seed);

}  // namespace steadykit
