#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "steadykit/qops.hpp"

namespace steadykit {

/// Initial joint state: either an uncorrelated pair of Bloch vectors or the
/// correlated two-parameter family sqrt(P)|uu> + sqrt(1-P)|dd>.
struct InitialState {
  enum class Kind { Product, Schmidt };
  Kind kind = Kind::Product;
  Bloch bloch_t = Bloch::Zero();
  Bloch bloch_a = Bloch::Zero();
  double schmidt_p = 0.5;
};

struct RunConfig {
  Matrix a;  // 3x3 Hermitian
  Matrix b;  // 3x3 Hermitian
  Matrix h;  // 4x4 Hermitian, zero when absent
  InitialState initial;
  Tolerances tol;
  std::uint64_t seed = 0;
};

/// Complex entries are serialized as [re, im] pairs; matrices row-major.
Matrix parse_complex_matrix(const nlohmann::json& doc, Eigen::Index rows,
                            Eigen::Index cols);
nlohmann::json complex_matrix_to_json(const Matrix& m);

/// Throws ParseError on malformed documents or invariant violations
/// (non-Hermitian blocks, |bloch| > 1, P outside [0, 1]).
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json config_to_json(const RunConfig& cfg);

/// The 4x4 initial state described by the config.
Matrix initial_state(const RunConfig& cfg);

}  // namespace steadykit
