#include "steadykit/config.hpp"

#include <fstream>

#include "steadykit/stationary.hpp"

namespace steadykit {

using nlohmann::json;

Matrix parse_complex_matrix(const json& doc, Eigen::Index rows, Eigen::Index cols) {
  if (!doc.is_array() || static_cast<Eigen::Index>(doc.size()) != rows)
    throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix: expected " + std::to_string(cols) + " columns");
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto& e = row[j];
      if (e.is_number()) {
        m(i, j) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ParseError("matrix: entries must be numbers or [re, im] pairs");
      }
    }
  }
  if (!m.allFinite()) throw ParseError("matrix: non-finite entry");
  return m;
}

json complex_matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

namespace {

Bloch parse_bloch(const json& doc, const char* what) {
  if (!doc.is_array() || doc.size() != 3)
    throw ParseError(std::string(what) + ": expected 3 components");
  Bloch b;
  for (int k = 0; k < 3; ++k) {
    if (!doc[k].is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
    b(k) = doc[k].get<double>();
  }
  return b;
}

void apply_tolerance_overrides(Tolerances& tol, const json& doc) {
  const auto set = [&](const char* key, double& field) {
    if (doc.contains(key)) {
      if (!doc[key].is_number() || doc[key].get<double>() <= 0)
        throw ParseError(std::string("tolerances.") + key + ": expected a positive number");
      field = doc[key].get<double>();
    }
  };
  set("herm", tol.herm);
  set("trace", tol.trace);
  set("pos", tol.pos);
  set("eig_rel", tol.eig_rel);
  set("rank_rel", tol.rank_rel);
  set("group", tol.group);
  set("subspace", tol.subspace);
  set("mat_eq", tol.mat_eq);
  set("stationary", tol.stationary);
}

}  // namespace

RunConfig parse_config(const json& doc) {
  RunConfig cfg;
  if (!doc.is_object()) throw ParseError("config: expected a JSON object");
  if (!doc.contains("A") || !doc.contains("B"))
    throw ParseError("config: blocks A and B are required");
  cfg.a = parse_complex_matrix(doc["A"], 3, 3);
  cfg.b = parse_complex_matrix(doc["B"], 3, 3);
  cfg.h = doc.contains("H") ? parse_complex_matrix(doc["H"], 4, 4) : Matrix::Zero(4, 4);
  if (doc.contains("tolerances")) apply_tolerance_overrides(cfg.tol, doc["tolerances"]);
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw ParseError("config.seed: expected an integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }

  if (hermiticity_defect(cfg.a) > cfg.tol.herm * std::max(1.0, cfg.a.norm()))
    throw ParseError("config.A: not Hermitian");
  if (hermiticity_defect(cfg.b) > cfg.tol.herm * std::max(1.0, cfg.b.norm()))
    throw ParseError("config.B: not Hermitian");
  if (hermiticity_defect(cfg.h) > cfg.tol.herm * std::max(1.0, cfg.h.norm()))
    throw ParseError("config.H: not Hermitian");

  if (!doc.contains("initial")) throw ParseError("config: initial state is required");
  const auto& init = doc["initial"];
  if (!init.is_object() || !init.contains("type"))
    throw ParseError("config.initial: expected an object with a type");
  const std::string type = init["type"].get<std::string>();
  if (type == "product") {
    cfg.initial.kind = InitialState::Kind::Product;
    cfg.initial.bloch_t = parse_bloch(init.value("bloch_T", json::array({0, 0, 0})),
                                      "config.initial.bloch_T");
    cfg.initial.bloch_a = parse_bloch(init.value("bloch_A", json::array({0, 0, 0})),
                                      "config.initial.bloch_A");
    if (cfg.initial.bloch_t.norm() > 1.0 + cfg.tol.pos ||
        cfg.initial.bloch_a.norm() > 1.0 + cfg.tol.pos)
      throw ParseError("config.initial: Bloch norm exceeds 1");
  } else if (type == "schmidt") {
    cfg.initial.kind = InitialState::Kind::Schmidt;
    if (!init.contains("P") || !init["P"].is_number())
      throw ParseError("config.initial: schmidt requires a numeric P");
    cfg.initial.schmidt_p = init["P"].get<double>();
    if (cfg.initial.schmidt_p < 0.0 || cfg.initial.schmidt_p > 1.0)
      throw ParseError("config.initial.P: must lie in [0, 1]");
  } else {
    throw ParseError("config.initial.type: expected product or schmidt");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("config JSON: ") + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const RunConfig& cfg) {
  json doc;
  doc["A"] = complex_matrix_to_json(cfg.a);
  doc["B"] = complex_matrix_to_json(cfg.b);
  doc["H"] = complex_matrix_to_json(cfg.h);
  if (cfg.initial.kind == InitialState::Kind::Product) {
    doc["initial"] = {{"type", "product"},
                      {"bloch_T", {cfg.initial.bloch_t(0), cfg.initial.bloch_t(1),
                                   cfg.initial.bloch_t(2)}},
                      {"bloch_A", {cfg.initial.bloch_a(0), cfg.initial.bloch_a(1),
                                   cfg.initial.bloch_a(2)}}};
  } else {
    doc["initial"] = {{"type", "schmidt"}, {"P", cfg.initial.schmidt_p}};
  }
  doc["seed"] = cfg.seed;
  return doc;
}

Matrix initial_state(const RunConfig& cfg) {
  if (cfg.initial.kind == InitialState::Kind::Schmidt)
    return schmidt_state(cfg.initial.schmidt_p);
  return tensor(bloch_to_density(cfg.initial.bloch_t, cfg.tol),
                bloch_to_density(cfg.initial.bloch_a, cfg.tol));
}

}  // namespace steadykit
