#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steadykit/linalg.hpp"
#include "steadykit/report.hpp"
#include "steadykit/verify.hpp"

namespace {

using namespace steadykit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNotCp = 2;
constexpr int kExitParse = 3;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

struct CommonOptions {
  std::string config_path;
  std::string output_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

RunConfig load_with_overrides(const CommonOptions& opts) {
  RunConfig cfg = load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.tol) {
    cfg.tol.herm = *opts.tol;
    cfg.tol.trace = *opts.tol;
    cfg.tol.pos = *opts.tol;
  }
  return cfg;
}

int run_analyze(const CommonOptions& opts) {
  const RunConfig cfg = load_with_overrides(opts);
  const Report rep = analyze(cfg);
  write_text(opts.output_path, report_to_json(rep).dump(2) + "\n");
  return rep.cp.verdict == CpVerdict::CompletelyPositive ? kExitOk : kExitNotCp;
}

struct TrajectoryRow {
  double t = 0;
  Bloch target = Bloch::Zero(), probe = Bloch::Zero();
  double purity = 0, trace_drift = 0, herm_defect = 0, min_eig = 0;
};

int run_evolve(const CommonOptions& opts, double tmax, double dt,
               const std::string& format) {
  if (tmax < 0) throw ValidationError("evolve: tmax must be non-negative");
  if (dt <= 0) throw ValidationError("evolve: dt must be positive");
  const RunConfig cfg = load_with_overrides(opts);
  const KossakowskiBlocks blocks = assemble_kossakowski(cfg.a, cfg.b, cfg.tol);
  const CpReport cp = check_complete_positivity(blocks.c, cfg.tol);
  if (cp.verdict != CpVerdict::CompletelyPositive) {
    std::cerr << "evolve: Kossakowski matrix is not completely positive\n";
    return kExitNotCp;
  }
  const DiagonalizedGenerator diag = diagonalize_blocks(blocks, cfg.tol);
  const Liouvillian l = build_liouvillian(cfg.h, build_lindblad_operators(diag, cfg.tol));
  const Matrix rho0 = initial_state(cfg);

  std::vector<TrajectoryRow> rows;
  for (double t = 0.0; t <= tmax + 1e-12; t += dt) {
    const Matrix rho = propagate(l, rho0, t);
    TrajectoryRow row;
    row.t = t;
    const Matrix herm = hermitian_part(rho);
    row.target = density_to_bloch(partial_trace_probe(herm));
    Matrix probe(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        probe(i, j) = herm(i, j) + herm(i + 2, j + 2);  // trace out the target
    row.probe = density_to_bloch(probe);
    row.purity = (rho * rho).trace().real();
    row.trace_drift = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    row.herm_defect = hermiticity_defect(rho);
    row.min_eig = hermitian_eigs(herm).values.minCoeff();
    rows.push_back(row);
    if (tmax == 0) break;
  }

  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows)
      doc.push_back({{"t", r.t},
                     {"target_bloch", {r.target(0), r.target(1), r.target(2)}},
                     {"probe_bloch", {r.probe(0), r.probe(1), r.probe(2)}},
                     {"purity", r.purity},
                     {"trace_drift", r.trace_drift},
                     {"hermiticity_defect", r.herm_defect},
                     {"min_eigenvalue", r.min_eig}});
    write_text(opts.output_path, doc.dump(2) + "\n");
  } else {
    std::string csv =
        "t,target_x,target_y,target_z,probe_x,probe_y,probe_z,purity,"
        "trace_drift,hermiticity_defect,min_eigenvalue\n";
    for (const auto& r : rows) {
      csv += format_number(r.t);
      for (int k = 0; k < 3; ++k) csv += "," + format_number(r.target(k));
      for (int k = 0; k < 3; ++k) csv += "," + format_number(r.probe(k));
      csv += "," + format_number(r.purity) + "," + format_number(r.trace_drift) + "," +
             format_number(r.herm_defect) + "," + format_number(r.min_eig) + "\n";
    }
    write_text(opts.output_path, csv);
  }
  return kExitOk;
}

int run_sweep(const CommonOptions& opts, const std::string& param, double from,
              double to, int steps, const std::string& format) {
  if (steps < 1) throw ValidationError("sweep: steps must be at least 1");
  const RunConfig base = load_with_overrides(opts);
  const bool b_tracks_a = (base.b - base.a).norm() <= 1e-12 * std::max(1.0, base.a.norm());

  struct Row {
    double value;
    Bloch oracle;
    bool has_closed;
    Bloch closed;
  };
  std::vector<Row> rows;
  for (int i = 0; i < steps; ++i) {
    const double value = steps == 1 ? from : from + (to - from) * i / (steps - 1);
    RunConfig cfg = base;
    if (param == "P") {
      cfg.initial.kind = InitialState::Kind::Schmidt;
      cfg.initial.schmidt_p = value;
    } else if (param == "d") {
      cfg.a(0, 1) = Complex(0.0, value);
      cfg.a(1, 0) = Complex(0.0, -value);
      if (b_tracks_a) cfg.b = cfg.a;
    } else if (param.rfind("blochT_", 0) == 0 || param.rfind("blochA_", 0) == 0) {
      const int k = param.back() - '1';
      if (k < 0 || k > 2) throw ValidationError("sweep: unknown parameter " + param);
      cfg.initial.kind = InitialState::Kind::Product;
      (param[5] == 'T' ? cfg.initial.bloch_t : cfg.initial.bloch_a)(k) = value;
    } else {
      throw ValidationError("sweep: unknown parameter " + param);
    }
    const Report rep = analyze(cfg);
    if (rep.cp.verdict != CpVerdict::CompletelyPositive) {
      std::cerr << "sweep: point " << param << " = " << value
                << " violates complete positivity\n";
      return kExitNotCp;
    }
    if (!rep.has_limit) throw NoLimitError("sweep: dynamics has no asymptotic state");
    rows.push_back({value, rep.target_bloch, rep.has_closed_form, rep.closed_form_bloch});
  }

  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row = {{"value", r.value},
                            {"oracle_bloch", {r.oracle(0), r.oracle(1), r.oracle(2)}}};
      row["closed_form_bloch"] =
          r.has_closed ? nlohmann::json::array({r.closed(0), r.closed(1), r.closed(2)})
                       : nlohmann::json();
      doc.push_back(row);
    }
    write_text(opts.output_path, doc.dump(2) + "\n");
  } else {
    std::string csv = param +
                      ",oracle_x,oracle_y,oracle_z,closed_x,closed_y,closed_z\n";
    for (const auto& r : rows) {
      csv += format_number(r.value);
      for (int k = 0; k < 3; ++k) csv += "," + format_number(r.oracle(k));
      for (int k = 0; k < 3; ++k) csv += r.has_closed ? "," + format_number(r.closed(k)) : ",";
      csv += "\n";
    }
    write_text(opts.output_path, csv);
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (suite == "cases") {
    results = acceptance_case_checks(seed);
  } else if (suite == "properties") {
    results = acceptance_property_checks(seed);
  } else if (suite == "all") {
    results = acceptance_checks(seed);
  } else {
    throw ValidationError("verify: unknown suite " + suite);
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " — " << r.detail << "\n";
    for (const auto& w : r.warnings) std::cout << "  WARN " << w << "\n";
    all_ok = all_ok && r.passed;
  }
  std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stationary-state analysis of two-qubit dynamical semigroups"};
  app.require_subcommand(1);

  CommonOptions opts;
  double tmax = 10.0, dt = 0.1;
  std::string format = "csv";
  std::string param;
  double from = 0.0, to = 1.0;
  int steps = 11;
  std::string suite = "all";
  std::uint64_t verify_seed = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_config = true) {
    if (needs_config)
      cmd->add_option("--config", opts.config_path, "JSON configuration file")
          ->required();
    cmd->add_option("--output", opts.output_path, "output path (default: stdout)");
    cmd->add_option("--seed", opts.seed, "override the config seed");
    cmd->add_option("--tol", opts.tol, "override the validation tolerances");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze_cmd);

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "integrate the joint state");
  add_common(evolve_cmd);
  evolve_cmd->add_option("--tmax", tmax, "final time");
  evolve_cmd->add_option("--dt", dt, "output step");
  evolve_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan a parameter");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--param", param, "P, blochT_k, blochA_k or d")->required();
  sweep_cmd->add_option("--from", from, "first value")->required();
  sweep_cmd->add_option("--to", to, "last value")->required();
  sweep_cmd->add_option("--steps", steps, "number of points");
  sweep_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "cases, properties or all")
      ->check(CLI::IsMember({"cases", "properties", "all"}));
  verify_cmd->add_option("--seed", verify_seed, "suite seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd)) return run_analyze(opts);
    if (app.got_subcommand(evolve_cmd)) return run_evolve(opts, tmax, dt, format);
    if (app.got_subcommand(sweep_cmd))
      return run_sweep(opts, param, from, to, steps, format);
    if (app.got_subcommand(verify_cmd)) return run_verify(suite, verify_seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotCompletelyPositiveError& e) {
    std::cerr << "complete positivity violation: " << e.what() << "\n";
    return kExitNotCp;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
