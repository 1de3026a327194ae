// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: orbit-type classification, constraint reduction,
// invariant-basis construction, stratum projections, and the single-plaquette
// spectrum scans. All data outputs are deterministic given the config and
// seed; report.json additionally carries wall-clock timings.

#include <CLI11.hpp>

#include "slgt/dynamics.hpp"
#include "slgt/runconfig.hpp"
#include "slgt/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace slgt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCutoff = 4;
constexpr int kExitUnsupported = 5;

struct Reporter {
  std::string command;
  Json config_json;
  std::string out_dir;
  bool quiet = false;
  std::vector<std::string> warnings;
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, double>> timings;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void mark(const std::string& phase) {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - t0).count();
    timings.push_back({phase, ms});
    t0 = now;
  }

  void emit(const std::string& name, const std::string& content) {
    fs::create_directories(out_dir);
    std::string path = (fs::path(out_dir) / name).string();
    write_text_file(path, content);
    outputs.push_back(name);
    if (!quiet) std::cout << "wrote " << path << "\n";
  }

  void finalize() {
    Json rep;
    rep["command"] = command;
    rep["config_hash"] = config_hash(config_json);
    rep["config"] = config_json;
    rep["warnings"] = warnings;
    rep["outputs"] = outputs;
    Json t = Json::object();
    for (const auto& [k, v] : timings) t[k] = v;
    rep["timings_ms"] = t;
    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "report.json").string(), canonical_dump(rep) + "\n");
    if (!quiet) std::cout << "wrote " << (fs::path(out_dir) / "report.json").string() << "\n";
  }
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string csv =
      "param_name,param_value,ground_energy,localization_plus,localization_minus,"
      "overlap,n_max,convergence_shift\n";
  for (const ScanRow& r : rows) {
    csv += r.param_name + "," + format_double(r.param_value) + "," +
           format_double(r.ground_energy) + "," + format_double(r.localization_plus) + "," +
           format_double(r.localization_minus) + "," + format_double(r.overlap) + "," +
           std::to_string(r.n_max) + "," + format_double(r.convergence_shift) + "\n";
  }
  return csv;
}

QuasiCharacterBasis obtain_basis(const RunConfig& cfg, Reporter& rep) {
  if (cfg.basis_cache && fs::exists(*cfg.basis_cache)) {
    Json j = read_json_file(*cfg.basis_cache);
    QuasiCharacterBasis cached = basis_from_json(j);
    if (cached.n_copies == cfg.n_links && cached.twice_j_max == cfg.twice_j_max &&
        cached.hbar == cfg.require_hbar() && cached.beta == cfg.require_beta()) {
      rep.mark("basis_cache_load");
      return cached;
    }
    rep.warnings.push_back("basis cache header mismatch; rebuilding");
  }
  QuasiCharacterBasis basis =
      invariant_basis(cfg.n_links, cfg.twice_j_max, cfg.require_hbar(), cfg.require_beta());
  rep.mark("basis");
  return basis;
}

std::string signs_tag(const std::vector<int>& signs) {
  std::string s;
  for (int nu : signs) s += (nu > 0 ? 'p' : 'm');
  return s;
}

std::vector<std::vector<int>> all_sign_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> signs(n, 1);
  while (true) {
    out.push_back(signs);
    int i = 0;
    for (; i < n; ++i) {
      if (signs[i] == 1) {
        signs[i] = -1;
        break;
      }
      signs[i] = 1;
    }
    if (i == n) break;
  }
  return out;
}

int cmd_classify(const RunConfig& cfg, Reporter& rep, int samples, const std::string& mode,
                 const std::string& points_file) {
  std::vector<PhasePoint> points;
  std::vector<std::string> origin;
  if (!points_file.empty()) {
    Json j = read_json_file(points_file);
    for (const Json& jp : j) {
      points.push_back(phase_point_from_json(jp));
      origin.push_back("file");
    }
  } else {
    LevelSetMode m;
    if (mode == "torus_sector") {
      m = LevelSetMode::TorusSector;
    } else if (mode == "generic") {
      m = LevelSetMode::Generic;
    } else {
      throw ConfigError("classify: mode must be torus_sector or generic");
    }
    Rng rng(cfg.seed);
    for (int k = 0; k < samples; ++k) {
      points.push_back(sample_level_set(rng, cfg.n_links, m));
      origin.push_back(mode);
    }
  }
  rep.mark("sampling");

  std::string lines;
  int principal = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!is_valid(points[k], 1e-8)) {
      throw ConfigError("classify: point " + std::to_string(k) + " violates the invariants");
    }
    ClassifyMargins margins;
    OrbitType type = stabilizer_type(points[k], cfg.tol.eval, &margins);
    RelationClassification rc = classify_by_relations(points[k], cfg.tol.eval);
    if (type.tag == OrbitTypeTag::Principal) ++principal;

    Json row;
    row["index"] = k;
    row["origin"] = origin[k];
    row["orbit_type"] = to_string(type);
    row["stratum"] = to_string(stratum_of(type, cfg.n_links));
    row["momentum_norm"] = momentum_map(points[k]).m.norm();
    row["margins"] = Json{{"vertex_residual", margins.vertex_residual},
                          {"commutation_residual", margins.commutation_residual}};
    double best_vertex = std::numeric_limits<double>::infinity();
    for (const auto& [nu, res] : rc.max_vertex_residual) best_vertex = std::min(best_vertex, res);
    row["relations"] = Json{{"T_residual", rc.max_T_residual},
                            {"satisfies_T_locus", rc.satisfies_T_locus},
                            {"best_vertex_residual", best_vertex}};
    row["point"] = phase_point_to_json(points[k]);
    lines += row.dump();  // one object per line
    lines += "\n";
  }
  rep.mark("classification");
  rep.emit("classification.jsonl", lines);
  Json summary;
  summary["points"] = points.size();
  summary["principal_fraction"] =
      points.empty() ? 0.0 : static_cast<double>(principal) / points.size();
  rep.emit("classify_summary.json", canonical_dump(summary) + "\n");
  return kExitOk;
}

int cmd_tproc(const RunConfig& cfg, Reporter& rep, const std::string& constraints_file) {
  if (constraints_file.empty()) throw ConfigError("tproc: --constraints FILE is required");
  ConstraintSystem cs = constraint_system_from_json(read_json_file(constraints_file));
  cs.validate(cfg.tol.unit * 10.0);
  rep.mark("load");
  TProcedureResult r = t_procedure(cs, cfg.tol.rank);
  rep.mark("reduction");
  Json out = tproc_result_to_json(r);
  out["blocks"] = cs.algebra.block_sizes;
  rep.emit("tproc_result.json", canonical_dump(out) + "\n");
  return kExitOk;
}

int cmd_basis(const RunConfig& cfg, Reporter& rep) {
  QuasiCharacterBasis basis = obtain_basis(cfg, rep);
  rep.emit("basis.json", canonical_dump(basis_to_json(basis)) + "\n");
  Json summary;
  summary["dim"] = basis.dim;
  summary["n"] = basis.n_copies;
  summary["twice_j_max"] = basis.twice_j_max;
  summary["s"] = basis.s_param();
  Json blocks = Json::array();
  for (const BasisBlock& b : basis.blocks) {
    blocks.push_back(Json{{"twice_spins", b.twice_spins},
                          {"dim", b.tensors.size()},
                          {"counting_oracle", invariant_dimension(b.twice_spins)},
                          {"sb_scale", b.sb_scale}});
  }
  summary["blocks"] = blocks;
  rep.emit("basis_summary.json", canonical_dump(summary) + "\n");
  return kExitOk;
}

int cmd_costrat(const RunConfig& cfg, Reporter& rep) {
  QuasiCharacterBasis basis = obtain_basis(cfg, rep);
  rep.emit("basis.json", canonical_dump(basis_to_json(basis)) + "\n");

  std::vector<std::vector<int>> sequences = all_sign_sequences(cfg.n_links);
  std::vector<StratumProjection> vertex_projs;
  for (const auto& signs : sequences) {
    StratumProjection sp = vertex_projection(basis, signs);
    vertex_projs.push_back(sp);
    rep.emit("p_vertex_" + signs_tag(signs) + ".json",
             canonical_dump(stratum_projection_to_json(sp)) + "\n");
  }
  rep.mark("vertex_projections");

  Json overlaps = Json::array();
  for (std::size_t a = 0; a < sequences.size(); ++a) {
    for (std::size_t b = a + 1; b < sequences.size(); ++b) {
      Complex ov = tunneling_overlap(basis, sequences[a], sequences[b]);
      overlaps.push_back(Json{{"from", signs_tag(sequences[a])},
                              {"to", signs_tag(sequences[b])},
                              {"re", ov.real()},
                              {"im", ov.imag()},
                              {"abs", std::abs(ov)}});
    }
  }
  rep.emit("overlaps.json", canonical_dump(overlaps) + "\n");
  rep.mark("overlaps");

  if (cfg.n_links >= 2) {
    StratumProjection pT = stratum_projection_T(basis, cfg.tol.loss, cfg.tol.rank);
    rep.emit("q_T.json", canonical_dump(stratum_projection_to_json(pT)) + "\n");
    for (const TruncationEvent& e : pT.exclusions) {
      rep.warnings.push_back("excluded constraint product (generator " +
                             std::to_string(e.generator) + ", element " + std::to_string(e.alpha) +
                             "), relative loss " + format_double(e.relative_loss));
    }
    Json mono = Json::array();
    for (std::size_t k = 0; k < sequences.size(); ++k) {
      mono.push_back(Json{{"vertex", signs_tag(sequences[k])},
                          {"residual", monotonicity_residual(pT, vertex_projs[k])}});
    }
    rep.emit("monotonicity.json", canonical_dump(mono) + "\n");
    rep.mark("t_stratum");
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, Reporter& rep, const std::string& scan, double grid_min,
                 double grid_max, int grid_points) {
  if (cfg.n_links != 1) {
    throw DimensionMismatch("spectrum supports N = 1 only (got N = " +
                            std::to_string(cfg.n_links) + ")");
  }
  HamiltonianParams base;
  base.lambda = cfg.lambda;
  base.delta = cfg.delta;
  base.hbar = cfg.require_hbar();
  base.beta = cfg.require_beta();
  base.n_max = cfg.n_max;
  base.validate();

  auto log_grid = [&](double lo, double hi, int n) {
    std::vector<double> g;
    for (int k = 0; k < n; ++k) {
      g.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : static_cast<double>(k) / (n - 1)));
    }
    return g;
  };

  bool wants_lambda = scan == "lambda" || scan == "both";
  bool wants_hbar = scan == "hbar" || scan == "both";
  if (!wants_lambda && !wants_hbar) {
    throw ConfigError("spectrum: --scan must be lambda, hbar, or both");
  }
  if (wants_lambda) {
    std::vector<double> grid = log_grid(grid_min, grid_max, grid_points);
    std::vector<ScanRow> rows = spectrum_scan(base, "lambda", grid, cfg.tol.convergence);
    for (const ScanRow& r : rows) {
      if (!r.converged) {
        rep.warnings.push_back("lambda=" + format_double(r.param_value) +
                               ": ground energy not converged at this cutoff");
      }
    }
    rep.emit("spectrum_lambda.csv", scan_csv(rows));
    rep.mark("lambda_scan");
  }
  if (wants_hbar) {
    std::vector<double> grid{1.0, 0.5, 0.2, 0.1, 0.05, 0.01};
    std::vector<ScanRow> rows = spectrum_scan(base, "hbar", grid, cfg.tol.convergence);
    for (const ScanRow& r : rows) {
      if (!r.converged) {
        rep.warnings.push_back("hbar=" + format_double(r.param_value) +
                               ": ground energy not converged at this cutoff");
      }
    }
    rep.emit("spectrum_hbar.csv", scan_csv(rows));
    rep.mark("hbar_scan");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratified observables for SU(2) lattice gauge theory at finite truncation"};
  app.require_subcommand(1);

  std::string config_path, out_dir, points_file, constraints_file;
  std::string mode = "generic", scan = "both";
  int samples = 100;
  double grid_min = 0.5, grid_max = 8.0;
  int grid_points = 25;
  bool quiet = false;
  std::uint64_t seed_override = 0;
  double jmax_override = -1.0;
  int n_override = 0;

  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_flag("--quiet", quiet, "suppress progress output");
  auto* seed_opt = app.add_option("--seed", seed_override, "seed override");
  app.add_option("--jmax", jmax_override, "spin cutoff override (half-integer)");
  app.add_option("--n", n_override, "number of off-tree links override");

  CLI::App* c_classify =
      app.add_subcommand("classify", "orbit-type classification of phase points");
  c_classify->add_option("--samples", samples, "number of sampled points");
  c_classify->add_option("--mode", mode, "sampler: torus_sector or generic");
  c_classify->add_option("--points", points_file, "JSON file with explicit phase points");

  CLI::App* c_tproc = app.add_subcommand("tproc", "constraint reduction of a matrix algebra");
  c_tproc->add_option("--constraints", constraints_file, "constraint-system JSON file");

  app.add_subcommand("basis", "build and dump the invariant function basis");
  app.add_subcommand("costrat", "stratum projections, overlaps and monotonicity");

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "single-plaquette spectrum scans");
  c_spectrum->add_option("--scan", scan, "lambda, hbar, or both");
  c_spectrum->add_option("--grid-min", grid_min, "lambda grid lower end");
  c_spectrum->add_option("--grid-max", grid_max, "lambda grid upper end");
  c_spectrum->add_option("--grid-points", grid_points, "lambda grid size");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  Reporter rep;
  try {
    Json config_json = Json::object();
    if (!config_path.empty()) config_json = read_json_file(config_path);
    cfg = config_from_json(config_json);
    if (seed_opt->count() > 0) cfg.seed = seed_override;
    if (jmax_override >= 0.0) cfg.twice_j_max = parse_twice_spin(Json(jmax_override));
    if (n_override > 0) cfg.n_links = n_override;
    if (!out_dir.empty()) cfg.output_dir = out_dir;

    rep.command = app.get_subcommands().front()->get_name();
    rep.config_json = cfg.to_json();
    rep.out_dir = cfg.output_dir;
    rep.quiet = quiet;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    int code = kExitOk;
    if (rep.command == "classify") {
      code = cmd_classify(cfg, rep, samples, mode, points_file);
    } else if (rep.command == "tproc") {
      code = cmd_tproc(cfg, rep, constraints_file);
    } else if (rep.command == "basis") {
      code = cmd_basis(cfg, rep);
    } else if (rep.command == "costrat") {
      code = cmd_costrat(cfg, rep);
    } else if (rep.command == "spectrum") {
      code = cmd_spectrum(cfg, rep, scan, grid_min, grid_max, grid_points);
    }
    rep.finalize();
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InsufficientCutoff& e) {
    std::cerr << "cutoff too small: " << e.what() << "\n"
              << "hint: raise j_max until at least one constraint product fits\n";
    return kExitCutoff;
  } catch (const DimensionMismatch& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
