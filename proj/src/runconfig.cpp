// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/runconfig.hpp"

#include <cmath>

namespace slgt {

int parse_twice_spin(const Json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den != 2) throw ConfigError("half-integer strings must use denominator 2");
      return num;
    }
    return 2 * std::stoi(s);
  }
  double x = v.get<double>();
  double doubled = 2.0 * x;
  int t = static_cast<int>(std::lround(doubled));
  if (std::abs(doubled - t) > 1e-9) {
    throw ConfigError("spin values must be half-integers");
  }
  return t;
}

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  if (j.contains("N")) cfg.n_links = j["N"].get<int>();
  if (j.contains("j_max")) cfg.twice_j_max = parse_twice_spin(j["j_max"]);
  if (j.contains("hbar")) cfg.hbar = j["hbar"].get<double>();
  if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
  if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
  if (j.contains("delta")) cfg.delta = j["delta"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("basis_cache")) cfg.basis_cache = j["basis_cache"].get<std::string>();
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    if (t.contains("unit")) cfg.tol.unit = t["unit"].get<double>();
    if (t.contains("round_trip")) cfg.tol.round_trip = t["round_trip"].get<double>();
    if (t.contains("rank")) cfg.tol.rank = t["rank"].get<double>();
    if (t.contains("gram")) cfg.tol.gram = t["gram"].get<double>();
    if (t.contains("eval")) cfg.tol.eval = t["eval"].get<double>();
    if (t.contains("loss")) cfg.tol.loss = t["loss"].get<double>();
    if (t.contains("convergence")) cfg.tol.convergence = t["convergence"].get<double>();
  }
  if (cfg.n_links < 1) throw ConfigError("N must be at least 1");
  if (cfg.twice_j_max < 0) throw ConfigError("j_max must be non-negative");
  if (cfg.lambda <= 0.0 || cfg.delta <= 0.0) throw ConfigError("lambda and delta must be positive");
  if (cfg.hbar && *cfg.hbar <= 0.0) throw ConfigError("hbar must be positive");
  if (cfg.beta && *cfg.beta <= 0.0) throw ConfigError("beta must be positive");
  return cfg;
}

Json RunConfig::to_json() const {
  Json j;
  j["N"] = n_links;
  j["j_max"] = twice_j_max / 2.0;
  if (hbar) j["hbar"] = *hbar;
  if (beta) j["beta"] = *beta;
  j["lambda"] = lambda;
  j["delta"] = delta;
  j["seed"] = seed;
  j["n_max"] = n_max;
  j["output_dir"] = output_dir;
  if (basis_cache) j["basis_cache"] = *basis_cache;
  j["tolerances"] = Json{{"unit", tol.unit},          {"round_trip", tol.round_trip},
                         {"rank", tol.rank},          {"gram", tol.gram},
                         {"eval", tol.eval},          {"loss", tol.loss},
                         {"convergence", tol.convergence}};
  return j;
}

double RunConfig::require_hbar() const {
  if (!hbar) throw ConfigError("this command needs 'hbar' set explicitly in the config");
  return *hbar;
}

double RunConfig::require_beta() const {
  if (!beta) throw ConfigError("this command needs 'beta' set explicitly in the config");
  return *beta;
}

}  // namespace slgt
