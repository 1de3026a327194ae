// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/common.hpp"
#include "slgt/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slgt {

/// Parsed run configuration. hbar and beta carry no defaults: commands that
/// need the basis refuse to run without them being set explicitly.
struct RunConfig {
  int n_links = 1;
  int twice_j_max = 3;
  std::optional<double> hbar;
  std::optional<double> beta;
  double lambda = 1.0;
  double delta = 1.0;
  std::uint64_t seed = 1;
  int n_max = 60;
  Tolerances tol;
  std::string output_dir = "out";
  std::optional<std::string> basis_cache;

  Json to_json() const;

  double require_hbar() const;
  double require_beta() const;
};

RunConfig config_from_json(const Json& j);

/// Half-integer parsing: accepts 1.5 or "3/2"; returns the doubled value.
int parse_twice_spin(const Json& v);

}  // namespace slgt
