// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/costrat.hpp"
#include "slgt/liecore.hpp"
#include "slgt/quasichar.hpp"
#include "slgt/tproc.hpp"

#include <json.hpp>

#include <string>

namespace slgt {

using Json = nlohmann::json;

// Matrices and vectors travel as row-major arrays of [re, im] pairs.
Json matrix_to_json(const MatX& m);
MatX matrix_from_json(const Json& j, int rows, int cols);
Json vector_to_json(const VecX& v);
VecX vector_from_json(const Json& j);

// Constraint systems: {"blocks": [d1, ...], "constraints": [[...], ...]}
Json constraint_system_to_json(const ConstraintSystem& cs);
ConstraintSystem constraint_system_from_json(const Json& j);

// Reduction results: q, p, dimensions, first-class flag and the Dirac basis.
Json tproc_result_to_json(const TProcedureResult& r);

// Basis cache: versioned header plus per-block tensors.
Json basis_to_json(const QuasiCharacterBasis& basis);
QuasiCharacterBasis basis_from_json(const Json& j);

Json phase_point_to_json(const PhasePoint& p);
PhasePoint phase_point_from_json(const Json& j);

Json stratum_projection_to_json(const StratumProjection& sp);

/// Canonical dump (sorted keys, stable float formatting) used for hashing and
/// for byte-identical output files.
std::string canonical_dump(const Json& j);

/// FNV-1a hash of the canonical dump, as fixed-width hex.
std::string config_hash(const Json& j);

void write_text_file(const std::string& path, const std::string& content);
Json read_json_file(const std::string& path);

}  // namespace slgt
