// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/liecore.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slgt {

enum class OrbitTypeTag { Vertex, Torus, Principal };

/// Stabilizer class of a phase point. Vertex carries the sign sequence.
struct OrbitType {
  OrbitTypeTag tag = OrbitTypeTag::Principal;
  std::vector<int> signs;  // length N iff tag == Vertex

  bool operator==(const OrbitType& o) const { return tag == o.tag && signs == o.signs; }
};

std::string to_string(const OrbitType& t);

/// Distances backing a classification decision, reported for auditability.
struct ClassifyMargins {
  double vertex_residual = 0.0;       // max over links of ||a - nu I|| + ||A||
  double commutation_residual = 0.0;  // max scaled pairwise commutator norm
  std::vector<int> nearest_signs;
};

/// Centralizer-intersection classification:
///  - Vertex(nu) iff every a_i = nu_i I and A_i = 0 within tol,
///  - Torus iff all pairwise commutators of {a_i, A_i} vanish within the
///    scaled tolerance and the point is not a vertex,
///  - Principal otherwise.
/// Points within tol of a smaller stratum get the smaller stratum's type.
OrbitType stabilizer_type(const PhasePoint& p, double tol, ClassifyMargins* margins = nullptr);

/// Dimension (0, 1 or 3) of the Lie algebra of the stabilizer, computed by a
/// nullspace solve of X -> ([X, a_i], [X, A_i]). Independent route used to
/// cross-check stabilizer_type.
int centralizer_dimension(const PhasePoint& p, double rank_tol = 1e-8);

/// Zero-locus tests of the defining relations on an SL(2,C) tuple.
struct RelationClassification {
  bool satisfies_T_locus = false;
  std::map<std::vector<int>, bool> satisfies_vertex_locus;
  double max_T_residual = 0.0;
  std::map<std::vector<int>, double> max_vertex_residual;
};

RelationClassification classify_by_relations(const std::vector<Mat2>& a, double tol);
RelationClassification classify_by_relations(const PhasePoint& p, double tol);

/// Best-matching stratum according to classify_by_relations, mapped onto the
/// OrbitType vocabulary (vertex locus -> Vertex, T locus alone -> Torus,
/// neither -> Principal).
OrbitType relation_type(const std::vector<Mat2>& a, double tol);

enum class LevelSetMode { TorusSector, Generic };

/// Draws points of mu^{-1}(0). TorusSector: commuting diagonal pairs pushed
/// around by a random conjugation. Generic: Haar-random a_i and a random
/// element of the kernel of the linearized momentum map.
PhasePoint sample_level_set(Rng& rng, int n_links, LevelSetMode mode);

// ---------------------------------------------------------------------------
// Stratum poset
// ---------------------------------------------------------------------------

struct StratumLabel {
  OrbitTypeTag tag = OrbitTypeTag::Principal;
  std::vector<int> signs;
  int n_links = 1;

  bool operator==(const StratumLabel& o) const {
    return tag == o.tag && signs == o.signs && n_links == o.n_links;
  }
};

std::string to_string(const StratumLabel& l);

/// Orbit-type poset of the reduced phase space. For N = 1 the commuting
/// non-vertex set is already the principal stratum, so no Torus label exists.
struct StratumPoset {
  int n_links = 1;
  std::vector<StratumLabel> labels;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) index pairs

  bool leq(int i, int j) const;
  int index_of(const StratumLabel& l) const;
};

StratumPoset stratum_poset(int n_links);

/// Stratum of an orbit type (folds Torus into Principal when N = 1).
StratumLabel stratum_of(const OrbitType& t, int n_links);

}  // namespace slgt
