// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/quasichar.hpp"
#include "slgt/strata.hpp"
#include "slgt/tproc.hpp"

#include <vector>

namespace slgt {

/// The point (nu_1 I, ..., nu_N I).
std::vector<Mat2> vertex_point(const std::vector<int>& signs);

/// Riesz representer of evaluation at a point of SL(2,C)^N within the
/// truncation: psi_b = sum_beta conj(psi_beta(b)) psi_beta. Satisfies
/// <psi_b, phi> = phi(b) for every truncated phi.
VecX evaluation_vector(const QuasiCharacterBasis& basis, const std::vector<Mat2>& point);

/// A constraint product that leaked past the cutoff and was dropped.
struct TruncationEvent {
  int generator = 0;
  int alpha = 0;
  double relative_loss = 0.0;
};

/// Orthogonal projections attached to a stratum: q onto the (truncated)
/// vanishing subspace, p = 1 - q onto the localized subspace.
struct StratumProjection {
  StratumLabel label;
  MatX q;
  MatX p;
  std::vector<TruncationEvent> exclusions;
  int retained_products = 0;

  int dim() const { return static_cast<int>(p.rows()); }
};

/// Rank-one localized subspace of a vertex stratum, in closed form from the
/// evaluation vector at the vertex point.
StratumProjection vertex_projection(const QuasiCharacterBasis& basis, const std::vector<int>& signs);

/// Defining relations of the T-stratum closure: tr([a_i,a_j]^2) and
/// tr([a_i,a_j] a_k), written in the trace-polynomial generators through the
/// Cayley-Hamilton reduction of degree-4 words.
std::vector<TracePolynomial> t_stratum_relations(int n_copies);

/// Relations cutting out the vertex nu: the T relations plus
/// tr(a_i) - 2 nu_i and tr(a_i a_j) - 2 nu_i nu_j.
std::vector<TracePolynomial> vertex_relations(int n_copies, const std::vector<int>& signs);

/// Generators of a stratum's vanishing ideal expanded in the basis. Every
/// generator vanishes on the stratum, so its holomorphic evaluation at
/// sampled stratum points stays below the evaluation tolerance.
struct VanishingFamily {
  StratumLabel stratum;
  std::vector<FunctionVector> generators;
};

VanishingFamily t_vanishing_family(const QuasiCharacterBasis& basis);
VanishingFamily vertex_vanishing_family(const QuasiCharacterBasis& basis,
                                        const std::vector<int>& signs);

/// Products r_i . psi_alpha of the vanishing-family generators with all basis
/// elements. Products with relative truncation loss above loss_tol are
/// excluded and logged; near-zero products are skipped.
struct ConstraintProducts {
  std::vector<VecX> vectors;                   // retained, unnormalized
  std::vector<std::pair<int, int>> labels;     // (generator, alpha)
  std::vector<TruncationEvent> exclusions;
};

ConstraintProducts constraint_products(const QuasiCharacterBasis& basis,
                                       const std::vector<FunctionVector>& family,
                                       double loss_tol);

/// Rank-one projections q_{tau,i,alpha} onto the retained products.
std::vector<MatX> constraint_projections(const ConstraintProducts& products);

/// Support projection of the T-stratum constraint family, computed by the
/// constraint-reduction engine on the full matrix algebra over the
/// truncation. Throws InsufficientCutoff when every product was excluded.
StratumProjection stratum_projection_T(const QuasiCharacterBasis& basis, double loss_tol,
                                       double rank_tol);

/// Same construction for an arbitrary vanishing family (used for the vertex
/// constraint route, which cross-checks the closed form).
StratumProjection stratum_projection_from_family(const QuasiCharacterBasis& basis,
                                                 const VanishingFamily& family, double loss_tol,
                                                 double rank_tol);

/// || p_T p_nu - p_nu ||_2 : how far the vertex subspace sits from the
/// T-localized subspace at this truncation.
double monotonicity_residual(const StratumProjection& coarse, const StratumProjection& fine);

/// Corner algebra A_tau = p B(H) p.
struct ObservableAlgebra {
  StratumLabel label;
  MatX p;
  int rank = 0;

  long block_dimension() const { return static_cast<long>(rank) * rank; }
  MatX compress(const MatX& a) const { return p * a * p; }
};

ObservableAlgebra observable_algebra(const QuasiCharacterBasis& basis,
                                     const StratumProjection& proj, double rank_tol);

/// Normalized overlap <psi_nu, psi_nu'> / (||psi_nu|| ||psi_nu'||).
Complex tunneling_overlap(const QuasiCharacterBasis& basis, const std::vector<int>& signs_a,
                          const std::vector<int>& signs_b);

}  // namespace slgt
