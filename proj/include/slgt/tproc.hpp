// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/common.hpp"

#include <vector>

namespace slgt {

/// Direct sum of full matrix algebras acting block-diagonally on C^d.
struct MatrixAlgebra {
  std::vector<int> block_sizes;

  int dim() const;  // total space dimension d
  int block_offset(int b) const;
  int algebra_dimension() const;  // sum of squared block sizes

  /// Membership: all off-block entries vanish within tol.
  bool contains(const MatX& m, double tol) const;

  /// Zeroes the off-block entries.
  MatX project_member(const MatX& m) const;

  static MatrixAlgebra full(int d) { return MatrixAlgebra{{d}}; }
};

/// A *-algebra together with a self-adjoint set of constraints inside it.
struct ConstraintSystem {
  MatrixAlgebra algebra;
  std::vector<MatX> constraints;

  /// Checks sizes, membership and closure under adjoints within tol.
  void validate(double tol) const;
};

/// Output of the constraint reduction: the left ideal N, the hereditary
/// subalgebra D = N n N*, its unit projection q, the commutant O of q inside
/// the algebra, the physical compression R = pOp, and the Dirac vectors
/// (kernel of q). All subspace bases are Hilbert-Schmidt orthonormal.
struct TProcedureResult {
  MatrixAlgebra algebra;
  std::vector<MatX> left_ideal_basis;
  std::vector<MatX> hereditary_basis;
  MatX q;
  MatX p;
  std::vector<MatX> observable_basis;
  std::vector<MatX> physical_basis;
  std::vector<VecX> dirac_states;
  bool first_class = false;

  int dim_left_ideal() const { return static_cast<int>(left_ideal_basis.size()); }
  int dim_hereditary() const { return static_cast<int>(hereditary_basis.size()); }
  int dim_observables() const { return static_cast<int>(observable_basis.size()); }
  int dim_physical() const { return static_cast<int>(physical_basis.size()); }
};

/// Runs the whole reduction. rank_tol is the singular-value cutoff for the
/// joint constraint range.
TProcedureResult t_procedure(const ConstraintSystem& cs, double rank_tol = 1e-10);

/// Orthonormal basis (HS inner product) of the span of a matrix family.
std::vector<MatX> orthonormalize_matrices(const std::vector<MatX>& mats, double rank_tol);

/// Basis of {F in algebra : [F, c] in span(hereditary) for all c}. This is the
/// weak-commutant definition of the observables; t_procedure computes the
/// commutant of q instead, and the two must agree.
std::vector<MatX> weak_commutant_by_definition(const ConstraintSystem& cs,
                                               const TProcedureResult& result,
                                               double rank_tol = 1e-10);

/// Basis of the *-algebra generated by the constraints (no unit adjoined).
std::vector<MatX> cstar_generated(const ConstraintSystem& cs, double rank_tol = 1e-10);

/// True when two HS-orthonormal families span the same subspace within tol.
bool same_span(const std::vector<MatX>& a, const std::vector<MatX>& b, double tol);

}  // namespace slgt
