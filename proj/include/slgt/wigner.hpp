// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/common.hpp"

#include <vector>

namespace slgt {

// Spins are handled as doubled integers (tj = 2j) so half-integers stay exact.

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> with doubled arguments.
double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj, int tm);

/// Coupling isometry V_j -> V_{j1} (x) V_{j2}; columns indexed by m = -j..j,
/// rows by (m1, m2) with m1 fastest along the j1 factor. C^dag C = I.
Eigen::MatrixXd cg_isometry(int tj1, int tj2, int tj);

/// Allowed total spins of j1 (x) j2 in ascending order (doubled).
std::vector<int> clebsch_range(int tj1, int tj2);

/// Multiplicity of spin tj in the N-fold product of the given spins.
/// Pure interval combinatorics; used as the counting oracle for the
/// invariant-basis block dimensions.
long multiplicity(const std::vector<int>& tjs, int tj);

/// Dimension of the commutant of the product representation, i.e. the number
/// of independent invariant tensors: sum over tj of multiplicity^2.
long invariant_dimension(const std::vector<int>& tjs);

/// Irreducible representation matrix pi_j(g) for g in SL(2,C), realized on
/// the degree-2j symmetric power with binomially normalized monomial basis.
/// Entries are polynomials in the entries of g, so the formula holomorphically
/// extends the unitary SU(2) representation; pi_j(gh) = pi_j(g) pi_j(h).
MatX irrep_matrix(int tj, const Mat2& g);

/// Character chi_n(g) = tr pi_{n/2}(g), n = tj.
Complex irrep_character(int tj, const Mat2& g);

}  // namespace slgt
