// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/costrat.hpp"

#include <string>
#include <vector>

namespace slgt {

/// Couplings and cutoff of the single-plaquette Hamiltonian.
struct HamiltonianParams {
  double lambda = 1.0;  // coupling
  double delta = 1.0;   // lattice spacing
  double hbar = 0.1;
  double beta = 1.0;  // scalar-product scale on su(2)
  int n_max = 60;

  void validate() const;
};

/// H on span{chi_0 .. chi_n_max}: electric part diagonal with
/// (lambda^2 / 2 delta) hbar^2 n(n+2) / (2 beta), magnetic part tridiagonal
/// with off-diagonal entries -2/(lambda^2 delta) from
/// tr(a) chi_n = chi_{n+1} + chi_{n-1}.
RealMatX build_hamiltonian(const HamiltonianParams& params);

struct SpectrumResult {
  RealVecX eigenvalues;       // ascending
  VecX ground_state;          // normalized, phase-fixed positive
  double convergence_shift = 0.0;  // |E0(n_max) - E0(n_max - 5)|
};

/// Smallest eigenpair plus the cutoff-convergence diagnostic. Throws
/// NotConverged when the shift exceeds conv_tol.
SpectrumResult solve_spectrum(const HamiltonianParams& params, double conv_tol);

/// <state, p_tau state> for a normalized state on the same truncation.
double localization_probability(const VecX& state, const StratumProjection& proj);

struct ScanRow {
  std::string param_name;
  double param_value = 0.0;
  double ground_energy = 0.0;
  double localization_plus = 0.0;
  double localization_minus = 0.0;
  double overlap = 0.0;  // |<psi_+, psi_->| normalized
  int n_max = 0;
  double convergence_shift = 0.0;
  bool converged = true;
};

/// Evaluates ground state, stratum localizations and the +/- overlap over a
/// grid of one parameter ("lambda" or "hbar"). Rows appear in grid order;
/// rows that fail to converge are kept and flagged.
std::vector<ScanRow> spectrum_scan(const HamiltonianParams& base, const std::string& param_name,
                                   const std::vector<double>& grid, double conv_tol);

/// Independent series oracle for the N=1 vertex overlap:
/// sum_{m>=1} (-1)^{m-1} m^2 e^{-s m^2} / sum_{m>=1} m^2 e^{-s m^2}.
double overlap_series_oracle(double s);

}  // namespace slgt
