// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/dynamics.hpp"

#include "slgt/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace slgt {

void HamiltonianParams::validate() const {
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  if (!(hbar > 0.0)) throw ConfigError("hbar must be positive");
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  if (n_max < 2) throw ConfigError("n_max must be at least 2");
}

RealMatX build_hamiltonian(const HamiltonianParams& params) {
  params.validate();
  const int d = params.n_max + 1;
  RealMatX h = RealMatX::Zero(d, d);
  const double electric =
      params.lambda * params.lambda * params.hbar * params.hbar / (4.0 * params.beta * params.delta);
  const double magnetic = -2.0 / (params.lambda * params.lambda * params.delta);
  for (int n = 0; n < d; ++n) {
    h(n, n) = electric * n * (n + 2.0);
    if (n + 1 < d) {
      h(n, n + 1) = magnetic;
      h(n + 1, n) = magnetic;
    }
  }
  return h;
}

namespace {

std::pair<double, RealVecX> lowest_eigenpair(const RealMatX& h) {
  Eigen::SelfAdjointEigenSolver<RealMatX> es(h);
  return {es.eigenvalues()[0], es.eigenvectors().col(0)};
}

}  // namespace

SpectrumResult solve_spectrum(const HamiltonianParams& params, double conv_tol) {
  params.validate();
  Eigen::SelfAdjointEigenSolver<RealMatX> es(build_hamiltonian(params));
  SpectrumResult out;
  out.eigenvalues = es.eigenvalues();
  RealVecX gs = es.eigenvectors().col(0);
  // Perron phase fix: the ground state of the tridiagonal with negative
  // off-diagonals has single-signed coefficients
  if (gs.sum() < 0.0) gs = -gs;
  out.ground_state = gs.cast<Complex>();

  HamiltonianParams coarse = params;
  coarse.n_max = std::max(2, params.n_max - 5);
  auto [e0c, vc] = lowest_eigenpair(build_hamiltonian(coarse));
  out.convergence_shift = std::abs(out.eigenvalues[0] - e0c);
  if (out.convergence_shift > conv_tol) {
    throw NotConverged("ground energy shifted by " + std::to_string(out.convergence_shift) +
                       " between cutoffs");
  }
  return out;
}

double localization_probability(const VecX& state, const StratumProjection& proj) {
  if (state.size() != proj.p.rows()) {
    throw DimensionMismatch("localization_probability: state/projection size mismatch");
  }
  return (state.adjoint() * proj.p * state)(0, 0).real();
}

std::vector<ScanRow> spectrum_scan(const HamiltonianParams& base, const std::string& param_name,
                                   const std::vector<double>& grid, double conv_tol) {
  if (param_name != "lambda" && param_name != "hbar") {
    throw ConfigError("spectrum_scan: unknown parameter '" + param_name + "'");
  }
  std::vector<ScanRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    HamiltonianParams params = base;
    if (param_name == "lambda") {
      params.lambda = grid[i];
    } else {
      params.hbar = grid[i];
    }
    ScanRow row;
    row.param_name = param_name;
    row.param_value = grid[i];
    row.n_max = params.n_max;

    QuasiCharacterBasis basis = invariant_basis(1, params.n_max, params.hbar, params.beta);
    StratumProjection p_plus = vertex_projection(basis, {1});
    StratumProjection p_minus = vertex_projection(basis, {-1});
    row.overlap = std::abs(tunneling_overlap(basis, {1}, {-1}));
    try {
      SpectrumResult spec = solve_spectrum(params, conv_tol);
      row.ground_energy = spec.eigenvalues[0];
      row.convergence_shift = spec.convergence_shift;
      row.localization_plus = localization_probability(spec.ground_state, p_plus);
      row.localization_minus = localization_probability(spec.ground_state, p_minus);
    } catch (const NotConverged&) {
      row.converged = false;
      Eigen::SelfAdjointEigenSolver<RealMatX> es(build_hamiltonian(params));
      row.ground_energy = es.eigenvalues()[0];
      VecX gs = es.eigenvectors().col(0).cast<Complex>();
      row.localization_plus = localization_probability(gs, p_plus);
      row.localization_minus = localization_probability(gs, p_minus);
      row.convergence_shift = std::numeric_limits<double>::quiet_NaN();
    }
    rows[i] = row;
  });
  return rows;
}

double overlap_series_oracle(double s) {
  double num = 0.0, den = 0.0;
  for (int m = 1; m < 100000; ++m) {
    double term = static_cast<double>(m) * m * std::exp(-s * m * m);
    den += term;
    num += (m % 2 == 1) ? term : -term;
    if (term < 1e-300 && m > 10) break;
  }
  return num / den;
}

}  // namespace slgt
