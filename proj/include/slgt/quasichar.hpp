// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/common.hpp"
#include "slgt/wigner.hpp"

#include <array>
#include <string>
#include <vector>

namespace slgt {

/// One spin per copy, doubled.
struct SpinAssignment {
  std::vector<int> twice_spins;
};

/// Invariant tensors of one Peter-Weyl block. The tensors act on the product
/// space (x)_i V_{j_i} and commute with the diagonal action; tensor labels are
/// (total spin, path u, path v) from the sequential coupling. Normalization:
/// ||X||_HS^2 = prod dims, which makes the associated functions
/// g -> tr(X . (x)_i pi_{j_i}(g_i)) an L^2-orthonormal family.
struct BasisBlock {
  std::vector<int> twice_spins;
  int total_dim = 1;
  std::vector<MatX> tensors;
  std::vector<std::array<int, 3>> labels;  // (tk, u, v)
  int offset = 0;
  double sb_scale = 1.0;  // prod_i exp(-s * tj_i (tj_i + 2) / 2), s = hbar beta^2
};

/// Orthonormal basis of the conjugation invariants on SU(2)^N up to the spin
/// cutoff, together with the heat-kernel scale factors that realize the same
/// vectors as unit vectors on the holomorphic side. Element 0 is the constant
/// function. Ordering: blocks by (total spin, spin assignment), then (k,u,v).
struct QuasiCharacterBasis {
  int n_copies = 1;
  int twice_j_max = 0;
  double hbar = 0.0;
  double beta = 1.0;
  std::vector<BasisBlock> blocks;
  int dim = 0;

  double s_param() const { return hbar * beta * beta; }
  int block_of(int index) const;
  SpinAssignment spins_of(int index) const;

  static constexpr const char* kConventionTag = "heat-njnp2";
};

QuasiCharacterBasis invariant_basis(int n_copies, int twice_j_max, double hbar, double beta);

/// Whether a coefficient vector is read as an expansion on the square
/// integrable side (plain Peter-Weyl patterns on SU(2)^N) or on the
/// holomorphic side (unit vectors carry the heat-kernel damping, functions
/// live on SL(2,C)^N). The Segal-Bargmann unitary itself is the identity on
/// coefficients; these tags only select the evaluation semantics.
enum class Side { SquareIntegrable, Holomorphic };

/// Coefficient vector plus the mass dropped past the cutoff while producing it.
struct FunctionVector {
  VecX coeffs;
  double truncation_loss = 0.0;

  static FunctionVector unit(const QuasiCharacterBasis& basis, int index);
  static FunctionVector zero(const QuasiCharacterBasis& basis);
};

/// Per-element scale factors s_alpha (holomorphic damping).
RealVecX scale_vector(const QuasiCharacterBasis& basis);

/// Reinterprets the expansion of a fixed function formula between the two
/// sides: an L^2-side expansion of a polynomial formula divides by the scale
/// factors to become the holomorphic-side expansion of the same formula, and
/// conversely. Round trip is the identity.
FunctionVector to_holomorphic(const QuasiCharacterBasis& basis, const FunctionVector& f);
FunctionVector to_square_integrable(const QuasiCharacterBasis& basis, const FunctionVector& f);

/// Values of every basis element at a point (SL(2,C)^N for the holomorphic
/// side, SU(2)^N for the square-integrable side).
VecX evaluate_all(const QuasiCharacterBasis& basis, const std::vector<Mat2>& point, Side side);

Complex evaluate(const QuasiCharacterBasis& basis, const FunctionVector& f,
                 const std::vector<Mat2>& point, Side side);

/// Pointwise product re-expanded in the basis through exact per-copy
/// Clebsch-Gordan recoupling. Blocks beyond the cutoff are dropped and
/// accounted in truncation_loss (measured in the requested side's norm).
FunctionVector multiply(const QuasiCharacterBasis& basis, const FunctionVector& f,
                        const FunctionVector& g, Side side);

// ---------------------------------------------------------------------------
// Formal trace polynomials
// ---------------------------------------------------------------------------

/// tr(a_{c_1} a_{c_2} ... ), copies pairwise distinct, length 1..3.
struct TraceWord {
  std::vector<int> copies;
};

struct TraceMonomial {
  std::vector<TraceWord> words;  // empty product = constant 1
};

struct TracePolynomial {
  std::vector<std::pair<Complex, TraceMonomial>> terms;

  static TracePolynomial constant(Complex c);
  static TracePolynomial t(int i);
  static TracePolynomial t(int i, int j);
  static TracePolynomial t(int i, int j, int k);
  TracePolynomial operator+(const TracePolynomial& o) const;
  TracePolynomial operator-(const TracePolynomial& o) const;
  TracePolynomial operator*(const TracePolynomial& o) const;
  TracePolynomial scaled(Complex c) const;
};

/// Direct matrix-arithmetic evaluation (the oracle route).
Complex evaluate_direct(const TracePolynomial& poly, const std::vector<Mat2>& point);

/// Exact expansion of a single trace word: permutation-operator tensor in the
/// all-spin-half block on the word's copies.
FunctionVector word_vector(const QuasiCharacterBasis& basis, const TraceWord& word);

/// Expansion of a formal trace polynomial in the basis, on the requested
/// side. Truncation loss is carried through (CutoffExceeded is a warning
/// encoded in the returned loss, never an exception).
FunctionVector expand_trace_polynomial(const QuasiCharacterBasis& basis,
                                       const TracePolynomial& poly, Side side);

}  // namespace slgt
