// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slgt/common.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace slgt {

// ---------------------------------------------------------------------------
// Domain types. Thin wrappers over 2x2 complex matrices; the wrapper names
// carry the role (group point, Lie algebra value, complexified group point)
// and the validation helpers check the corresponding invariants.
// ---------------------------------------------------------------------------

/// Element of SU(2).
struct GroupElement {
  Mat2 m = Mat2::Identity();
};

/// Element of su(2): anti-Hermitian, traceless.
struct AlgebraElement {
  Mat2 m = Mat2::Zero();
};

/// Element of SL(2,C).
struct ComplexGroupElement {
  Mat2 m = Mat2::Identity();
};

/// Value of the momentum map, identified with su(2) through the invariant
/// scalar product.
struct CoalgebraValue {
  Mat2 m = Mat2::Zero();
};

/// Point of T*SU(2)^N in the left trivialization: one (a, A) pair per link.
struct PhasePoint {
  std::vector<std::pair<GroupElement, AlgebraElement>> links;
  int size() const { return static_cast<int>(links.size()); }
};

bool is_unitary(const Mat2& m, double tol);
bool is_special_unitary(const Mat2& m, double tol);
bool is_special(const Mat2& m, double tol);  // det = 1
bool is_algebra_element(const Mat2& m, double tol);
bool is_valid(const PhasePoint& p, double tol);

/// Real orthonormal-direction basis of su(2): (i/2)*sigma_k for k=1,2,3.
const std::array<Mat2, 3>& su2_basis();

/// Coordinates of an algebra element in su2_basis(), and back.
Eigen::Vector3d su2_coordinates(const Mat2& a);
Mat2 su2_from_coordinates(const Eigen::Vector3d& x);

// ---------------------------------------------------------------------------
// 2x2 exponentials and logarithms
// ---------------------------------------------------------------------------

/// Matrix exponential, closed form through the Cayley-Hamilton reduction of a
/// 2x2 matrix. Valid for arbitrary complex input.
Mat2 exp2(const Mat2& m);

/// Plain series summation; slow reference used as an oracle in tests.
Mat2 exp2_series(const Mat2& m, int terms = 60);

// ---------------------------------------------------------------------------
// Polar correspondence and the group action
// ---------------------------------------------------------------------------

/// (a, A) -> a * exp(i A).
ComplexGroupElement polar_compose(const GroupElement& a, const AlgebraElement& A);

/// Inverse of polar_compose: unique (a, A) with g = a exp(iA), a unitary and
/// exp(iA) positive definite Hermitian. Throws SingularInput if g is
/// numerically non-invertible.
std::pair<GroupElement, AlgebraElement> polar_decompose(const ComplexGroupElement& g);

/// Ad(g) A = g A g^{-1} (g unitary, so the inverse is the adjoint).
AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& A);

/// mu(a, A) = sum_i Ad(a_i) A_i - A_i.
CoalgebraValue momentum_map(const PhasePoint& p);

/// g . (a_i, A_i) = (g a_i g^{-1}, Ad(g) A_i) on every link.
PhasePoint diagonal_conjugate(const GroupElement& g, const PhasePoint& p);

/// Composes every link: (a_i, A_i) -> a_i exp(i A_i).
std::vector<Mat2> polar_tuple(const PhasePoint& p);

// ---------------------------------------------------------------------------
// Haar measure
// ---------------------------------------------------------------------------

/// Haar-uniform SU(2) element (normalized Gaussian quaternion).
GroupElement haar_sample(Rng& rng);

/// Nodes and weights integrating polynomials in the matrix entries exactly up
/// to total degree `degree_bound`. Product rule over S^3 angles:
/// Gauss-Chebyshev (second kind) in the polar angle, Gauss-Legendre in the
/// middle angle, trapezoid in the azimuth.
struct HaarRule {
  std::vector<Mat2> nodes;
  std::vector<double> weights;  // sum to 1
};
HaarRule haar_rule(int degree_bound);

inline constexpr int kMaxQuadratureDegree = 300;

/// Integral over SU(2) of a polynomial integrand, exact up to degree_bound.
/// Throws DegreeExceeded when the bound is negative or above the supported cap.
Complex haar_quadrature(const std::function<Complex(const Mat2&)>& f, int degree_bound);

/// Product-rule integral over SU(2)^N, exact up to degree_bound per copy.
Complex haar_quadrature_n(int n_copies,
                          const std::function<Complex(const std::vector<Mat2>&)>& f,
                          int degree_bound);

// ---------------------------------------------------------------------------
// Trace invariants of group element tuples
// ---------------------------------------------------------------------------

/// Values of the invariant trace polynomials of a tuple (a_1..a_N):
///   t_i = tr a_i, t_ij = tr(a_i a_j), t_ijk = tr(a_i a_j a_k),
///   rT_ij  = tr([a_i,a_j]^2),  rT_ijk = tr([a_i,a_j] a_k).
/// Index maps are flattened over i<j and i<j<k.
struct TraceInvariants {
  int n = 0;
  std::vector<Complex> t1;
  std::vector<Complex> t2;
  std::vector<Complex> t3;
  std::vector<Complex> rT2;
  std::vector<Complex> rT3;

  static int pair_index(int i, int j, int n);        // i < j
  static int triple_index(int i, int j, int k, int n);  // i < j < k
};

TraceInvariants trace_invariants(const std::vector<Mat2>& a);
TraceInvariants trace_invariants(const PhasePoint& p);  // on the polar tuple

/// Residuals r^nu_i = tr a_i - 2 nu_i and r^nu_ij = tr(a_i a_j) - 2 nu_i nu_j
/// for a sign sequence nu (entries +1/-1). Returned flattened: the N singles
/// first, then the pairs in pair_index order.
std::vector<Complex> vertex_residuals(const std::vector<Mat2>& a, const std::vector<int>& signs);

}  // namespace slgt
