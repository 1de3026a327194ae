// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/liecore.hpp"

#include <array>
#include <cmath>

namespace slgt {

bool is_unitary(const Mat2& m, double tol) {
  return (m.adjoint() * m - Mat2::Identity()).norm() <= tol;
}

bool is_special(const Mat2& m, double tol) {
  return std::abs(m.determinant() - 1.0) <= tol;
}

bool is_special_unitary(const Mat2& m, double tol) {
  return is_unitary(m, tol) && is_special(m, tol);
}

bool is_algebra_element(const Mat2& m, double tol) {
  return (m + m.adjoint()).norm() <= tol && std::abs(m.trace()) <= tol;
}

bool is_valid(const PhasePoint& p, double tol) {
  if (p.links.empty()) return false;
  for (const auto& [a, A] : p.links) {
    if (!is_special_unitary(a.m, tol) || !is_algebra_element(A.m, tol)) return false;
  }
  return true;
}

const std::array<Mat2, 3>& su2_basis() {
  static const std::array<Mat2, 3> basis = [] {
    std::array<Mat2, 3> b;
    b[0] << 0.0, kI * 0.5, kI * 0.5, 0.0;      // (i/2) sigma_1
    b[1] << 0.0, 0.5, -0.5, 0.0;               // (i/2) sigma_2
    b[2] << kI * 0.5, 0.0, 0.0, -kI * 0.5;     // (i/2) sigma_3
    return b;
  }();
  return basis;
}

Eigen::Vector3d su2_coordinates(const Mat2& a) {
  // <X,Y> = 2 Re tr(X^dag Y) ... with this basis  tr(b_k^dag b_l) = delta/2,
  // so coordinates are 2 Re tr(b_k^dag a).
  Eigen::Vector3d x;
  for (int k = 0; k < 3; ++k) {
    x[k] = 2.0 * (su2_basis()[k].adjoint() * a).trace().real();
  }
  return x;
}

Mat2 su2_from_coordinates(const Eigen::Vector3d& x) {
  Mat2 a = Mat2::Zero();
  for (int k = 0; k < 3; ++k) a += x[k] * su2_basis()[k];
  return a;
}

Mat2 exp2(const Mat2& m) {
  // m = alpha I + m0 with m0 traceless; m0^2 = -det(m0) I, so
  // exp(m) = e^alpha (cosh(s) I + sinhc(s) m0) with s^2 = -det(m0).
  Complex alpha = m.trace() / 2.0;
  Mat2 m0 = m - alpha * Mat2::Identity();
  Complex z = -m0.determinant();  // s^2
  Complex coshs, sinhcs;
  if (std::abs(z) < 1e-8) {
    // series in z for cosh(sqrt z) and sinh(sqrt z)/sqrt z
    coshs = 1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0;
    sinhcs = 1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0;
  } else {
    Complex s = std::sqrt(z);
    coshs = std::cosh(s);
    sinhcs = std::sinh(s) / s;
  }
  return std::exp(alpha) * (coshs * Mat2::Identity() + sinhcs * m0);
}

Mat2 exp2_series(const Mat2& m, int terms) {
  Mat2 sum = Mat2::Identity();
  Mat2 term = Mat2::Identity();
  for (int k = 1; k <= terms; ++k) {
    term = (term * m) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

ComplexGroupElement polar_compose(const GroupElement& a, const AlgebraElement& A) {
  return ComplexGroupElement{a.m * exp2(kI * A.m)};
}

std::pair<GroupElement, AlgebraElement> polar_decompose(const ComplexGroupElement& g) {
  Mat2 h2 = g.m.adjoint() * g.m;  // positive Hermitian, det 1
  Eigen::SelfAdjointEigenSolver<Mat2> es(h2);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw SingularInput("polar_decompose: input is numerically singular");
  }
  Eigen::Vector2d lam = es.eigenvalues();
  Mat2 v = es.eigenvectors();
  Mat2 hinv = v * Eigen::Vector2d(1.0 / std::sqrt(lam[0]), 1.0 / std::sqrt(lam[1])).asDiagonal() * v.adjoint();
  Mat2 u = g.m * hinv;
  // iA = log h =  v diag(log sqrt(lam)) v^dag; remove the rounding-level trace
  Mat2 logh = v * Eigen::Vector2d(0.5 * std::log(lam[0]), 0.5 * std::log(lam[1])).asDiagonal() * v.adjoint();
  logh -= (logh.trace() / 2.0) * Mat2::Identity();
  Mat2 A = -kI * logh;
  A = 0.5 * (A - A.adjoint());  // clean anti-Hermitian part
  return {GroupElement{u}, AlgebraElement{A}};
}

AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& A) {
  return AlgebraElement{g.m * A.m * g.m.adjoint()};
}

CoalgebraValue momentum_map(const PhasePoint& p) {
  Mat2 mu = Mat2::Zero();
  for (const auto& [a, A] : p.links) {
    mu += a.m * A.m * a.m.adjoint() - A.m;
  }
  return CoalgebraValue{mu};
}

PhasePoint diagonal_conjugate(const GroupElement& g, const PhasePoint& p) {
  PhasePoint out;
  out.links.reserve(p.links.size());
  for (const auto& [a, A] : p.links) {
    out.links.push_back({GroupElement{g.m * a.m * g.m.adjoint()},
                         AlgebraElement{g.m * A.m * g.m.adjoint()}});
  }
  return out;
}

std::vector<Mat2> polar_tuple(const PhasePoint& p) {
  std::vector<Mat2> out;
  out.reserve(p.links.size());
  for (const auto& [a, A] : p.links) out.push_back(polar_compose(a, A).m);
  return out;
}

GroupElement haar_sample(Rng& rng) {
  double x0, x1, x2, x3, n2;
  do {
    x0 = rng.gaussian();
    x1 = rng.gaussian();
    x2 = rng.gaussian();
    x3 = rng.gaussian();
    n2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
  } while (n2 < 1e-12);
  double inv = 1.0 / std::sqrt(n2);
  x0 *= inv;
  x1 *= inv;
  x2 *= inv;
  x3 *= inv;
  Mat2 g;
  g << Complex(x0, x3), Complex(x2, x1), Complex(-x2, x1), Complex(x0, -x3);
  return GroupElement{g};
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

HaarRule haar_rule(int degree_bound) {
  if (degree_bound < 0 || degree_bound > kMaxQuadratureDegree) {
    throw DegreeExceeded("haar_rule: degree bound " + std::to_string(degree_bound) +
                         " outside [0," + std::to_string(kMaxQuadratureDegree) + "]");
  }
  const double pi = 3.14159265358979323846;
  int d = degree_bound;
  // chi: weight sqrt(1-u^2) on [-1,1] -> Chebyshev second kind, exact to 2m-1
  int m_chi = d / 2 + 1;
  // theta: Legendre on [-1,1]
  int m_th = d / 2 + 1;
  // phi: trapezoid, exact for trig degree < m_phi
  int m_phi = d + 1;

  std::vector<double> u(m_chi), wu(m_chi);
  for (int k = 1; k <= m_chi; ++k) {
    double a = k * pi / (m_chi + 1);
    u[k - 1] = std::cos(a);
    wu[k - 1] = (pi / (m_chi + 1)) * std::sin(a) * std::sin(a);
  }
  std::vector<double> t, wt;
  gauss_legendre(m_th, t, wt);

  HaarRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(m_chi) * m_th * m_phi);
  rule.weights.reserve(rule.nodes.capacity());
  const double norm = 1.0 / (2.0 * pi * pi);
  for (int i = 0; i < m_chi; ++i) {
    double x0 = u[i];
    double schi = std::sqrt(std::max(0.0, 1.0 - x0 * x0));
    for (int j = 0; j < m_th; ++j) {
      double ct = t[j];
      double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int k = 0; k < m_phi; ++k) {
        double phi = 2.0 * pi * k / m_phi;
        double x1 = schi * ct;
        double x2 = schi * st * std::cos(phi);
        double x3 = schi * st * std::sin(phi);
        Mat2 g;
        g << Complex(x0, x3), Complex(x2, x1), Complex(-x2, x1), Complex(x0, -x3);
        rule.nodes.push_back(g);
        rule.weights.push_back(norm * wu[i] * wt[j] * (2.0 * pi / m_phi));
      }
    }
  }
  return rule;
}

Complex haar_quadrature(const std::function<Complex(const Mat2&)>& f, int degree_bound) {
  HaarRule rule = haar_rule(degree_bound);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

Complex haar_quadrature_n(int n_copies,
                          const std::function<Complex(const std::vector<Mat2>&)>& f,
                          int degree_bound) {
  HaarRule rule = haar_rule(degree_bound);
  std::vector<Mat2> point(n_copies);
  std::vector<std::size_t> idx(n_copies, 0);
  Complex acc = 0.0;
  const std::size_t m = rule.nodes.size();
  while (true) {
    double w = 1.0;
    for (int c = 0; c < n_copies; ++c) {
      point[c] = rule.nodes[idx[c]];
      w *= rule.weights[idx[c]];
    }
    acc += w * f(point);
    int c = 0;
    for (; c < n_copies; ++c) {
      if (++idx[c] < m) break;
      idx[c] = 0;
    }
    if (c == n_copies) break;
  }
  return acc;
}

int TraceInvariants::pair_index(int i, int j, int n) {
  // position of (i,j), i<j, in row-major upper-triangle order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int TraceInvariants::triple_index(int i, int j, int k, int n) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += (n - a - 1) * (n - a - 2) / 2;
  idx += TraceInvariants::pair_index(j - i - 1, k - i - 1, n - i - 1);
  return idx;
}

TraceInvariants trace_invariants(const std::vector<Mat2>& a) {
  TraceInvariants out;
  const int n = static_cast<int>(a.size());
  out.n = n;
  out.t1.resize(n);
  for (int i = 0; i < n; ++i) out.t1[i] = a[i].trace();
  out.t2.resize(n * (n - 1) / 2);
  out.rT2.resize(out.t2.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int idx = TraceInvariants::pair_index(i, j, n);
      out.t2[idx] = (a[i] * a[j]).trace();
      Mat2 comm = a[i] * a[j] - a[j] * a[i];
      out.rT2[idx] = (comm * comm).trace();
    }
  }
  out.t3.resize(n * (n - 1) * (n - 2) / 6);
  out.rT3.resize(out.t3.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat2 comm = a[i] * a[j] - a[j] * a[i];
      for (int k = j + 1; k < n; ++k) {
        int idx = TraceInvariants::triple_index(i, j, k, n);
        out.t3[idx] = (a[i] * a[j] * a[k]).trace();
        out.rT3[idx] = (comm * a[k]).trace();
      }
    }
  }
  return out;
}

TraceInvariants trace_invariants(const PhasePoint& p) {
  return trace_invariants(polar_tuple(p));
}

std::vector<Complex> vertex_residuals(const std::vector<Mat2>& a, const std::vector<int>& signs) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(signs.size()) != n) {
    throw DimensionMismatch("vertex_residuals: sign sequence length mismatch");
  }
  std::vector<Complex> out;
  out.reserve(n + n * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    out.push_back(a[i].trace() - 2.0 * signs[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back((a[i] * a[j]).trace() - 2.0 * signs[i] * signs[j]);
    }
  }
  return out;
}

}  // namespace slgt
