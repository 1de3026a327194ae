// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slgt/liecore.hpp"

using namespace slgt;

namespace {

AlgebraElement random_algebra(Rng& rng, double scale = 1.0) {
  Eigen::Vector3d x;
  for (int k = 0; k < 3; ++k) x[k] = scale * rng.gaussian();
  return AlgebraElement{su2_from_coordinates(x)};
}

PhasePoint random_point(Rng& rng, int n, double scale = 1.0) {
  PhasePoint p;
  for (int i = 0; i < n; ++i) {
    p.links.push_back({haar_sample(rng), random_algebra(rng, scale)});
  }
  return p;
}

}  // namespace

TEST_CASE("su2 coordinate round trip") {
  Rng rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Eigen::Vector3d x;
    for (int k = 0; k < 3; ++k) x[k] = rng.gaussian();
    Mat2 a = su2_from_coordinates(x);
    CHECK(is_algebra_element(a, 1e-14));
    CHECK((su2_coordinates(a) - x).norm() < 1e-13);
  }
}

TEST_CASE("haar samples are special unitary") {
  Rng rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    GroupElement g = haar_sample(rng);
    CHECK(is_special_unitary(g.m, 1e-12));
  }
}

TEST_CASE("closed-form exponential matches the series oracle") {
  Rng rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m(r, c) = Complex(rng.gaussian(), rng.gaussian());
    }
    Mat2 closed = exp2(m);
    Mat2 series = exp2_series(m, 60);
    CHECK((closed - series).norm() < 1e-11 * std::max(1.0, series.norm()));
  }
}

TEST_CASE("polar_compose basics") {
  GroupElement id;
  AlgebraElement zero;
  CHECK((polar_compose(id, zero).m - Mat2::Identity()).norm() < 1e-15);

  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    GroupElement g = haar_sample(rng);
    CHECK((polar_compose(g, zero).m - g.m).norm() < 1e-14);
  }

  // A = (c/2) i sigma_3 gives exp(iA) = diag(e^{-c/2}, e^{c/2})
  AlgebraElement a3;
  a3.m = su2_basis()[2];  // (i/2) sigma_3
  Mat2 expected = Mat2::Zero();
  expected(0, 0) = std::exp(-0.5);
  expected(1, 1) = std::exp(0.5);
  Mat2 got = polar_compose(id, a3).m;
  CHECK((got - expected).norm() < 1e-13);
  // against the series oracle
  CHECK((got - exp2_series(kI * a3.m, 50)).norm() < 1e-13);
  CHECK(is_special(got, 1e-13));
}

TEST_CASE("polar decomposition round trips and special cases") {
  // identity
  auto [u0, a0] = polar_decompose(ComplexGroupElement{Mat2::Identity()});
  CHECK((u0.m - Mat2::Identity()).norm() < 1e-14);
  CHECK(a0.m.norm() < 1e-14);

  Rng rng(13);
  // unitary input -> zero algebra part
  for (int rep = 0; rep < 20; ++rep) {
    GroupElement g = haar_sample(rng);
    auto [u, a] = polar_decompose(ComplexGroupElement{g.m});
    CHECK((u.m - g.m).norm() < 1e-12);
    CHECK(a.m.norm() < 1e-12);
  }
  // pure positive factor -> trivial unitary
  for (int rep = 0; rep < 20; ++rep) {
    AlgebraElement a = random_algebra(rng);
    ComplexGroupElement g{exp2(kI * a.m)};
    auto [u, b] = polar_decompose(g);
    CHECK((u.m - Mat2::Identity()).norm() < 1e-11);
    CHECK((b.m - a.m).norm() < 1e-11);
  }
  // full round trip, 1000 random inputs
  for (int rep = 0; rep < 1000; ++rep) {
    GroupElement g = haar_sample(rng);
    AlgebraElement a = random_algebra(rng);
    ComplexGroupElement z = polar_compose(g, a);
    CHECK(is_special(z.m, 1e-10));
    auto [u, b] = polar_decompose(z);
    CHECK((u.m - g.m).norm() < 1e-10);
    CHECK((b.m - a.m).norm() < 1e-10);
  }
}

TEST_CASE("polar decomposition rejects singular input") {
  Mat2 singular;
  singular << 1.0, 0.0, 0.0, 0.0;  // rank one
  CHECK_THROWS_AS(polar_decompose(ComplexGroupElement{1e-200 * singular}), SingularInput);
}

TEST_CASE("adjoint action: identity, zero, and the iσ1 flip") {
  Rng rng(17);
  AlgebraElement a = random_algebra(rng);
  CHECK((adjoint_action(GroupElement{}, a).m - a.m).norm() < 1e-15);

  GroupElement g = haar_sample(rng);
  CHECK(adjoint_action(g, AlgebraElement{}).m.norm() < 1e-15);

  // g = i sigma_1 conjugates c*diag(i,-i) to its negative
  Mat2 is1;
  is1 << 0.0, kI, kI, 0.0;
  Mat2 diag = 1.7 * (kI * Mat2::Identity());
  diag(1, 1) = -diag(1, 1);
  Mat2 expected = is1 * diag * is1.adjoint();  // direct arithmetic oracle
  AlgebraElement got = adjoint_action(GroupElement{is1}, AlgebraElement{diag});
  CHECK((got.m - expected).norm() < 1e-15);
  CHECK((got.m + diag).norm() < 1e-14);

  // norm preservation
  for (int rep = 0; rep < 100; ++rep) {
    GroupElement h = haar_sample(rng);
    AlgebraElement x = random_algebra(rng);
    CHECK(adjoint_action(h, x).m.norm() == doctest::Approx(x.m.norm()).epsilon(1e-12));
  }
}

TEST_CASE("momentum map: commuting pairs, trivial point, iσ1 case") {
  Rng rng(19);
  // commuting diagonal pairs lie in the zero level set
  for (int rep = 0; rep < 100; ++rep) {
    PhasePoint p;
    int n = 1 + static_cast<int>(rng.uniform() * 4);
    for (int i = 0; i < n; ++i) {
      double th = 6.28 * rng.uniform();
      double c = rng.gaussian();
      Mat2 a = Mat2::Zero();
      a(0, 0) = std::polar(1.0, th);
      a(1, 1) = std::polar(1.0, -th);
      Mat2 A = Mat2::Zero();
      A(0, 0) = kI * c;
      A(1, 1) = -kI * c;
      p.links.push_back({GroupElement{a}, AlgebraElement{A}});
    }
    CHECK(momentum_map(p).m.norm() < 1e-13);
  }

  PhasePoint trivial;
  trivial.links = {{GroupElement{}, AlgebraElement{}}, {GroupElement{}, AlgebraElement{}}};
  CHECK(momentum_map(trivial).m.norm() == 0.0);

  // N=1, a = i sigma_1, A = c diag(i,-i): mu = Ad(a)A - A = -2A
  Mat2 is1;
  is1 << 0.0, kI, kI, 0.0;
  Mat2 A = 0.8 * (kI * Mat2::Identity());
  A(1, 1) = -A(1, 1);
  PhasePoint p;
  p.links = {{GroupElement{is1}, AlgebraElement{A}}};
  Mat2 oracle = is1 * A * is1.adjoint() - A;  // direct arithmetic
  CHECK((momentum_map(p).m - oracle).norm() < 1e-15);
  CHECK((momentum_map(p).m + 2.0 * A).norm() < 1e-14);
}

TEST_CASE("diagonal conjugation and momentum equivariance") {
  Rng rng(23);
  PhasePoint p = random_point(rng, 3);
  CHECK((momentum_map(diagonal_conjugate(GroupElement{}, p)).m - momentum_map(p).m).norm() <
        1e-14);
  // the center acts trivially
  GroupElement minus{-Mat2::Identity()};
  PhasePoint q = diagonal_conjugate(minus, p);
  for (int i = 0; i < p.size(); ++i) {
    CHECK((q.links[i].first.m - p.links[i].first.m).norm() < 1e-15);
    CHECK((q.links[i].second.m - p.links[i].second.m).norm() < 1e-15);
  }
  for (int rep = 0; rep < 200; ++rep) {
    GroupElement g = haar_sample(rng);
    PhasePoint x = random_point(rng, 2);
    Mat2 lhs = momentum_map(diagonal_conjugate(g, x)).m;
    Mat2 rhs = g.m * momentum_map(x).m * g.m.adjoint();
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("polar_compose is equivariant") {
  Rng rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    GroupElement g = haar_sample(rng);
    GroupElement a = haar_sample(rng);
    AlgebraElement A = random_algebra(rng);
    Mat2 lhs = polar_compose(GroupElement{g.m * a.m * g.m.adjoint()},
                             adjoint_action(g, A))
                   .m;
    Mat2 rhs = g.m * polar_compose(a, A).m * g.m.adjoint();
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("haar quadrature: normalization and character orthogonality") {
  CHECK(std::abs(haar_quadrature([](const Mat2&) { return Complex(1.0); }, 0) - 1.0) < 1e-14);
  CHECK(std::abs(haar_quadrature([](const Mat2& g) { return g.trace(); }, 1)) < 1e-14);
  CHECK(std::abs(haar_quadrature([](const Mat2& g) { return std::norm(g.trace()); }, 2) - 1.0) <
        1e-13);

  // chi_n(theta) = sin((n+1)theta)/sin(theta) with 2cos(theta) = tr g;
  // orthonormality <chi_m, chi_n> = delta_mn
  auto chi = [](int n, const Mat2& g) {
    Complex acc = 0.0;
    Complex x = g.trace() / 2.0;
    Complex um2 = 0.0, um1 = 1.0;  // Chebyshev U recurrence
    for (int k = 0; k < n; ++k) {
      acc = 2.0 * x * um1 - um2;
      um2 = um1;
      um1 = acc;
    }
    return um1;
  };
  for (int m = 0; m <= 6; ++m) {
    for (int n = m; n <= 6; ++n) {
      Complex v = haar_quadrature([&](const Mat2& g) { return chi(m, g) * chi(n, g); }, m + n);
      CHECK(std::abs(v - (m == n ? 1.0 : 0.0)) < 1e-12);
    }
  }

  CHECK_THROWS_AS(haar_quadrature([](const Mat2&) { return Complex(0.0); }, -1), DegreeExceeded);
  CHECK_THROWS_AS(haar_quadrature([](const Mat2&) { return Complex(0.0); }, 100000),
                  DegreeExceeded);
}

TEST_CASE("two-copy quadrature factorizes") {
  // int tr(g1) conj(tr(g1)) tr(g2) conj(tr(g2)) = 1
  Complex v = haar_quadrature_n(
      2,
      [](const std::vector<Mat2>& g) {
        return std::norm(g[0].trace()) * std::norm(g[1].trace());
      },
      2);
  CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("trace invariants: central tuples, commuting tuples, generic pairs") {
  Rng rng(31);
  // central tuple: everything vanishes
  std::vector<int> signs{1, -1, 1};
  std::vector<Mat2> central;
  for (int nu : signs) central.push_back(static_cast<double>(nu) * Mat2::Identity());
  TraceInvariants inv = trace_invariants(central);
  for (const Complex& r : inv.rT2) CHECK(std::abs(r) < 1e-14);
  for (const Complex& r : inv.rT3) CHECK(std::abs(r) < 1e-14);
  for (const Complex& r : vertex_residuals(central, signs)) CHECK(std::abs(r) < 1e-14);

  // commuting diagonal tuple: commutator invariants vanish, vertex residuals do not
  std::vector<Mat2> diag(3);
  for (auto& d : diag) {
    double th = 0.3 + rng.uniform();
    d = Mat2::Zero();
    d(0, 0) = std::polar(1.0, th);
    d(1, 1) = std::polar(1.0, -th);
  }
  inv = trace_invariants(diag);
  for (const Complex& r : inv.rT2) CHECK(std::abs(r) < 1e-13);
  for (const Complex& r : inv.rT3) CHECK(std::abs(r) < 1e-13);

  // generic pair: rT_12 != 0, cross-checked against direct commutator arithmetic
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Mat2> pair{haar_sample(rng).m, haar_sample(rng).m};
    TraceInvariants i2 = trace_invariants(pair);
    Mat2 comm = pair[0] * pair[1] - pair[1] * pair[0];
    Complex oracle = (comm * comm).trace();
    CHECK(std::abs(i2.rT2[0] - oracle) < 1e-13);
    CHECK(std::abs(i2.rT2[0]) > 1e-8);  // generic
  }
}
