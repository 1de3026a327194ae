// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/strata.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace slgt {

std::string to_string(const OrbitType& t) {
  switch (t.tag) {
    case OrbitTypeTag::Torus:
      return "Torus";
    case OrbitTypeTag::Principal:
      return "Principal";
    case OrbitTypeTag::Vertex: {
      std::string s = "Vertex(";
      for (std::size_t i = 0; i < t.signs.size(); ++i) {
        s += (t.signs[i] > 0 ? '+' : '-');
      }
      return s + ")";
    }
  }
  return "?";
}

std::string to_string(const StratumLabel& l) {
  return to_string(OrbitType{l.tag, l.signs});
}

OrbitType stabilizer_type(const PhasePoint& p, double tol, ClassifyMargins* margins) {
  const int n = p.size();
  // Vertex distance: per link, distance to the nearest central pair.
  std::vector<int> signs(n);
  double vertex_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const Mat2& a = p.links[i].first.m;
    const Mat2& A = p.links[i].second.m;
    int nu = a.trace().real() >= 0.0 ? 1 : -1;
    signs[i] = nu;
    double d = (a - static_cast<double>(nu) * Mat2::Identity()).norm() + A.norm();
    vertex_res = std::max(vertex_res, d);
  }
  // Commutation residual over all pairs from {a_i} u {A_i}, scaled.
  std::vector<Mat2> fam;
  fam.reserve(2 * n);
  for (const auto& [a, A] : p.links) {
    fam.push_back(a.m);
    fam.push_back(A.m);
  }
  double comm_res = 0.0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      double scale = std::max(1.0, fam[i].norm() * fam[j].norm());
      comm_res = std::max(comm_res, (fam[i] * fam[j] - fam[j] * fam[i]).norm() / scale);
    }
  }
  if (margins) {
    margins->vertex_residual = vertex_res;
    margins->commutation_residual = comm_res;
    margins->nearest_signs = signs;
  }
  if (vertex_res <= tol) return OrbitType{OrbitTypeTag::Vertex, signs};
  if (comm_res <= tol) return OrbitType{OrbitTypeTag::Torus, {}};
  return OrbitType{OrbitTypeTag::Principal, {}};
}

int centralizer_dimension(const PhasePoint& p, double rank_tol) {
  // Stack the real-linear maps X -> [X, a_i] and X -> [X, A_i] over the su(2)
  // coordinate basis and count the nullspace dimension.
  const int n = p.size();
  Eigen::MatrixXd M(8 * 2 * n, 3);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) {
      const Mat2& X = su2_basis()[k];
      Mat2 ca = X * p.links[i].first.m - p.links[i].first.m * X;
      Mat2 cA = X * p.links[i].second.m - p.links[i].second.m * X;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          M(row + 0 + 2 * (2 * r + c), k) = ca(r, c).real();
          M(row + 1 + 2 * (2 * r + c), k) = ca(r, c).imag();
          M(row + 8 + 2 * (2 * r + c), k) = cA(r, c).real();
          M(row + 9 + 2 * (2 * r + c), k) = cA(r, c).imag();
        }
      }
    }
    row += 16;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  int rank = 0;
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] > rank_tol * std::max(1.0, smax)) ++rank;
  }
  return 3 - rank;
}

namespace {

double scaled_abs(const Complex& v, double scale) {
  return std::abs(v) / std::max(1.0, scale);
}

}  // namespace

RelationClassification classify_by_relations(const std::vector<Mat2>& a, double tol) {
  const int n = static_cast<int>(a.size());
  TraceInvariants inv = trace_invariants(a);
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) norms[i] = a[i].norm();

  RelationClassification out;
  double t_res = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double scale = norms[i] * norms[i] * norms[j] * norms[j];
      t_res = std::max(t_res, scaled_abs(inv.rT2[TraceInvariants::pair_index(i, j, n)], scale));
      for (int k = j + 1; k < n; ++k) {
        double s3 = norms[i] * norms[j] * norms[k];
        t_res = std::max(t_res, scaled_abs(inv.rT3[TraceInvariants::triple_index(i, j, k, n)], s3));
      }
    }
  }
  out.max_T_residual = t_res;
  out.satisfies_T_locus = t_res <= tol;

  std::vector<int> signs(n, 1);
  while (true) {
    std::vector<Complex> res = vertex_residuals(a, signs);
    double v_res = 0.0;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      v_res = std::max(v_res, scaled_abs(res[idx++], norms[i]));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        v_res = std::max(v_res, scaled_abs(res[idx++], norms[i] * norms[j]));
      }
    }
    out.max_vertex_residual[signs] = v_res;
    out.satisfies_vertex_locus[signs] = out.satisfies_T_locus && v_res <= tol;
    // next sign sequence
    int i = 0;
    for (; i < n; ++i) {
      if (signs[i] == 1) {
        signs[i] = -1;
        break;
      }
      signs[i] = 1;
    }
    if (i == n) break;
  }
  return out;
}

RelationClassification classify_by_relations(const PhasePoint& p, double tol) {
  return classify_by_relations(polar_tuple(p), tol);
}

OrbitType relation_type(const std::vector<Mat2>& a, double tol) {
  RelationClassification rc = classify_by_relations(a, tol);
  for (const auto& [signs, ok] : rc.satisfies_vertex_locus) {
    if (ok) return OrbitType{OrbitTypeTag::Vertex, signs};
  }
  if (rc.satisfies_T_locus) return OrbitType{OrbitTypeTag::Torus, {}};
  return OrbitType{OrbitTypeTag::Principal, {}};
}

PhasePoint sample_level_set(Rng& rng, int n_links, LevelSetMode mode) {
  PhasePoint p;
  p.links.resize(n_links);
  if (mode == LevelSetMode::TorusSector) {
    for (int i = 0; i < n_links; ++i) {
      double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
      double c = 2.0 * rng.gaussian();
      Mat2 a = Mat2::Zero();
      a(0, 0) = std::polar(1.0, theta);
      a(1, 1) = std::polar(1.0, -theta);
      Mat2 A = Mat2::Zero();
      A(0, 0) = kI * c;
      A(1, 1) = -kI * c;
      p.links[i] = {GroupElement{a}, AlgebraElement{A}};
    }
    GroupElement g = haar_sample(rng);
    return diagonal_conjugate(g, p);
  }
  // Generic: random a_i, then solve for (A_1..A_N) in the kernel of
  // A -> sum_i Ad(a_i) A_i - A_i (a real-linear map R^{3N} -> R^8).
  std::vector<GroupElement> as(n_links);
  for (int i = 0; i < n_links; ++i) as[i] = haar_sample(rng);
  Eigen::MatrixXd M(8, 3 * n_links);
  for (int i = 0; i < n_links; ++i) {
    for (int k = 0; k < 3; ++k) {
      Mat2 img = as[i].m * su2_basis()[k] * as[i].m.adjoint() - su2_basis()[k];
      int col = 3 * i + k;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          M(2 * (2 * r + c) + 0, col) = img(r, c).real();
          M(2 * (2 * r + c) + 1, col) = img(r, c).imag();
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  double smax = svd.singularValues()[0];
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] > 1e-12 * std::max(1.0, smax)) ++rank;
  }
  int null_dim = 3 * n_links - rank;
  if (null_dim < 1) {
    throw SingularInput("sample_level_set: empty kernel");  // cannot happen
  }
  Eigen::VectorXd coeffs(null_dim);
  for (int k = 0; k < null_dim; ++k) coeffs[k] = rng.gaussian();
  Eigen::VectorXd x = svd.matrixV().rightCols(null_dim) * coeffs;
  for (int i = 0; i < n_links; ++i) {
    Eigen::Vector3d xi = x.segment<3>(3 * i);
    p.links[i] = {as[i], AlgebraElement{su2_from_coordinates(xi)}};
  }
  return p;
}

bool StratumPoset::leq(int i, int j) const {
  if (i == j) return true;
  // transitive closure over covers (the poset is tiny)
  std::vector<int> stack{i};
  std::vector<bool> seen(labels.size(), false);
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    if (cur == j) return true;
    if (seen[cur]) continue;
    seen[cur] = true;
    for (const auto& [lo, hi] : covers) {
      if (lo == cur) stack.push_back(hi);
    }
  }
  return false;
}

int StratumPoset::index_of(const StratumLabel& l) const {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == l) return static_cast<int>(k);
  }
  return -1;
}

StratumPoset stratum_poset(int n_links) {
  StratumPoset poset;
  poset.n_links = n_links;
  std::vector<int> signs(n_links, 1);
  while (true) {
    poset.labels.push_back(StratumLabel{OrbitTypeTag::Vertex, signs, n_links});
    int i = 0;
    for (; i < n_links; ++i) {
      if (signs[i] == 1) {
        signs[i] = -1;
        break;
      }
      signs[i] = 1;
    }
    if (i == n_links) break;
  }
  const int n_vert = static_cast<int>(poset.labels.size());
  if (n_links == 1) {
    poset.labels.push_back(StratumLabel{OrbitTypeTag::Principal, {}, n_links});
    for (int v = 0; v < n_vert; ++v) poset.covers.push_back({v, n_vert});
    return poset;
  }
  poset.labels.push_back(StratumLabel{OrbitTypeTag::Torus, {}, n_links});
  poset.labels.push_back(StratumLabel{OrbitTypeTag::Principal, {}, n_links});
  for (int v = 0; v < n_vert; ++v) poset.covers.push_back({v, n_vert});
  poset.covers.push_back({n_vert, n_vert + 1});
  return poset;
}

StratumLabel stratum_of(const OrbitType& t, int n_links) {
  if (t.tag == OrbitTypeTag::Vertex) return StratumLabel{t.tag, t.signs, n_links};
  if (t.tag == OrbitTypeTag::Torus && n_links == 1) {
    return StratumLabel{OrbitTypeTag::Principal, {}, n_links};
  }
  return StratumLabel{t.tag, {}, n_links};
}

}  // namespace slgt
