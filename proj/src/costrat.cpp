// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/costrat.hpp"

#include "slgt/parallel.hpp"

#include <cmath>

namespace slgt {

std::vector<Mat2> vertex_point(const std::vector<int>& signs) {
  std::vector<Mat2> pt;
  pt.reserve(signs.size());
  for (int nu : signs) pt.push_back(static_cast<double>(nu) * Mat2::Identity());
  return pt;
}

VecX evaluation_vector(const QuasiCharacterBasis& basis, const std::vector<Mat2>& point) {
  VecX values = evaluate_all(basis, point, Side::Holomorphic);
  return values.conjugate();
}

StratumProjection vertex_projection(const QuasiCharacterBasis& basis,
                                    const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != basis.n_copies) {
    throw DimensionMismatch("vertex_projection: sign sequence arity mismatch");
  }
  VecX psi = evaluation_vector(basis, vertex_point(signs));
  StratumProjection out;
  out.label = StratumLabel{OrbitTypeTag::Vertex, signs, basis.n_copies};
  out.p = psi * psi.adjoint() / psi.squaredNorm();
  out.q = MatX::Identity(basis.dim, basis.dim) - out.p;
  return out;
}

std::vector<TracePolynomial> t_stratum_relations(int n_copies) {
  using TP = TracePolynomial;
  std::vector<TP> out;
  // tr([a,b]^2) = 2 t_ab^2 - 2 t_a t_b t_ab + 2 t_a^2 + 2 t_b^2 - 8
  for (int i = 0; i < n_copies; ++i) {
    for (int j = i + 1; j < n_copies; ++j) {
      TP r = TP::t(i, j) * TP::t(i, j).scaled(2.0) - TP::t(i) * TP::t(j) * TP::t(i, j).scaled(2.0) +
             TP::t(i) * TP::t(i).scaled(2.0) + TP::t(j) * TP::t(j).scaled(2.0) -
             TP::constant(8.0);
      out.push_back(r);
    }
  }
  // tr([a,b]c) = 2 t_abc - t_a t_bc - t_b t_ac - t_c t_ab + t_a t_b t_c
  for (int i = 0; i < n_copies; ++i) {
    for (int j = i + 1; j < n_copies; ++j) {
      for (int k = j + 1; k < n_copies; ++k) {
        TP r = TP::t(i, j, k).scaled(2.0) - TP::t(i) * TP::t(j, k) - TP::t(j) * TP::t(i, k) -
               TP::t(k) * TP::t(i, j) + TP::t(i) * TP::t(j) * TP::t(k);
        out.push_back(r);
      }
    }
  }
  return out;
}

std::vector<TracePolynomial> vertex_relations(int n_copies, const std::vector<int>& signs) {
  using TP = TracePolynomial;
  std::vector<TP> out = t_stratum_relations(n_copies);
  for (int i = 0; i < n_copies; ++i) {
    out.push_back(TP::t(i) - TP::constant(2.0 * signs[i]));
  }
  for (int i = 0; i < n_copies; ++i) {
    for (int j = i + 1; j < n_copies; ++j) {
      out.push_back(TP::t(i, j) - TP::constant(2.0 * signs[i] * signs[j]));
    }
  }
  return out;
}

namespace {

std::vector<FunctionVector> expand_family(const QuasiCharacterBasis& basis,
                                          const std::vector<TracePolynomial>& rels) {
  std::vector<FunctionVector> out;
  out.reserve(rels.size());
  for (const TracePolynomial& r : rels) {
    out.push_back(expand_trace_polynomial(basis, r, Side::Holomorphic));
  }
  return out;
}

}  // namespace

VanishingFamily t_vanishing_family(const QuasiCharacterBasis& basis) {
  return VanishingFamily{StratumLabel{OrbitTypeTag::Torus, {}, basis.n_copies},
                         expand_family(basis, t_stratum_relations(basis.n_copies))};
}

VanishingFamily vertex_vanishing_family(const QuasiCharacterBasis& basis,
                                        const std::vector<int>& signs) {
  return VanishingFamily{StratumLabel{OrbitTypeTag::Vertex, signs, basis.n_copies},
                         expand_family(basis, vertex_relations(basis.n_copies, signs))};
}

ConstraintProducts constraint_products(const QuasiCharacterBasis& basis,
                                       const std::vector<FunctionVector>& family,
                                       double loss_tol) {
  ConstraintProducts out;
  const int n_jobs = static_cast<int>(family.size()) * basis.dim;
  std::vector<FunctionVector> products(n_jobs);
  parallel_for(n_jobs, [&](std::size_t job) {
    int gen = static_cast<int>(job) / basis.dim;
    int alpha = static_cast<int>(job) % basis.dim;
    products[job] =
        multiply(basis, family[gen], FunctionVector::unit(basis, alpha), Side::Holomorphic);
  });
  for (int job = 0; job < n_jobs; ++job) {
    int gen = job / basis.dim;
    int alpha = job % basis.dim;
    const FunctionVector& prod = products[job];
    double mass = prod.coeffs.squaredNorm();
    double total = mass + prod.truncation_loss;
    if (total <= 1e-24) continue;  // identically zero product
    if (prod.truncation_loss > loss_tol * total) {
      out.exclusions.push_back({gen, alpha, prod.truncation_loss / total});
      continue;
    }
    out.vectors.push_back(prod.coeffs);
    out.labels.push_back({gen, alpha});
  }
  return out;
}

std::vector<MatX> constraint_projections(const ConstraintProducts& products) {
  std::vector<MatX> out;
  out.reserve(products.vectors.size());
  for (const VecX& v : products.vectors) {
    out.push_back(v * v.adjoint() / v.squaredNorm());
  }
  return out;
}

StratumProjection stratum_projection_from_family(const QuasiCharacterBasis& basis,
                                                 const VanishingFamily& family, double loss_tol,
                                                 double rank_tol) {
  ConstraintProducts products = constraint_products(basis, family.generators, loss_tol);
  if (products.vectors.empty()) {
    throw InsufficientCutoff("all constraint products exceeded the cutoff at j_max/2 = " +
                             std::to_string(basis.twice_j_max) + "/2");
  }
  ConstraintSystem cs;
  cs.algebra = MatrixAlgebra::full(basis.dim);
  cs.constraints = constraint_projections(products);
  TProcedureResult tp = t_procedure(cs, rank_tol);
  StratumProjection out;
  out.label = family.stratum;
  out.q = tp.q;
  out.p = tp.p;
  out.exclusions = products.exclusions;
  out.retained_products = static_cast<int>(products.vectors.size());
  return out;
}

StratumProjection stratum_projection_T(const QuasiCharacterBasis& basis, double loss_tol,
                                       double rank_tol) {
  if (basis.n_copies < 2) {
    throw ConfigError("the T stratum exists only for N >= 2");
  }
  return stratum_projection_from_family(basis, t_vanishing_family(basis), loss_tol, rank_tol);
}

double monotonicity_residual(const StratumProjection& coarse, const StratumProjection& fine) {
  MatX diff = coarse.p * fine.p - fine.p;
  Eigen::JacobiSVD<MatX> svd(diff);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

ObservableAlgebra observable_algebra(const QuasiCharacterBasis& basis,
                                     const StratumProjection& proj, double rank_tol) {
  if (proj.p.rows() != basis.dim) {
    throw DimensionMismatch("observable_algebra: projection does not match the truncation");
  }
  if ((proj.p * proj.p - proj.p).norm() > std::sqrt(rank_tol)) {
    throw NotConverged("observable_algebra: input is not a projection");
  }
  ObservableAlgebra out;
  out.label = proj.label;
  out.p = proj.p;
  double tr = proj.p.trace().real();
  out.rank = static_cast<int>(std::lround(tr));
  if (std::abs(tr - out.rank) > 1e-6) {
    throw NotConverged("observable_algebra: projection trace is not near an integer");
  }
  return out;
}

Complex tunneling_overlap(const QuasiCharacterBasis& basis, const std::vector<int>& signs_a,
                          const std::vector<int>& signs_b) {
  VecX pa = evaluation_vector(basis, vertex_point(signs_a));
  VecX pb = evaluation_vector(basis, vertex_point(signs_b));
  return pa.dot(pb) / (pa.norm() * pb.norm());
}

}  // namespace slgt
