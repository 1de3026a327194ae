// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/tproc.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <numeric>

namespace slgt {

int MatrixAlgebra::dim() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

int MatrixAlgebra::block_offset(int b) const {
  int off = 0;
  for (int i = 0; i < b; ++i) off += block_sizes[i];
  return off;
}

int MatrixAlgebra::algebra_dimension() const {
  int d = 0;
  for (int s : block_sizes) d += s * s;
  return d;
}

bool MatrixAlgebra::contains(const MatX& m, double tol) const {
  if (m.rows() != dim() || m.cols() != dim()) return false;
  return (m - project_member(m)).norm() <= tol * std::max(1.0, m.norm());
}

MatX MatrixAlgebra::project_member(const MatX& m) const {
  MatX out = MatX::Zero(dim(), dim());
  int off = 0;
  for (int s : block_sizes) {
    out.block(off, off, s, s) = m.block(off, off, s, s);
    off += s;
  }
  return out;
}

void ConstraintSystem::validate(double tol) const {
  if (algebra.block_sizes.empty()) throw ConfigError("empty block structure");
  for (int s : algebra.block_sizes) {
    if (s <= 0) throw ConfigError("non-positive block size");
  }
  for (const MatX& c : constraints) {
    if (c.rows() != algebra.dim() || c.cols() != algebra.dim()) {
      throw DimensionMismatch("constraint size does not match the algebra");
    }
    if (!algebra.contains(c, tol)) {
      throw ConfigError("constraint has off-block entries");
    }
    // self-adjointness as a set: the adjoint must lie in the span
    bool found = false;
    for (const MatX& c2 : constraints) {
      if ((c.adjoint() - c2).norm() <= tol * std::max(1.0, c.norm())) {
        found = true;
        break;
      }
    }
    if (!found) {
      // fall back to a span test
      std::vector<MatX> on = orthonormalize_matrices(constraints, 1e-12);
      MatX r = c.adjoint();
      for (const MatX& u : on) {
        Complex coef = (u.adjoint() * r).trace();
        r -= coef * u;
      }
      if (r.norm() > tol * std::max(1.0, c.norm())) {
        throw ConfigError("constraint set is not self-adjoint");
      }
    }
  }
}

std::vector<MatX> orthonormalize_matrices(const std::vector<MatX>& mats, double rank_tol) {
  if (mats.empty()) return {};
  const int rows = static_cast<int>(mats[0].rows());
  const int cols = static_cast<int>(mats[0].cols());
  MatX stacked(rows * cols, static_cast<int>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    stacked.col(static_cast<int>(k)) = Eigen::Map<const VecX>(mats[k].data(), rows * cols);
  }
  Eigen::JacobiSVD<MatX> svd(stacked, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  std::vector<MatX> out;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] > rank_tol * std::max(1.0, smax)) {
      out.push_back(Eigen::Map<const MatX>(svd.matrixU().col(k).data(), rows, cols));
    }
  }
  return out;
}

namespace {

/// Orthonormal basis of the joint column space of {c, c^dag} blocks.
MatX joint_range_basis(const std::vector<MatX>& constraints, int off, int s, double rank_tol) {
  if (constraints.empty()) return MatX::Zero(s, 0);
  MatX stacked(s, 2 * s * static_cast<int>(constraints.size()));
  int col = 0;
  for (const MatX& c : constraints) {
    stacked.block(0, col, s, s) = c.block(off, off, s, s);
    stacked.block(0, col + s, s, s) = c.block(off, off, s, s).adjoint();
    col += 2 * s;
  }
  Eigen::JacobiSVD<MatX> svd(stacked, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] > rank_tol * std::max(1.0, smax)) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

MatX embed(const MatX& small, int off, int s, int d) {
  MatX out = MatX::Zero(d, d);
  out.block(off, off, s, s) = small;
  return out;
}

}  // namespace

TProcedureResult t_procedure(const ConstraintSystem& cs, double rank_tol) {
  TProcedureResult res;
  res.algebra = cs.algebra;
  const int d = cs.algebra.dim();
  res.q = MatX::Zero(d, d);

  int off = 0;
  for (int s : cs.algebra.block_sizes) {
    MatX w = joint_range_basis(cs.constraints, off, s, rank_tol);  // s x r isometry
    const int r = static_cast<int>(w.cols());
    MatX qb = w * w.adjoint();
    res.q.block(off, off, s, s) = qb;

    // complement basis of the block
    MatX full(s, s);
    full.setIdentity();
    MatX proj = full - qb;
    Eigen::SelfAdjointEigenSolver<MatX> es(proj);
    MatX wperp(s, s - r);
    int col = 0;
    for (int k = 0; k < s; ++k) {
      if (es.eigenvalues()[k] > 0.5) wperp.col(col++) = es.eigenvectors().col(k);
    }

    // left ideal:  e_i w_l^dag   (all matrices with rows in the joint row space)
    for (int i = 0; i < s; ++i) {
      for (int l = 0; l < r; ++l) {
        MatX m = MatX::Zero(s, s);
        m.row(i) = w.col(l).adjoint();
        res.left_ideal_basis.push_back(embed(m, off, s, d));
      }
    }
    // hereditary:  w_k w_l^dag
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        res.hereditary_basis.push_back(embed(w.col(k) * w.col(l).adjoint(), off, s, d));
      }
    }
    // observables: the commutant of q_b inside the block
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        res.observable_basis.push_back(embed(w.col(k) * w.col(l).adjoint(), off, s, d));
      }
    }
    for (int k = 0; k < s - r; ++k) {
      for (int l = 0; l < s - r; ++l) {
        MatX m = wperp.col(k) * wperp.col(l).adjoint();
        res.observable_basis.push_back(embed(m, off, s, d));
        res.physical_basis.push_back(embed(m, off, s, d));
      }
    }
    // Dirac vectors: kernel of q restricted to this block
    for (int k = 0; k < s - r; ++k) {
      VecX v = VecX::Zero(d);
      v.segment(off, s) = wperp.col(k);
      res.dirac_states.push_back(v);
    }
    off += s;
  }
  res.p = MatX::Identity(d, d) - res.q;
  res.first_class = !res.dirac_states.empty();
  return res;
}

std::vector<MatX> weak_commutant_by_definition(const ConstraintSystem& cs,
                                               const TProcedureResult& result,
                                               double rank_tol) {
  // Coordinates: the algebra's block entries flattened into a vector of
  // length sum s_b^2.  Constraint rows: for every c, the component of [F, c]
  // orthogonal to span(hereditary) must vanish.
  const MatrixAlgebra& alg = cs.algebra;
  const int d = alg.dim();
  const int adim = alg.algebra_dimension();

  std::vector<MatX> basis;  // algebra coordinate basis
  basis.reserve(adim);
  int off = 0;
  for (int s : alg.block_sizes) {
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        MatX e = MatX::Zero(d, d);
        e(off + r, off + c) = 1.0;
        basis.push_back(e);
      }
    }
    off += s;
  }

  auto project_out_hereditary = [&](const MatX& m) {
    MatX r = m;
    for (const MatX& h : result.hereditary_basis) {
      Complex coef = (h.adjoint() * r).trace();
      r -= coef * h;
    }
    return r;
  };

  MatX system(static_cast<int>(cs.constraints.size()) * d * d, adim);
  for (std::size_t ci = 0; ci < cs.constraints.size(); ++ci) {
    const MatX& c = cs.constraints[ci];
    for (int k = 0; k < adim; ++k) {
      MatX comm = basis[k] * c - c * basis[k];
      MatX resid = project_out_hereditary(comm);
      system.block(static_cast<int>(ci) * d * d, k, d * d, 1) =
          Eigen::Map<const VecX>(resid.data(), d * d);
    }
  }
  if (cs.constraints.empty()) {
    return orthonormalize_matrices(basis, rank_tol);
  }
  Eigen::JacobiSVD<MatX> svd(system, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()[k] > rank_tol * std::max(1.0, smax)) ++rank;
  }
  std::vector<MatX> out;
  for (int k = rank; k < adim; ++k) {
    MatX m = MatX::Zero(d, d);
    for (int l = 0; l < adim; ++l) m += svd.matrixV()(l, k) * basis[l];
    out.push_back(m);
  }
  return orthonormalize_matrices(out, rank_tol);
}

std::vector<MatX> cstar_generated(const ConstraintSystem& cs, double rank_tol) {
  if (cs.constraints.empty()) return {};
  std::vector<MatX> gen = cs.constraints;
  for (const MatX& c : cs.constraints) gen.push_back(c.adjoint());
  std::vector<MatX> span = orthonormalize_matrices(gen, rank_tol);
  while (true) {
    std::vector<MatX> bigger = span;
    for (const MatX& a : span) {
      for (const MatX& b : span) bigger.push_back(a * b);
    }
    std::vector<MatX> next = orthonormalize_matrices(bigger, rank_tol);
    if (next.size() == span.size()) return next;
    span = std::move(next);
  }
}

bool same_span(const std::vector<MatX>& a, const std::vector<MatX>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const MatX& m : a) {
    MatX r = m;
    for (const MatX& u : b) {
      Complex coef = (u.adjoint() * r).trace();
      r -= coef * u;
    }
    if (r.norm() > tol) return false;
  }
  return true;
}

}  // namespace slgt
