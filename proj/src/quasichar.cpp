// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/quasichar.hpp"

#include "slgt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace slgt {

namespace {

// Kronecker product, first factor slowest.
MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatX kron_all(const std::vector<MatX>& mats) {
  MatX out = MatX::Identity(1, 1);
  for (const MatX& m : mats) out = kron(out, m);
  return out;
}

double block_scale(const std::vector<int>& tjs, double s) {
  double e = 0.0;
  for (int tj : tjs) e += 0.5 * s * tj * (tj + 2.0);
  return std::exp(-e);
}

}  // namespace

int QuasiCharacterBasis::block_of(int index) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (index < blocks[b].offset + static_cast<int>(blocks[b].tensors.size())) {
      return static_cast<int>(b);
    }
  }
  throw DimensionMismatch("basis index out of range");
}

SpinAssignment QuasiCharacterBasis::spins_of(int index) const {
  return SpinAssignment{blocks[block_of(index)].twice_spins};
}

QuasiCharacterBasis invariant_basis(int n_copies, int twice_j_max, double hbar, double beta) {
  if (n_copies < 1 || twice_j_max < 0) {
    throw ConfigError("invariant_basis: need N >= 1 and j_max >= 0");
  }
  QuasiCharacterBasis basis;
  basis.n_copies = n_copies;
  basis.twice_j_max = twice_j_max;
  basis.hbar = hbar;
  basis.beta = beta;
  const double s = basis.s_param();

  // enumerate spin assignments, sorted by (total spin, lexicographic)
  std::vector<std::vector<int>> assignments;
  std::vector<int> cur(n_copies, 0);
  while (true) {
    assignments.push_back(cur);
    int i = n_copies - 1;
    for (; i >= 0; --i) {
      if (cur[i] < twice_j_max) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
    }
    if (i < 0) break;
  }
  std::stable_sort(assignments.begin(), assignments.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int sa = std::accumulate(a.begin(), a.end(), 0);
                     int sb = std::accumulate(b.begin(), b.end(), 0);
                     if (sa != sb) return sa < sb;
                     return a < b;
                   });

  // blocks are independent; offsets are assigned afterwards in block order
  basis.blocks.resize(assignments.size());
  parallel_for(assignments.size(), [&](std::size_t bi) {
    const std::vector<int>& tjs = assignments[bi];
    BasisBlock block;
    block.twice_spins = tjs;
    block.total_dim = 1;
    for (int tj : tjs) block.total_dim *= tj + 1;
    block.sb_scale = block_scale(tjs, s);

    // sequential coupling: paths are (k_1 = j_1, k_2, ..., k_N) with each
    // k_i in the Clebsch-Gordan range of (k_{i-1}, j_i)
    struct Path {
      MatX isometry;  // (partial product dim) x (tk+1)
      int tk;
    };
    std::vector<Path> paths{{MatX::Identity(tjs[0] + 1, tjs[0] + 1), tjs[0]}};
    for (int i = 1; i < n_copies; ++i) {
      std::vector<Path> next;
      for (const Path& p : paths) {
        for (int tm : clebsch_range(p.tk, tjs[i])) {
          MatX c = cg_isometry(p.tk, tjs[i], tm).cast<Complex>();
          MatX iso = kron(p.isometry, MatX::Identity(tjs[i] + 1, tjs[i] + 1)) * c;
          next.push_back({std::move(iso), tm});
        }
      }
      paths = std::move(next);
    }
    // group paths by total spin, keep deterministic path order
    std::map<int, std::vector<int>> by_spin;
    for (std::size_t u = 0; u < paths.size(); ++u) {
      by_spin[paths[u].tk].push_back(static_cast<int>(u));
    }
    for (const auto& [tk, us] : by_spin) {
      double norm = std::sqrt(static_cast<double>(block.total_dim) / (tk + 1));
      for (int u : us) {
        for (int v : us) {
          block.tensors.push_back(norm * paths[u].isometry * paths[v].isometry.adjoint());
          block.labels.push_back({tk, u, v});
        }
      }
    }
    basis.blocks[bi] = std::move(block);
  });

  int offset = 0;
  for (BasisBlock& block : basis.blocks) {
    block.offset = offset;
    offset += static_cast<int>(block.tensors.size());
  }
  basis.dim = offset;
  return basis;
}

FunctionVector FunctionVector::unit(const QuasiCharacterBasis& basis, int index) {
  FunctionVector f;
  f.coeffs = VecX::Zero(basis.dim);
  f.coeffs[index] = 1.0;
  return f;
}

FunctionVector FunctionVector::zero(const QuasiCharacterBasis& basis) {
  FunctionVector f;
  f.coeffs = VecX::Zero(basis.dim);
  return f;
}

RealVecX scale_vector(const QuasiCharacterBasis& basis) {
  RealVecX s(basis.dim);
  for (const BasisBlock& b : basis.blocks) {
    for (std::size_t k = 0; k < b.tensors.size(); ++k) {
      s[b.offset + static_cast<int>(k)] = b.sb_scale;
    }
  }
  return s;
}

FunctionVector to_holomorphic(const QuasiCharacterBasis& basis, const FunctionVector& f) {
  FunctionVector out = f;
  RealVecX s = scale_vector(basis);
  for (int k = 0; k < basis.dim; ++k) out.coeffs[k] /= s[k];
  return out;
}

FunctionVector to_square_integrable(const QuasiCharacterBasis& basis, const FunctionVector& f) {
  FunctionVector out = f;
  RealVecX s = scale_vector(basis);
  for (int k = 0; k < basis.dim; ++k) out.coeffs[k] *= s[k];
  return out;
}

VecX evaluate_all(const QuasiCharacterBasis& basis, const std::vector<Mat2>& point, Side side) {
  if (static_cast<int>(point.size()) != basis.n_copies) {
    throw DimensionMismatch("evaluate_all: point arity mismatch");
  }
  // cache the irrep matrices per (copy, spin)
  std::vector<std::vector<MatX>> irreps(basis.n_copies);
  for (int c = 0; c < basis.n_copies; ++c) {
    irreps[c].resize(basis.twice_j_max + 1);
    for (int tj = 0; tj <= basis.twice_j_max; ++tj) {
      irreps[c][tj] = irrep_matrix(tj, point[c]);
    }
  }
  VecX values(basis.dim);
  for (const BasisBlock& block : basis.blocks) {
    std::vector<MatX> factors;
    factors.reserve(basis.n_copies);
    for (int c = 0; c < basis.n_copies; ++c) {
      factors.push_back(irreps[c][block.twice_spins[c]]);
    }
    MatX rep = kron_all(factors);
    double scale = (side == Side::Holomorphic) ? block.sb_scale : 1.0;
    for (std::size_t k = 0; k < block.tensors.size(); ++k) {
      values[block.offset + static_cast<int>(k)] = scale * (block.tensors[k] * rep).trace();
    }
  }
  return values;
}

Complex evaluate(const QuasiCharacterBasis& basis, const FunctionVector& f,
                 const std::vector<Mat2>& point, Side side) {
  VecX values = evaluate_all(basis, point, side);
  return values.cwiseProduct(f.coeffs).sum();
}

FunctionVector multiply(const QuasiCharacterBasis& basis, const FunctionVector& f,
                        const FunctionVector& g, Side side) {
  RealVecX scales = scale_vector(basis);
  VecX fc = f.coeffs;
  VecX gc = g.coeffs;
  if (side == Side::Holomorphic) {
    fc = fc.cwiseProduct(scales.cast<Complex>());
    gc = gc.cwiseProduct(scales.cast<Complex>());
  }

  FunctionVector out = FunctionVector::zero(basis);
  out.truncation_loss = f.truncation_loss + g.truncation_loss;

  // index of every in-cutoff block by its spin assignment
  std::map<std::vector<int>, int> block_index;
  for (std::size_t b = 0; b < basis.blocks.size(); ++b) {
    block_index[basis.blocks[b].twice_spins] = static_cast<int>(b);
  }

  const double s = basis.s_param();
  const int n = basis.n_copies;

  for (std::size_t bf = 0; bf < basis.blocks.size(); ++bf) {
    const BasisBlock& P = basis.blocks[bf];
    // combine the block component into a single tensor
    MatX F = MatX::Zero(P.total_dim, P.total_dim);
    bool has_f = false;
    for (std::size_t k = 0; k < P.tensors.size(); ++k) {
      Complex c = fc[P.offset + static_cast<int>(k)];
      if (c != 0.0) {
        F += c * P.tensors[k];
        has_f = true;
      }
    }
    if (!has_f) continue;
    for (std::size_t bg = 0; bg < basis.blocks.size(); ++bg) {
      const BasisBlock& Q = basis.blocks[bg];
      MatX G = MatX::Zero(Q.total_dim, Q.total_dim);
      bool has_g = false;
      for (std::size_t k = 0; k < Q.tensors.size(); ++k) {
        Complex c = gc[Q.offset + static_cast<int>(k)];
        if (c != 0.0) {
          G += c * Q.tensors[k];
          has_g = true;
        }
      }
      if (!has_g) continue;

      // Z = F (x) G reordered so the factors interleave per copy
      std::vector<int> fdims(n), gdims(n);
      for (int c = 0; c < n; ++c) {
        fdims[c] = P.twice_spins[c] + 1;
        gdims[c] = Q.twice_spins[c] + 1;
      }
      int big = P.total_dim * Q.total_dim;
      MatX Z(big, big);
      // strides: per-copy pair index (r_c, rho_c); flatten with copy 0 slowest,
      // within a copy the first-factor index slowest.
      auto flatten = [&](const std::vector<int>& rf, const std::vector<int>& rg) {
        int idx = 0;
        for (int c = 0; c < n; ++c) idx = (idx * fdims[c] + rf[c]) * gdims[c] + rg[c];
        return idx;
      };
      std::vector<int> rf(n, 0), rg(n, 0), cf(n, 0), cg(n, 0);
      auto advance = [](std::vector<int>& v, const std::vector<int>& dims) {
        for (int c = static_cast<int>(v.size()) - 1; c >= 0; --c) {
          if (++v[c] < dims[c]) return true;
          v[c] = 0;
        }
        return false;
      };
      // iterate rows
      do {
        do {
          int row = flatten(rf, rg);
          int frow = 0, grow = 0;
          for (int c = 0; c < n; ++c) {
            frow = frow * fdims[c] + rf[c];
            grow = grow * gdims[c] + rg[c];
          }
          std::fill(cf.begin(), cf.end(), 0);
          do {
            std::fill(cg.begin(), cg.end(), 0);
            do {
              int col = flatten(cf, cg);
              int fcol = 0, gcol = 0;
              for (int c = 0; c < n; ++c) {
                fcol = fcol * fdims[c] + cf[c];
                gcol = gcol * gdims[c] + cg[c];
              }
              Z(row, col) = F(frow, fcol) * G(grow, gcol);
            } while (advance(cg, gdims));
          } while (advance(cf, fdims));
        } while (advance(rg, gdims));
      } while (advance(rf, fdims));

      // per-copy Clebsch-Gordan ranges
      std::vector<std::vector<int>> ranges(n);
      for (int c = 0; c < n; ++c) {
        ranges[c] = clebsch_range(P.twice_spins[c], Q.twice_spins[c]);
      }
      std::vector<std::size_t> sel(n, 0);
      while (true) {
        std::vector<int> tms(n);
        for (int c = 0; c < n; ++c) tms[c] = ranges[c][sel[c]];
        std::vector<MatX> cgs;
        cgs.reserve(n);
        int dm = 1;
        for (int c = 0; c < n; ++c) {
          cgs.push_back(cg_isometry(P.twice_spins[c], Q.twice_spins[c], tms[c]).cast<Complex>());
          dm *= tms[c] + 1;
        }
        MatX C = kron_all(cgs);
        MatX B = C.adjoint() * Z * C;

        auto it = block_index.find(tms);
        bool in_cutoff = it != block_index.end();
        if (in_cutoff) {
          const BasisBlock& R = basis.blocks[it->second];
          for (std::size_t k = 0; k < R.tensors.size(); ++k) {
            Complex coef = (R.tensors[k].adjoint() * B).trace() / static_cast<double>(dm);
            double unscale = (side == Side::Holomorphic) ? 1.0 / R.sb_scale : 1.0;
            out.coeffs[R.offset + static_cast<int>(k)] += unscale * coef;
          }
        } else {
          double l2_mass = B.squaredNorm() / dm;
          if (side == Side::Holomorphic) {
            double sc = block_scale(tms, s);
            out.truncation_loss += l2_mass / (sc * sc);
          } else {
            out.truncation_loss += l2_mass;
          }
        }
        int c = n - 1;
        for (; c >= 0; --c) {
          if (++sel[c] < ranges[c].size()) break;
          sel[c] = 0;
        }
        if (c < 0) break;
      }
    }
  }
  return out;
}

TracePolynomial TracePolynomial::constant(Complex c) {
  TracePolynomial p;
  p.terms.push_back({c, TraceMonomial{}});
  return p;
}

TracePolynomial TracePolynomial::t(int i) {
  TracePolynomial p;
  p.terms.push_back({1.0, TraceMonomial{{TraceWord{{i}}}}});
  return p;
}

TracePolynomial TracePolynomial::t(int i, int j) {
  TracePolynomial p;
  p.terms.push_back({1.0, TraceMonomial{{TraceWord{{i, j}}}}});
  return p;
}

TracePolynomial TracePolynomial::t(int i, int j, int k) {
  TracePolynomial p;
  p.terms.push_back({1.0, TraceMonomial{{TraceWord{{i, j, k}}}}});
  return p;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
  TracePolynomial p = *this;
  p.terms.insert(p.terms.end(), o.terms.begin(), o.terms.end());
  return p;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
  return *this + o.scaled(-1.0);
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& o) const {
  TracePolynomial p;
  for (const auto& [ca, ma] : terms) {
    for (const auto& [cb, mb] : o.terms) {
      TraceMonomial m = ma;
      m.words.insert(m.words.end(), mb.words.begin(), mb.words.end());
      p.terms.push_back({ca * cb, m});
    }
  }
  return p;
}

TracePolynomial TracePolynomial::scaled(Complex c) const {
  TracePolynomial p = *this;
  for (auto& [coef, m] : p.terms) coef *= c;
  return p;
}

Complex evaluate_direct(const TracePolynomial& poly, const std::vector<Mat2>& point) {
  Complex acc = 0.0;
  for (const auto& [coef, mono] : poly.terms) {
    Complex prod = coef;
    for (const TraceWord& w : mono.words) {
      Mat2 m = Mat2::Identity();
      for (int c : w.copies) m = m * point[c];
      prod *= m.trace();
    }
    acc += prod;
  }
  return acc;
}

FunctionVector word_vector(const QuasiCharacterBasis& basis, const TraceWord& word) {
  const int n = basis.n_copies;
  for (int c : word.copies) {
    if (c < 0 || c >= n) throw DimensionMismatch("word_vector: copy index out of range");
  }
  if (basis.twice_j_max < 1) {
    // spin-1/2 content exceeds the cutoff: everything is lost
    FunctionVector out = FunctionVector::zero(basis);
    out.truncation_loss = 1.0;
    return out;
  }
  // target block: spin 1/2 on word copies, 0 elsewhere
  std::vector<int> tjs(n, 0);
  std::vector<int> sorted = word.copies;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 1; a < sorted.size(); ++a) {
    if (sorted[a] == sorted[a - 1]) {
      throw DimensionMismatch("word_vector: repeated copy in a trace word");
    }
  }
  for (int c : word.copies) tjs[c] = 1;

  int block_id = -1;
  for (std::size_t b = 0; b < basis.blocks.size(); ++b) {
    if (basis.blocks[b].twice_spins == tjs) {
      block_id = static_cast<int>(b);
      break;
    }
  }
  if (block_id < 0) throw DimensionMismatch("word_vector: block missing from the basis");
  const BasisBlock& block = basis.blocks[block_id];

  // Permutation operator on the spin-1/2 factors. With
  //   P(i, k) = prod_r delta(k_{pos[r]}, i_{pos[r-1]})   (cyclically in r)
  // the contraction tr(P . (x)_slots g_slot) telescopes to
  // tr(g_{w_1} g_{w_2} ... g_{w_l}).
  const int l = static_cast<int>(word.copies.size());
  const int dim = 1 << l;
  // position of each word copy among the sorted spin-1/2 slots
  std::vector<int> pos(l);
  for (int r = 0; r < l; ++r) {
    pos[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word.copies[r]) -
                              sorted.begin());
  }
  MatX P = MatX::Zero(dim, dim);
  auto bit = [&](int idx, int slot) { return (idx >> (l - 1 - slot)) & 1; };
  for (int i = 0; i < dim; ++i) {
    std::vector<int> kbits(l, 0);
    for (int r = 0; r < l; ++r) {
      int prev = (r + l - 1) % l;
      kbits[pos[r]] = bit(i, pos[prev]);
    }
    int k = 0;
    for (int slot = 0; slot < l; ++slot) k = (k << 1) | kbits[slot];
    P(i, k) = 1.0;
  }

  FunctionVector out = FunctionVector::zero(basis);
  for (std::size_t t = 0; t < block.tensors.size(); ++t) {
    Complex coef = (block.tensors[t].adjoint() * P).trace() / static_cast<double>(block.total_dim);
    out.coeffs[block.offset + static_cast<int>(t)] = coef;
  }
  return out;
}

FunctionVector expand_trace_polynomial(const QuasiCharacterBasis& basis,
                                       const TracePolynomial& poly, Side side) {
  // assemble on the square-integrable side, convert at the end if needed
  FunctionVector acc = FunctionVector::zero(basis);
  for (const auto& [coef, mono] : poly.terms) {
    FunctionVector term = FunctionVector::zero(basis);
    term.coeffs[0] = 1.0;  // constant function
    for (const TraceWord& w : mono.words) {
      FunctionVector wv = word_vector(basis, w);
      term = multiply(basis, term, wv, Side::SquareIntegrable);
    }
    acc.coeffs += coef * term.coeffs;
    acc.truncation_loss += std::norm(coef) * term.truncation_loss;
  }
  if (side == Side::Holomorphic) {
    FunctionVector out = to_holomorphic(basis, acc);
    out.truncation_loss = acc.truncation_loss;
    return out;
  }
  return acc;
}

}  // namespace slgt
