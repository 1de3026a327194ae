// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/serialize.hpp"

#include <fstream>
#include <sstream>

namespace slgt {

Json matrix_to_json(const MatX& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return out;
}

MatX matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols) {
    throw ConfigError("matrix entry count mismatch");
  }
  MatX m(rows, cols);
  int k = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c, ++k) {
      const Json& e = j[k];
      if (!e.is_array() || e.size() != 2) throw ConfigError("matrix entries must be [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json vector_to_json(const VecX& v) {
  Json out = Json::array();
  for (int k = 0; k < v.size(); ++k) {
    out.push_back(Json::array({v[k].real(), v[k].imag()}));
  }
  return out;
}

VecX vector_from_json(const Json& j) {
  VecX v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    v[static_cast<int>(k)] = Complex(j[k][0].get<double>(), j[k][1].get<double>());
  }
  return v;
}

Json constraint_system_to_json(const ConstraintSystem& cs) {
  Json out;
  out["blocks"] = cs.algebra.block_sizes;
  Json cons = Json::array();
  for (const MatX& c : cs.constraints) cons.push_back(matrix_to_json(c));
  out["constraints"] = cons;
  return out;
}

ConstraintSystem constraint_system_from_json(const Json& j) {
  ConstraintSystem cs;
  if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty()) {
    throw ConfigError("constraint file needs a nonempty 'blocks' array");
  }
  for (const Json& b : j["blocks"]) cs.algebra.block_sizes.push_back(b.get<int>());
  const int d = cs.algebra.dim();
  if (j.contains("constraints")) {
    for (const Json& c : j["constraints"]) {
      cs.constraints.push_back(matrix_from_json(c, d, d));
    }
  }
  return cs;
}

Json tproc_result_to_json(const TProcedureResult& r) {
  Json out;
  out["q"] = matrix_to_json(r.q);
  out["p"] = matrix_to_json(r.p);
  out["dim_left_ideal"] = r.dim_left_ideal();
  out["dim_hereditary"] = r.dim_hereditary();
  out["dim_observables"] = r.dim_observables();
  out["dim_physical"] = r.dim_physical();
  out["first_class"] = r.first_class;
  Json dirac = Json::array();
  for (const VecX& v : r.dirac_states) dirac.push_back(vector_to_json(v));
  out["dirac_basis"] = dirac;
  return out;
}

Json basis_to_json(const QuasiCharacterBasis& basis) {
  Json out;
  out["version"] = 1;
  out["convention"] = QuasiCharacterBasis::kConventionTag;
  out["n"] = basis.n_copies;
  out["twice_j_max"] = basis.twice_j_max;
  out["hbar"] = basis.hbar;
  out["beta"] = basis.beta;
  out["s"] = basis.s_param();
  Json blocks = Json::array();
  for (const BasisBlock& b : basis.blocks) {
    Json jb;
    jb["twice_spins"] = b.twice_spins;
    jb["offset"] = b.offset;
    jb["sb_scale"] = b.sb_scale;
    Json labels = Json::array();
    for (const auto& l : b.labels) labels.push_back(Json::array({l[0], l[1], l[2]}));
    jb["labels"] = labels;
    Json tensors = Json::array();
    for (const MatX& t : b.tensors) tensors.push_back(matrix_to_json(t));
    jb["tensors"] = tensors;
    blocks.push_back(jb);
  }
  out["blocks"] = blocks;
  return out;
}

QuasiCharacterBasis basis_from_json(const Json& j) {
  if (j.value("version", 0) != 1 ||
      j.value("convention", "") != std::string(QuasiCharacterBasis::kConventionTag)) {
    throw ConfigError("basis cache has an unknown version or convention tag");
  }
  QuasiCharacterBasis basis;
  basis.n_copies = j.at("n").get<int>();
  basis.twice_j_max = j.at("twice_j_max").get<int>();
  basis.hbar = j.at("hbar").get<double>();
  basis.beta = j.at("beta").get<double>();
  int dim = 0;
  for (const Json& jb : j.at("blocks")) {
    BasisBlock block;
    for (const Json& s : jb.at("twice_spins")) block.twice_spins.push_back(s.get<int>());
    block.total_dim = 1;
    for (int tj : block.twice_spins) block.total_dim *= tj + 1;
    block.offset = jb.at("offset").get<int>();
    block.sb_scale = jb.at("sb_scale").get<double>();
    for (const Json& l : jb.at("labels")) {
      block.labels.push_back({l[0].get<int>(), l[1].get<int>(), l[2].get<int>()});
    }
    for (const Json& t : jb.at("tensors")) {
      block.tensors.push_back(matrix_from_json(t, block.total_dim, block.total_dim));
    }
    dim += static_cast<int>(block.tensors.size());
    basis.blocks.push_back(std::move(block));
  }
  basis.dim = dim;
  return basis;
}

Json phase_point_to_json(const PhasePoint& p) {
  Json links = Json::array();
  for (const auto& [a, A] : p.links) {
    Json l;
    l["a"] = matrix_to_json(a.m);
    l["A"] = matrix_to_json(A.m);
    links.push_back(l);
  }
  Json out;
  out["links"] = links;
  return out;
}

PhasePoint phase_point_from_json(const Json& j) {
  PhasePoint p;
  for (const Json& l : j.at("links")) {
    Mat2 a = matrix_from_json(l.at("a"), 2, 2);
    Mat2 A = matrix_from_json(l.at("A"), 2, 2);
    p.links.push_back({GroupElement{a}, AlgebraElement{A}});
  }
  return p;
}

Json stratum_projection_to_json(const StratumProjection& sp) {
  Json out;
  out["stratum"] = to_string(sp.label);
  out["dim"] = sp.dim();
  out["p"] = matrix_to_json(sp.p);
  out["q"] = matrix_to_json(sp.q);
  out["retained_products"] = sp.retained_products;
  Json ex = Json::array();
  for (const TruncationEvent& e : sp.exclusions) {
    ex.push_back(Json{{"generator", e.generator}, {"alpha", e.alpha},
                      {"relative_loss", e.relative_loss}});
  }
  out["exclusions"] = ex;
  return out;
}

std::string canonical_dump(const Json& j) {
  // nlohmann objects already iterate in sorted key order
  return j.dump(2);
}

std::string config_hash(const Json& j) {
  std::string s = canonical_dump(j);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path + " for writing");
  f << content;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open " + path);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return j;
}

}  // namespace slgt
