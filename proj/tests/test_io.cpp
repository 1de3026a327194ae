// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slgt/runconfig.hpp"
#include "slgt/serialize.hpp"

using namespace slgt;

TEST_CASE("matrix json round trip") {
  Rng rng(211);
  MatX m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = Complex(rng.gaussian(), rng.gaussian());
  }
  MatX back = matrix_from_json(matrix_to_json(m), 3, 3);
  CHECK((m - back).norm() == 0.0);

  VecX v(4);
  for (int k = 0; k < 4; ++k) v[k] = Complex(rng.gaussian(), rng.gaussian());
  CHECK((vector_from_json(vector_to_json(v)) - v).norm() == 0.0);
}

TEST_CASE("constraint system json schema") {
  Json j;
  j["blocks"] = Json::array({2});
  j["constraints"] = Json::array();
  Json c = Json::array();
  c.push_back(Json::array({1.0, 0.0}));
  c.push_back(Json::array({0.0, 0.0}));
  c.push_back(Json::array({0.0, 0.0}));
  c.push_back(Json::array({0.0, 0.0}));
  j["constraints"].push_back(c);
  ConstraintSystem cs = constraint_system_from_json(j);
  CHECK(cs.algebra.dim() == 2);
  REQUIRE(cs.constraints.size() == 1);
  CHECK(std::abs(cs.constraints[0](0, 0) - 1.0) < 1e-15);

  Json round = constraint_system_to_json(cs);
  ConstraintSystem cs2 = constraint_system_from_json(round);
  CHECK((cs.constraints[0] - cs2.constraints[0]).norm() == 0.0);

  Json bad;
  bad["blocks"] = Json::array();
  CHECK_THROWS_AS(constraint_system_from_json(bad), ConfigError);
}

TEST_CASE("basis cache round trip preserves everything") {
  QuasiCharacterBasis basis = invariant_basis(2, 3, 0.2, 1.1);
  Json j = basis_to_json(basis);
  QuasiCharacterBasis back = basis_from_json(j);
  CHECK(back.n_copies == basis.n_copies);
  CHECK(back.twice_j_max == basis.twice_j_max);
  CHECK(back.dim == basis.dim);
  REQUIRE(back.blocks.size() == basis.blocks.size());
  for (std::size_t b = 0; b < basis.blocks.size(); ++b) {
    CHECK(back.blocks[b].twice_spins == basis.blocks[b].twice_spins);
    CHECK(back.blocks[b].sb_scale == basis.blocks[b].sb_scale);
    REQUIRE(back.blocks[b].tensors.size() == basis.blocks[b].tensors.size());
    for (std::size_t k = 0; k < basis.blocks[b].tensors.size(); ++k) {
      CHECK((back.blocks[b].tensors[k] - basis.blocks[b].tensors[k]).norm() == 0.0);
    }
  }
  // canonical dump is reproducible
  CHECK(canonical_dump(j) == canonical_dump(basis_to_json(back)));

  Json wrong = j;
  wrong["convention"] = "something-else";
  CHECK_THROWS_AS(basis_from_json(wrong), ConfigError);
}

TEST_CASE("phase point json round trip") {
  Rng rng(223);
  PhasePoint p;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d x;
    for (int k = 0; k < 3; ++k) x[k] = rng.gaussian();
    p.links.push_back({haar_sample(rng), AlgebraElement{su2_from_coordinates(x)}});
  }
  PhasePoint back = phase_point_from_json(phase_point_to_json(p));
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK((back.links[i].first.m - p.links[i].first.m).norm() == 0.0);
    CHECK((back.links[i].second.m - p.links[i].second.m).norm() == 0.0);
  }
}

TEST_CASE("run config: parsing, overrides, required fields") {
  Json j;
  j["N"] = 2;
  j["j_max"] = 1.5;
  j["seed"] = 7;
  RunConfig cfg = config_from_json(j);
  CHECK(cfg.n_links == 2);
  CHECK(cfg.twice_j_max == 3);
  CHECK(cfg.seed == 7);
  CHECK_THROWS_AS(cfg.require_hbar(), ConfigError);  // no silent defaults
  CHECK_THROWS_AS(cfg.require_beta(), ConfigError);

  j["hbar"] = 0.1;
  j["beta"] = 1.0;
  cfg = config_from_json(j);
  CHECK(cfg.require_hbar() == 0.1);

  CHECK(parse_twice_spin(Json("3/2")) == 3);
  CHECK(parse_twice_spin(Json(2.0)) == 4);
  CHECK_THROWS_AS(parse_twice_spin(Json(0.3)), ConfigError);

  Json bad = j;
  bad["lambda"] = -2.0;
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);

  // hash is stable and sensitive
  std::string h1 = config_hash(cfg.to_json());
  CHECK(h1 == config_hash(config_from_json(j).to_json()));
  j["seed"] = 8;
  CHECK(h1 != config_hash(config_from_json(j).to_json()));
}
