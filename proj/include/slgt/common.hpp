// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slgt {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using RealMatX = Eigen::MatrixXd;
using RealVecX = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerances used across the library. All are overridable through RunConfig.
struct Tolerances {
  double unit = 1e-12;        // unitarity / algebra-membership checks
  double round_trip = 1e-10;  // polar round trip
  double rank = 1e-10;        // singular-value cutoff for rank decisions
  double gram = 1e-9;         // basis orthonormality
  double eval = 1e-10;        // vanishing of functions at stratum samples
  double loss = 1e-6;         // relative truncation-loss gate for constraint products
  double convergence = 1e-8;  // ground-energy shift between cutoffs
};

struct SingularInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientCutoff : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic xoshiro256++ generator. Parallel workers derive independent
/// streams via split(); nothing here depends on libstdc++ distributions, so
/// identical seeds give identical output on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the full state
    std::uint64_t x = seed;
    for (auto& si : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      si = z ^ (z >> 31);
    }
    has_cached_gaussian_ = false;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (has_cached_gaussian_) {
      has_cached_gaussian_ = false;
      return cached_gaussian_;
    }
    double u1 = 1.0 - uniform();  // (0,1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    cached_gaussian_ = r * std::sin(a);
    has_cached_gaussian_ = true;
    return r * std::cos(a);
  }

  /// Independent stream for worker `stream`; deterministic in (this, stream).
  Rng split(std::uint64_t stream) const {
    std::uint64_t z = s_[0] ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return Rng(z);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
  bool has_cached_gaussian_ = false;
  double cached_gaussian_ = 0.0;
};

}  // namespace slgt
