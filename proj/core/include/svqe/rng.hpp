// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_RNG_HPP
#define SVQE_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace svqe {

/// splitmix64 step; also used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministically mixes a base seed with up to three stream tags.
/// Every randomized operation takes its seed through this, so results are
/// reproducible across platforms and independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = base;
  (void)splitmix64(s);
  s ^= 0x6a09e667f3bcc909ULL + a;
  (void)splitmix64(s);
  s ^= 0xbb67ae8584caa73bULL + b;
  (void)splitmix64(s);
  s ^= 0x3c6ef372fe94f82bULL + c;
  return splitmix64(s);
}

/// xoshiro256++ with Box-Muller normals.
///
/// Self-contained so that streams are bit-stable across standard-library
/// versions (std::normal_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Normal redrawn until the sample is strictly positive.
  double positive_normal(double mean, double stddev) {
    double x = normal(mean, stddev);
    while (x <= 0.0) x = normal(mean, stddev);
    return x;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace svqe

#endif  // SVQE_RNG_HPP
