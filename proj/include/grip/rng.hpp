// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_RNG_HPP
#define GRIP_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace grip {

/// Philox4x32-10 keyed counter permutation (Salmon et al., SC'11).
///
/// Counter-based generation is what makes every experiment in this library
/// reproducible bit-for-bit across platforms and trial orderings: a draw is a
/// pure function of (key, counter), so independent trials simply use disjoint
/// counter blocks instead of sharing mutable generator state.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
      const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
      const std::uint32_t hi0 = std::uint32_t(p0 >> 32);
      const std::uint32_t lo0 = std::uint32_t(p0);
      const std::uint32_t hi1 = std::uint32_t(p1 >> 32);
      const std::uint32_t lo1 = std::uint32_t(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

/// Random stream over the Philox permutation.
///
/// The 64-bit seed forms the key; `stream` selects one of 2^64 independent
/// substreams (counter words 2..3), each 2^64 blocks long (counter words
/// 0..1). Uniforms use 53 high bits of two outputs; normals use Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
        ctr_{0, 0, std::uint32_t(stream), std::uint32_t(stream >> 32)} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  /// Standard normal via Box-Muller; second value of each pair is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Circularly symmetric complex normal with E|z|^2 = 1.
  std::complex<double> normal_complex() {
    const double sigma = std::numbers::sqrt2 / 2.0;
    const double re = normal() * sigma;
    const double im = normal() * sigma;
    return {re, im};
  }

  double rademacher() { return (next_u32() & 1u) ? 1.0 : -1.0; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection from the top to avoid modulo bias.
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

 private:
  void refill() {
    buf_ = Philox4x32::block(ctr_, key_);
    pos_ = 0;
    if (++ctr_[0] == 0) ++ctr_[1];  // 64-bit block counter
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Mixes (seed, a, b, c) into a fresh 64-bit subseed through one Philox
/// block. Used to hand every trial of an experiment its own seed so results
/// do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  const auto out = Philox4x32::block(
      {std::uint32_t(a), std::uint32_t(a >> 32),
       std::uint32_t(b) ^ std::uint32_t(c >> 32),
       std::uint32_t(b >> 32) ^ std::uint32_t(c)},
      {std::uint32_t(seed), std::uint32_t(seed >> 32)});
  return (std::uint64_t(out[0]) << 32) | out[1];
}

}  // namespace grip

#endif  // GRIP_RNG_HPP
