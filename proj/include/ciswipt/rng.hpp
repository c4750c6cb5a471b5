// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ciswipt {

/// Deterministic random stream. Raw bits come from mt19937_64; uniforms are
/// built by 53-bit mantissa extraction and normals by Box-Muller, so the
/// produced sequences are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform on (0, 1], safe as a log argument.
  double uniform_open();

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Circularly symmetric complex Gaussian with the given total variance.
  std::complex<double> cgaussian(double variance);

  /// Uniform draw from {0, ..., bound-1} by rejection, bound >= 1.
  int uniform_int(int bound);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Decorrelated child seed for a numbered substream (channel instance,
/// Monte-Carlo block, ...) of a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace ciswipt
