// SPDX-License-Identifier: Apache-2.0

#include "ciswipt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ciswipt {

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() { return 1.0 - uniform(); }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

std::complex<double> Rng::cgaussian(double variance) {
  const double sigma = std::sqrt(variance / 2.0);
  const double re = sigma * gaussian();
  const double im = sigma * gaussian();
  return {re, im};
}

int Rng::uniform_int(int bound) {
  if (bound < 1) throw std::invalid_argument("uniform_int: bound must be >= 1");
  const std::uint64_t span = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t raw;
  do {
    raw = eng_();
  } while (raw >= limit);
  return static_cast<int>(raw % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over the pair; avoids correlated mt19937_64 states
  // for adjacent stream indices.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ciswipt
