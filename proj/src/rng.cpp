// SPDX-License-Identifier: Apache-2.0

#include "drs/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace drs {

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform_open() {
  // (i + 0.5) / 2^53 for i in [0, 2^53) never hits 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t SplitMix64::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % n;
}

double exponential_from_uniform(double u, double rate) {
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(u) / rate;
}

double sample_exponential(SplitMix64& rng, double rate) {
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return exponential_from_uniform(rng.uniform_open(), rate);
}

int sample_poisson(SplitMix64& rng, double mean) {
  if (mean <= 0.0) return 0;
  const double limit = std::exp(-mean);
  int k = 0;
  double product = rng.uniform_open();
  while (product > limit) {
    ++k;
    product *= rng.uniform_open();
  }
  return k;
}

}  // namespace drs
