// SPDX-License-Identifier: Apache-2.0
//
// SplitMix64 generator and the two samplers the traffic model needs. The state
// advance and output mix are the reference SplitMix64 constants, so traces are
// reproducible bit-for-bit on any platform.

#pragma once

#include <cstdint>

namespace drs {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double strictly inside (0, 1), 53-bit resolution.
  double uniform_open();

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);

  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

/// Inverse-CDF exponential: -ln(u) / rate. rate == 0 yields +inf.
double exponential_from_uniform(double u, double rate);
double sample_exponential(SplitMix64& rng, double rate);

/// Knuth's product-of-uniforms Poisson sampler. mean == 0 yields 0 without
/// consuming randomness.
int sample_poisson(SplitMix64& rng, double mean);

}  // namespace drs
