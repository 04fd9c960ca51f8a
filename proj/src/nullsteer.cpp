// SPDX-License-Identifier: Apache-2.0

#include "drs/nullsteer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace drs {

const char* to_string(NullMode mode) {
  switch (mode) {
    case NullMode::analytic_null:
      return "analytic-null";
    case NullMode::fallback_min:
      return "fallback-min";
    case NullMode::none:
    default:
      return "none";
  }
}

double HarmonicCoefficients::amplitude() const { return std::hypot(p, q); }

double psi_interference(const NullSteerInput& input, double alpha) {
  const AngularCoords interferer{input.interferer.theta, input.interferer.phi + alpha};
  const AngularCoords receiver{input.receiver.theta, input.receiver.phi + alpha};
  return psi(input.ris, direction_sums(interferer, receiver));
}

HarmonicCoefficients harmonic_coefficients(const NullSteerInput& input) {
  const DirectionSums u = direction_sums(input.interferer, input.receiver);
  return {u.ux, u.uy};
}

namespace {

// Appends every alpha in [-bound, bound] with amplitude * cos(alpha + shift) equal
// to k * spacing for an admissible k.
void solve_axis(double amplitude, double shift, double spacing, int count, double bound,
                std::vector<double>& out) {
  if (count < 2 || amplitude <= 0.0) return;
  const int k_max = static_cast<int>(std::floor(amplitude / spacing));
  for (int k = -k_max; k <= k_max; ++k) {
    if (k == 0 || k % count == 0) continue;
    const double c = std::clamp(k * spacing / amplitude, -1.0, 1.0);
    const double base = std::acos(c);
    for (double branch : {base, -base}) {
      const double alpha = wrap_angle(branch - shift);
      if (std::abs(alpha) <= bound) out.push_back(alpha);
    }
  }
}

}  // namespace

std::vector<double> candidate_alphas(const NullSteerInput& input) {
  const HarmonicCoefficients h = harmonic_coefficients(input);
  const double amplitude = h.amplitude();
  std::vector<double> raw;
  if (amplitude == 0.0) return raw;

  const RisConfig& ris = input.ris;
  solve_axis(amplitude, std::atan2(h.q, h.p), ris.wavelength / (ris.m_rows * ris.dx), ris.m_rows,
             input.alpha_bound, raw);
  solve_axis(amplitude, -std::atan2(h.p, h.q), ris.wavelength / (ris.n_cols * ris.dy), ris.n_cols,
             input.alpha_bound, raw);

  std::vector<double> out;
  out.reserve(raw.size());
  for (double alpha : raw) {
    if (std::abs(psi_interference(input, alpha)) <= kNullResidualTolerance) out.push_back(alpha);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NullSolution select_rotation(const NullSteerInput& input) {
  const std::vector<double> candidates = candidate_alphas(input);
  if (!candidates.empty()) {
    // Smallest rotation wins; on a tie the more negative one (first in sorted order).
    constexpr double tie = 1e-12;
    double best = candidates.front();
    for (double alpha : candidates) {
      if (std::abs(alpha) < std::abs(best) - tie) best = alpha;
    }
    return {best, std::abs(psi_interference(input, best)), NullMode::analytic_null};
  }

  const double at_zero = std::abs(psi_interference(input, 0.0));
  NullSolution best{0.0, at_zero, NullMode::none};
  const double bound = input.alpha_bound;
  for (int i = 0; i < kFallbackGridPoints; ++i) {
    const double alpha = -bound + 2.0 * bound * i / (kFallbackGridPoints - 1);
    const double residual = std::abs(psi_interference(input, alpha));
    if (residual < best.residual) best = {alpha, residual, NullMode::fallback_min};
  }
  if (at_zero - best.residual < 1e-12) return {0.0, at_zero, NullMode::none};
  return best;
}

}  // namespace drs
