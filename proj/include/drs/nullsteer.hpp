// SPDX-License-Identifier: Apache-2.0
//
// Analytic yaw selection that places the interferer/receiver direction pair on
// a zero of the surface array factor.
//
// Rotating the surface so every local azimuth shifts by +alpha turns the
// direction-cosine sums into pure harmonics of alpha:
//
//   u_x(alpha) = P cos(alpha) - Q sin(alpha) = R cos(alpha + atan2(Q, P))
//   u_y(alpha) = Q cos(alpha) + P sin(alpha) = R cos(alpha - atan2(P, Q))
//
// with P, Q the sums at alpha = 0 and R = hypot(P, Q). The row kernel vanishes
// when u_x = k * lambda / (M dx) for integer k not a multiple of M (multiples
// of M are grating lobes, not nulls); likewise for columns.

#pragma once

#include <vector>

#include "drs/channel.hpp"
#include "drs/geometry.hpp"

namespace drs {

struct NullSteerInput {
  AngularCoords interferer;
  AngularCoords receiver;
  RisConfig ris;
  double alpha_bound = 0.0;  // admissible |alpha|, Gamma_D * T_s
};

enum class NullMode { analytic_null, fallback_min, none };

const char* to_string(NullMode mode);

struct NullSolution {
  double alpha = 0.0;
  double residual = 0.0;  // |Psi_I(alpha)|
  NullMode mode = NullMode::none;
};

struct HarmonicCoefficients {
  double p = 0.0;
  double q = 0.0;
  double amplitude() const;
};

/// Array factor of the interferer -> surface -> receiver hop after shifting
/// both local azimuths by alpha.
double psi_interference(const NullSteerInput& input, double alpha);

HarmonicCoefficients harmonic_coefficients(const NullSteerInput& input);

/// Every |alpha| <= alpha_bound that satisfies a row or column null condition,
/// sorted ascending. Candidates whose evaluated residual exceeds 1e-9 are dropped.
std::vector<double> candidate_alphas(const NullSteerInput& input);

/// Smallest-magnitude analytic null if one is reachable, otherwise the best
/// point of a 2001-point grid over [-alpha_bound, alpha_bound].
NullSolution select_rotation(const NullSteerInput& input);

inline constexpr double kNullResidualTolerance = 1e-9;
inline constexpr int kFallbackGridPoints = 2001;

}  // namespace drs
