// SPDX-License-Identifier: Apache-2.0
//
// Far-field path loss through a passive reflecting surface, its array factor,
// and the SINR / rate link budget.

#pragma once

#include <limits>

#include "drs/geometry.hpp"

namespace drs {

/// Surface array geometry and link gains. All gains are linear.
struct RisConfig {
  int m_rows = 32;
  int n_cols = 32;
  double wavelength = 299792458.0 / 5.9e9;
  double dx = 299792458.0 / 5.9e9 / 2.0;
  double dy = 299792458.0 / 5.9e9 / 2.0;
  double gain_tx = 1.0;
  double gain_rx = 1.0;
  double gain_ris = 1.0;
  double amplitude = 1.0;

  /// Throws std::invalid_argument on the first violated invariant.
  void validate() const;
};

/// Angles and distances of a transmitter -> surface -> receiver hop.
struct LinkGeometry {
  AngularCoords tx;
  AngularCoords rx;
  double d1 = 0.0;  // transmitter to surface
  double d2 = 0.0;  // surface to receiver
};

LinkGeometry make_link(const Pose& ris, Vec3 tx, Vec3 rx);

enum class SinrForm { standard, paper_literal };

struct RadioConfig {
  double tx_power = 0.2;        // W
  double noise_power = 1e-13;   // W
  double efficiency = 0.8;
  double eff_bandwidth = 10e6;  // Hz
  SinrForm sinr_form = SinrForm::standard;

  void validate() const;
};

/// Linear path loss. A missing path (blocked element pattern or an exact
/// array-factor null) is +inf and contributes zero received power.
class PathLoss {
public:
  constexpr PathLoss() = default;
  constexpr explicit PathLoss(double linear) : linear_(linear) {}
  static constexpr PathLoss no_path() { return PathLoss(std::numeric_limits<double>::infinity()); }

  constexpr double linear() const { return linear_; }
  constexpr bool is_no_path() const { return linear_ == std::numeric_limits<double>::infinity(); }
  /// Received power for a given transmit power; exactly zero for no_path().
  constexpr double received(double tx_power) const { return is_no_path() ? 0.0 : tx_power / linear_; }
  double db() const;

private:
  double linear_ = std::numeric_limits<double>::infinity();
};

/// Element pattern cos^3(theta) on the front hemisphere, zero behind.
/// Throws std::invalid_argument for theta outside [0, pi].
double radiation_pattern(double theta);

/// sin(count * x) / (count * sin x), with the analytic limit at x = k*pi.
double dirichlet_ratio(int count, double x);

/// Direction-cosine sums (u_x, u_y) of a hop.
struct DirectionSums {
  double ux = 0.0;
  double uy = 0.0;
};
DirectionSums direction_sums(AngularCoords tx, AngularCoords rx);

/// Array factor of the hop, product of the row and column kernels.
double psi(const RisConfig& ris, const LinkGeometry& link);
double psi(const RisConfig& ris, DirectionSums u);

PathLoss path_loss_far_field(const RisConfig& ris, const LinkGeometry& link, double psi_value);

/// 2 D^2 / lambda with D the aperture diagonal.
double fraunhofer_distance(const RisConfig& ris);

double sinr(const RadioConfig& radio, PathLoss desired, PathLoss interference);

/// eta * B_eff * log2(1 + sinr), in bit/s.
double rate(const RadioConfig& radio, double sinr_value);

}  // namespace drs
