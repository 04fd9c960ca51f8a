// SPDX-License-Identifier: Apache-2.0

#include "drs/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace drs {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void RisConfig::validate() const {
  require(m_rows >= 1, "ris.m_rows must be >= 1");
  require(n_cols >= 1, "ris.n_cols must be >= 1");
  require(dx > 0.0 && std::isfinite(dx), "ris.dx must be > 0");
  require(dy > 0.0 && std::isfinite(dy), "ris.dy must be > 0");
  require(wavelength > 0.0 && std::isfinite(wavelength), "ris.wavelength must be > 0");
  require(gain_tx > 0.0, "ris.gain_tx must be > 0");
  require(gain_rx > 0.0, "ris.gain_rx must be > 0");
  require(gain_ris > 0.0, "ris.gain_ris must be > 0");
  require(amplitude > 0.0 && amplitude <= 1.0, "ris.amplitude must be in (0, 1]");
}

void RadioConfig::validate() const {
  require(tx_power > 0.0, "radio.tx_power must be > 0");
  require(noise_power > 0.0, "radio.noise_power must be > 0");
  require(efficiency > 0.0 && efficiency <= 1.0, "radio.efficiency must be in (0, 1]");
  require(eff_bandwidth > 0.0, "radio.eff_bandwidth must be > 0");
}

LinkGeometry make_link(const Pose& ris, Vec3 tx, Vec3 rx) {
  return LinkGeometry{
      .tx = angles_to(ris, tx),
      .rx = angles_to(ris, rx),
      .d1 = step_displacement(tx, ris.position()),
      .d2 = step_displacement(ris.position(), rx),
  };
}

double PathLoss::db() const { return 10.0 * std::log10(linear_); }

double radiation_pattern(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("radiation_pattern: theta outside [0, pi]");
  }
  if (theta > std::numbers::pi / 2.0) return 0.0;
  const double c = std::cos(theta);
  return c * c * c;
}

double dirichlet_ratio(int count, double x) {
  if (count == 1) return 1.0;
  // x = k*pi + delta; the ratio picks up (-1)^(k(count-1)) and is otherwise the
  // well-conditioned kernel sin(count*delta) / (count*sin(delta)).
  const double k = std::nearbyint(x / std::numbers::pi);
  const double delta = x - k * std::numbers::pi;
  const bool odd = std::fmod(std::abs(k) * (count - 1), 2.0) == 1.0;
  const double sign = odd ? -1.0 : 1.0;
  if (delta == 0.0) return sign;
  return sign * std::sin(count * delta) / (count * std::sin(delta));
}

DirectionSums direction_sums(AngularCoords tx, AngularCoords rx) {
  const double st = std::sin(tx.theta);
  const double sr = std::sin(rx.theta);
  return {st * std::cos(tx.phi) + sr * std::cos(rx.phi), st * std::sin(tx.phi) + sr * std::sin(rx.phi)};
}

double psi(const RisConfig& ris, DirectionSums u) {
  const double arg_x = std::numbers::pi * u.ux * ris.dx / ris.wavelength;
  const double arg_y = std::numbers::pi * u.uy * ris.dy / ris.wavelength;
  return dirichlet_ratio(ris.m_rows, arg_x) * dirichlet_ratio(ris.n_cols, arg_y);
}

double psi(const RisConfig& ris, const LinkGeometry& link) { return psi(ris, direction_sums(link.tx, link.rx)); }

PathLoss path_loss_far_field(const RisConfig& ris, const LinkGeometry& link, double psi_value) {
  const double f_tx = radiation_pattern(link.tx.theta);
  const double f_rx = radiation_pattern(link.rx.theta);
  const double mn = static_cast<double>(ris.m_rows) * ris.n_cols;
  const double denom = ris.gain_tx * ris.gain_rx * ris.gain_ris * mn * mn * ris.dx * ris.dy * ris.wavelength *
                       ris.wavelength * f_tx * f_rx * ris.amplitude * ris.amplitude * psi_value * psi_value;
  if (denom == 0.0) return PathLoss::no_path();
  const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
  const double pl = 64.0 * pi3 * link.d1 * link.d1 * link.d2 * link.d2 / denom;
  return std::isfinite(pl) ? PathLoss(pl) : PathLoss::no_path();
}

double fraunhofer_distance(const RisConfig& ris) {
  const double ax = ris.m_rows * ris.dx;
  const double ay = ris.n_cols * ris.dy;
  return 2.0 * (ax * ax + ay * ay) / ris.wavelength;
}

double sinr(const RadioConfig& radio, PathLoss desired, PathLoss interference) {
  const double interf = interference.received(radio.tx_power);
  switch (radio.sinr_form) {
    case SinrForm::paper_literal:
      if (desired.is_no_path()) return 0.0;
      return radio.tx_power / (desired.linear() * radio.noise_power + interf);
    case SinrForm::standard:
    default:
      return desired.received(radio.tx_power) / (radio.noise_power + interf);
  }
}

double rate(const RadioConfig& radio, double sinr_value) {
  return radio.efficiency * radio.eff_bandwidth * std::log2(1.0 + sinr_value);
}

}  // namespace drs
