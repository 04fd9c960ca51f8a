// SPDX-License-Identifier: Apache-2.0

#include "drs/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace drs {

double wrap_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(radians, two_pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) wrapped += two_pi;
  return wrapped;
}

AngularCoords angles_to(const Pose& ris, Vec3 target) {
  const Vec3 delta = target - ris.position();
  const double height = -delta.z;
  if (!(height > 0.0)) {
    throw std::invalid_argument("angles_to: surface must be strictly above the target");
  }
  const double d2d = delta.horizontal_norm();
  AngularCoords out;
  out.theta = std::atan2(d2d, height);
  // Azimuth is immaterial directly below (sin(theta) = 0); pin it to zero.
  out.phi = d2d > 0.0 ? wrap_angle(std::atan2(delta.y, delta.x) - ris.yaw()) : 0.0;
  return out;
}

double rotation_between(const Pose& a, const Pose& b) {
  return std::abs(wrap_angle(a.yaw() - b.yaw()));
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 yaw_matrix(double yaw) {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

}  // namespace

double rotation_angle_from_trace(const Pose& a, const Pose& b) {
  const Mat3 ra = yaw_matrix(a.yaw());
  const Mat3 rb = yaw_matrix(b.yaw());
  // tr(Ra Rb^T) = sum_ij Ra_ij Rb_ij; the inverse of a rotation is its transpose.
  double trace = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) trace += ra[i][j] * rb[i][j];
  }
  return std::acos(std::clamp((trace - 1.0) / 2.0, -1.0, 1.0));
}

double step_displacement(Vec3 a, Vec3 b) { return (b - a).norm(); }

}  // namespace drs
