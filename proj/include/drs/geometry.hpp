// SPDX-License-Identifier: Apache-2.0
//
// Coordinate frames and angle bookkeeping for the drone-mounted surface.
//
// World axes: x lateral (across the lanes), y longitudinal (along the lanes),
// z up. The surface boresight points straight down (-z); elevation is measured
// from boresight and azimuth in the surface's local horizontal frame, which is
// the world frame rotated about z by the pose yaw.

#pragma once

#include <cmath>
#include <numbers>

namespace drs {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double horizontal_norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double radians);

/// Position plus yaw about the world vertical axis. Rotation of the surface is
/// restricted to the horizontal plane, so the yaw fully determines the 3x3
/// orientation matrix.
class Pose {
public:
  Pose() = default;
  Pose(Vec3 position, double yaw) : position_(position), yaw_(wrap_angle(yaw)) {}

  const Vec3& position() const { return position_; }
  double yaw() const { return yaw_; }

  void set_position(Vec3 p) { position_ = p; }
  void set_yaw(double yaw) { yaw_ = wrap_angle(yaw); }
  void rotate(double delta) { yaw_ = wrap_angle(yaw_ + delta); }

private:
  Vec3 position_{};
  double yaw_ = 0.0;
};

/// Elevation from boresight in [0, pi] and local azimuth in (-pi, pi].
struct AngularCoords {
  double theta = 0.0;
  double phi = 0.0;
};

/// Direction of `target` as seen from the surface at `ris`.
/// Throws std::invalid_argument unless the surface is strictly above the target.
AngularCoords angles_to(const Pose& ris, Vec3 target);

/// Magnitude of the yaw change between two poses, in [0, pi].
double rotation_between(const Pose& a, const Pose& b);

/// Same quantity extracted from the relative rotation matrix,
/// acos((tr(R_a R_b^T) - 1) / 2). Used to cross-check rotation_between.
double rotation_angle_from_trace(const Pose& a, const Pose& b);

double step_displacement(Vec3 a, Vec3 b);

}  // namespace drs
