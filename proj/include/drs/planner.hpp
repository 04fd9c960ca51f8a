// SPDX-License-Identifier: Apache-2.0
//
// Hover-point selection and per-step motion of the relay drone.

#pragma once

#include "drs/geometry.hpp"

namespace drs {

struct WorldBounds {
  double x_min = 0.0;
  double x_max = 500.0;
  double y_min = 0.0;
  double y_max = 5000.0;
  double z_min = 100.0;
  double z_max = 600.0;

  void validate() const;
  bool contains(Vec3 p, double tolerance = 0.0) const;
  Vec3 clamp(Vec3 p) const;
  Vec3 center_at_floor() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max), z_min}; }
};

struct MotionLimits {
  double v_drone = 18.0;     // m/s
  double rot_rate = 0.1745;  // rad/s
  double time_step = 0.5;    // s
  double v_vehicle = 15.0;   // m/s

  void validate() const;
  double max_step() const { return v_drone * time_step; }
  double max_rotation() const { return rot_rate * time_step; }
};

/// Height-dependent part of the relay path loss for a node at horizontal
/// distance d_2d: (d^2 + h^2) / cos^6(atan(d / h)).
double height_objective(double d_2d, double h);

/// Bounded minimizer of height_objective over [z_min, z_max].
double optimal_height(double d_2d, const WorldBounds& bounds);

/// Midpoint of the pair (clamped into the box) at the optimal height.
Vec3 optimal_location(Vec3 tx, Vec3 rx, const WorldBounds& bounds);

/// Moves at most one step of length v_D * T_s toward `target`, snapping onto
/// it when within reach.
Vec3 step_towards(Vec3 current, Vec3 target, const MotionLimits& limits, const WorldBounds& bounds);

}  // namespace drs
