// SPDX-License-Identifier: Apache-2.0

#include "drs/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drs/golden_section.hpp"

namespace drs {

void WorldBounds::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("bounds.x_min must be < bounds.x_max");
  if (!(y_min < y_max)) throw std::invalid_argument("bounds.y_min must be < bounds.y_max");
  if (!(z_min < z_max)) throw std::invalid_argument("bounds.z_min must be < bounds.z_max");
  if (!(z_min > 0.0)) throw std::invalid_argument("bounds.z_min must be > 0");
}

bool WorldBounds::contains(Vec3 p, double tolerance) const {
  return p.x >= x_min - tolerance && p.x <= x_max + tolerance && p.y >= y_min - tolerance &&
         p.y <= y_max + tolerance && p.z >= z_min - tolerance && p.z <= z_max + tolerance;
}

Vec3 WorldBounds::clamp(Vec3 p) const {
  return {std::clamp(p.x, x_min, x_max), std::clamp(p.y, y_min, y_max), std::clamp(p.z, z_min, z_max)};
}

void MotionLimits::validate() const {
  if (!(v_drone > 0.0)) throw std::invalid_argument("motion.v_drone must be > 0");
  if (!(rot_rate > 0.0)) throw std::invalid_argument("motion.rot_rate must be > 0");
  if (!(time_step > 0.0)) throw std::invalid_argument("motion.time_step must be > 0");
  if (!(v_vehicle > 0.0)) throw std::invalid_argument("motion.v_vehicle must be > 0");
  if (v_drone < v_vehicle) throw std::invalid_argument("motion.v_drone must be >= motion.v_vehicle");
}

double height_objective(double d_2d, double h) {
  const double c = std::cos(std::atan(d_2d / h));
  const double c2 = c * c;
  return (d_2d * d_2d + h * h) / (c2 * c2 * c2);
}

double optimal_height(double d_2d, const WorldBounds& bounds) {
  if (d_2d < 0.0) throw std::invalid_argument("optimal_height: d_2d must be >= 0");
  // With no horizontal offset the objective is h^2, increasing on the whole box.
  if (d_2d == 0.0) return bounds.z_min;
  return golden_section_minimize([d_2d](double h) { return height_objective(d_2d, h); }, bounds.z_min,
                                 bounds.z_max, 1e-4)
      .x;
}

Vec3 optimal_location(Vec3 tx, Vec3 rx, const WorldBounds& bounds) {
  const double half_separation = 0.5 * std::hypot(rx.x - tx.x, rx.y - tx.y);
  const double mx = std::clamp(0.5 * (tx.x + rx.x), bounds.x_min, bounds.x_max);
  const double my = std::clamp(0.5 * (tx.y + rx.y), bounds.y_min, bounds.y_max);
  return {mx, my, optimal_height(half_separation, bounds)};
}

Vec3 step_towards(Vec3 current, Vec3 target, const MotionLimits& limits, const WorldBounds& bounds) {
  const Vec3 delta = target - current;
  const double distance = delta.norm();
  const double reach = limits.max_step();
  if (distance <= reach) return bounds.clamp(target);
  return bounds.clamp(current + (reach / distance) * delta);
}

}  // namespace drs
