// SPDX-License-Identifier: Apache-2.0
//
// Time-stepped simulation: traffic, hover-point tracking, interference nulling
// and the per-step link budget. Motion and rotation limits and the flight box
// are re-checked after every step.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "drs/channel.hpp"
#include "drs/geometry.hpp"
#include "drs/nullsteer.hpp"
#include "drs/traffic.hpp"

namespace drs {

struct SimulationConfig {
  ScenarioConfig scenario;
  RadioConfig radio;
  RisConfig ris;
  long steps = 10000;
  bool orientation_control = true;

  void validate() const;
};

struct WorldState {
  TrafficState traffic;
  Pose drs;
};

struct StepRecord {
  long step = 0;
  double time_s = 0.0;
  int pair_id = 0;
  long cycle_index = 0;
  Vec3 tx;
  Vec3 rx;
  Pose drs;
  double alpha = 0.0;
  NullMode null_mode = NullMode::none;
  PathLoss pl_desired;
  PathLoss pl_interference;
  double sinr = 0.0;
  double rate_bps = 0.0;
  bool control = false;
};

/// Raised when a step breaks the speed, turn-rate or box constraints. This is
/// an internal error, never an expected runtime condition.
class ConstraintViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline constexpr double kDisplacementTolerance = 1e-9;
inline constexpr double kRotationTolerance = 1e-12;

/// Empty highway, drone at the center of the area on the floor, yaw 0.
WorldState initial_state(const SimulationConfig& config);

/// Advances one time step. Returns a record only while a pair is being served.
std::optional<StepRecord> run_step(WorldState& state, const SimulationConfig& config);

/// Throws ConstraintViolation if the transition `before` -> `after` breaks a limit.
void check_constraints(const Pose& before, const Pose& after, const SimulationConfig& config);

struct RunSummary {
  std::vector<StepRecord> records;
  std::vector<double> mean_rate_by_cycle;  // indexed by cycle_index
  std::vector<long> samples_by_cycle;
  double mean_rate_bps = 0.0;
  double cumulative_rate_bits = 0.0;  // sum of rate * T_s
  int pairs = 0;
};

RunSummary run_simulation(const SimulationConfig& config);

/// Relative gain of `on` over `off` in percent; 0 when `off` is 0.
double improvement_pct(double on, double off);

}  // namespace drs
