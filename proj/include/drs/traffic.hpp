// SPDX-License-Identifier: Apache-2.0
//
// Two-lane highway: Poisson vehicle arrivals, constant-velocity mobility and
// at most one active V2V pair.
//
// Lane 0 runs along x = x_min toward +y, lane 1 along x = x_max toward -y.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "drs/geometry.hpp"
#include "drs/planner.hpp"
#include "drs/rng.hpp"

namespace drs {

struct Vehicle {
  int id = 0;
  int lane = 0;
  Vec3 position;         // z is the antenna height
  double velocity = 0.0;  // signed, along y
};

struct V2VPair {
  int id = 0;
  int tx_id = 0;
  int rx_id = 0;
  long start_step = 0;
  bool active = true;
  std::optional<int> interferer_id;  // vehicle interferer only
};

enum class InterfererKind { rsu, vehicle, none };

struct ScenarioConfig {
  double arrival_rate = 0.2;  // vehicles/s per lane
  double v2v_rate = 0.02;     // pair events per step
  WorldBounds bounds;
  MotionLimits limits;
  std::optional<Vec3> rsu_position;  // defaults to the area center at rsu_height
  double rsu_height = 5.0;
  InterfererKind interferer = InterfererKind::rsu;
  std::uint64_t seed = 1;

  void validate() const;
  Vec3 rsu() const;
};

struct TrafficState {
  double clock = 0.0;
  long step = 0;
  std::vector<Vehicle> vehicles;
  std::optional<V2VPair> pair;
  std::array<double, 2> next_arrival{};
  int next_vehicle_id = 0;
  int next_pair_id = 0;
  SplitMix64 rng;

  const Vehicle* find(int id) const;
};

TrafficState init_traffic(const ScenarioConfig& config);

/// Moves every vehicle by velocity * dt, advances the clock, despawns vehicles
/// that left [y_min, y_max] and deactivates a pair that lost a member.
void advance_vehicles(TrafficState& state, double dt, const WorldBounds& bounds);

/// Spawns every vehicle whose arrival time is not after the current clock.
void spawn_arrivals(TrafficState& state, const ScenarioConfig& config);

/// Draws this step's pair-event count and, when no pair is active, forms one:
/// a uniformly chosen transmitter and the nearest vehicle of the other lane.
/// Returns the drawn event count.
int process_pair_events(TrafficState& state, const ScenarioConfig& config);

/// Current interferer location, if one exists.
std::optional<Vec3> interferer_position(const TrafficState& state, const ScenarioConfig& config);

}  // namespace drs
