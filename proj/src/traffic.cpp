// SPDX-License-Identifier: Apache-2.0

#include "drs/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drs {

void ScenarioConfig::validate() const {
  if (!(arrival_rate >= 0.0)) throw std::invalid_argument("scenario.arrival_rate must be >= 0");
  if (!(v2v_rate >= 0.0)) throw std::invalid_argument("scenario.v2v_rate must be >= 0");
  bounds.validate();
  limits.validate();
  if (rsu().z >= bounds.z_min) throw std::invalid_argument("scenario.rsu_z must be below bounds.z_min");
}

Vec3 ScenarioConfig::rsu() const {
  if (rsu_position) return *rsu_position;
  return {0.5 * (bounds.x_min + bounds.x_max), 0.5 * (bounds.y_min + bounds.y_max), rsu_height};
}

const Vehicle* TrafficState::find(int id) const {
  auto it = std::find_if(vehicles.begin(), vehicles.end(), [id](const Vehicle& v) { return v.id == id; });
  return it == vehicles.end() ? nullptr : &*it;
}

TrafficState init_traffic(const ScenarioConfig& config) {
  TrafficState state;
  state.rng = SplitMix64(config.seed);
  for (double& t : state.next_arrival) t = sample_exponential(state.rng, config.arrival_rate);
  return state;
}

void advance_vehicles(TrafficState& state, double dt, const WorldBounds& bounds) {
  state.clock += dt;
  for (Vehicle& v : state.vehicles) v.position.y += v.velocity * dt;
  std::erase_if(state.vehicles, [&](const Vehicle& v) { return v.position.y < bounds.y_min || v.position.y > bounds.y_max; });

  if (state.pair) {
    if (!state.find(state.pair->tx_id) || !state.find(state.pair->rx_id)) {
      state.pair.reset();
    } else if (state.pair->interferer_id && !state.find(*state.pair->interferer_id)) {
      state.pair->interferer_id.reset();
    }
  }
}

void spawn_arrivals(TrafficState& state, const ScenarioConfig& config) {
  const WorldBounds& b = config.bounds;
  for (int lane = 0; lane < 2; ++lane) {
    while (state.next_arrival[lane] <= state.clock) {
      const double arrived = state.next_arrival[lane];
      const double velocity = lane == 0 ? config.limits.v_vehicle : -config.limits.v_vehicle;
      const double entry = lane == 0 ? b.y_min : b.y_max;
      Vehicle v;
      v.id = state.next_vehicle_id++;
      v.lane = lane;
      v.velocity = velocity;
      v.position = {lane == 0 ? b.x_min : b.x_max, entry + velocity * (state.clock - arrived),
                    1.5 + 0.5 * state.rng.uniform_open()};
      if (v.position.y >= b.y_min && v.position.y <= b.y_max) state.vehicles.push_back(v);
      state.next_arrival[lane] = arrived + sample_exponential(state.rng, config.arrival_rate);
    }
  }
}

namespace {

std::optional<int> pick_vehicle_interferer(TrafficState& state, int tx_id, int rx_id) {
  std::vector<int> others;
  for (const Vehicle& v : state.vehicles) {
    if (v.id != tx_id && v.id != rx_id) others.push_back(v.id);
  }
  if (others.empty()) return std::nullopt;
  return others[state.rng.uniform_index(others.size())];
}

}  // namespace

int process_pair_events(TrafficState& state, const ScenarioConfig& config) {
  const int events = sample_poisson(state.rng, config.v2v_rate);

  if (state.pair && config.interferer == InterfererKind::vehicle && !state.pair->interferer_id) {
    state.pair->interferer_id = pick_vehicle_interferer(state, state.pair->tx_id, state.pair->rx_id);
  }
  if (events == 0 || state.pair || state.vehicles.size() < 2) return events;

  const Vehicle& tx = state.vehicles[state.rng.uniform_index(state.vehicles.size())];
  const Vehicle* rx = nullptr;
  for (const Vehicle& v : state.vehicles) {
    if (v.lane == tx.lane) continue;
    if (!rx || std::abs(v.position.y - tx.position.y) < std::abs(rx->position.y - tx.position.y)) rx = &v;
  }
  if (!rx) return events;

  V2VPair pair;
  pair.id = state.next_pair_id++;
  pair.tx_id = tx.id;
  pair.rx_id = rx->id;
  pair.start_step = state.step;
  if (config.interferer == InterfererKind::vehicle) pair.interferer_id = pick_vehicle_interferer(state, tx.id, rx->id);
  state.pair = pair;
  return events;
}

std::optional<Vec3> interferer_position(const TrafficState& state, const ScenarioConfig& config) {
  if (config.interferer == InterfererKind::rsu) return config.rsu();
  if (config.interferer == InterfererKind::none) return std::nullopt;
  if (!state.pair || !state.pair->interferer_id) return std::nullopt;
  const Vehicle* v = state.find(*state.pair->interferer_id);
  return v ? std::optional<Vec3>(v->position) : std::nullopt;
}

}  // namespace drs
