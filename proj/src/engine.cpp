// SPDX-License-Identifier: Apache-2.0

#include "drs/engine.hpp"

#include <set>
#include <sstream>

#include "drs/planner.hpp"

namespace drs {

void SimulationConfig::validate() const {
  scenario.validate();
  radio.validate();
  ris.validate();
  if (steps < 1) throw std::invalid_argument("run.steps must be >= 1");
}

WorldState initial_state(const SimulationConfig& config) {
  return WorldState{init_traffic(config.scenario), Pose(config.scenario.bounds.center_at_floor(), 0.0)};
}

void check_constraints(const Pose& before, const Pose& after, const SimulationConfig& config) {
  const MotionLimits& limits = config.scenario.limits;
  std::ostringstream why;
  const double moved = step_displacement(before.position(), after.position());
  const double turned = rotation_between(before, after);
  if (moved > limits.max_step() + kDisplacementTolerance) {
    why << "displacement " << moved << " m exceeds " << limits.max_step() << " m";
  } else if (turned > limits.max_rotation() + kRotationTolerance) {
    why << "rotation " << turned << " rad exceeds " << limits.max_rotation() << " rad";
  } else if (!config.scenario.bounds.contains(after.position(), kDisplacementTolerance)) {
    why << "position (" << after.position().x << ", " << after.position().y << ", " << after.position().z
        << ") outside the flight box";
  } else {
    return;
  }
  throw ConstraintViolation(why.str());
}

std::optional<StepRecord> run_step(WorldState& state, const SimulationConfig& config) {
  const ScenarioConfig& sc = config.scenario;
  const Pose before = state.drs;

  advance_vehicles(state.traffic, sc.limits.time_step, sc.bounds);
  ++state.traffic.step;
  spawn_arrivals(state.traffic, sc);
  process_pair_events(state.traffic, sc);

  if (!state.traffic.pair) {
    check_constraints(before, state.drs, config);
    return std::nullopt;
  }

  const V2VPair& pair = *state.traffic.pair;
  const Vec3 tx = state.traffic.find(pair.tx_id)->position;
  const Vec3 rx = state.traffic.find(pair.rx_id)->position;

  const Vec3 target = optimal_location(tx, rx, sc.bounds);
  state.drs.set_position(step_towards(state.drs.position(), target, sc.limits, sc.bounds));

  StepRecord rec;
  rec.control = config.orientation_control;
  const std::optional<Vec3> interferer = interferer_position(state.traffic, sc);
  if (interferer && config.orientation_control) {
    const NullSteerInput input{angles_to(state.drs, *interferer), angles_to(state.drs, rx), config.ris,
                               sc.limits.max_rotation()};
    const NullSolution solution = select_rotation(input);
    // A positive alpha advances every local azimuth, i.e. the surface turns by -alpha.
    state.drs.rotate(-solution.alpha);
    rec.alpha = solution.alpha;
    rec.null_mode = solution.mode;
  }

  // The served pair is beamformed (unit array factor); the interferer reflects
  // through the passive array factor at the current yaw.
  const LinkGeometry desired = make_link(state.drs, tx, rx);
  rec.pl_desired = path_loss_far_field(config.ris, desired, 1.0);
  if (interferer) {
    const LinkGeometry leak = make_link(state.drs, *interferer, rx);
    rec.pl_interference = path_loss_far_field(config.ris, leak, psi(config.ris, leak));
  }
  rec.sinr = sinr(config.radio, rec.pl_desired, rec.pl_interference);
  rec.rate_bps = rate(config.radio, rec.sinr);

  check_constraints(before, state.drs, config);

  rec.step = state.traffic.step;
  rec.time_s = state.traffic.clock;
  rec.pair_id = pair.id;
  rec.cycle_index = state.traffic.step - pair.start_step;
  rec.tx = tx;
  rec.rx = rx;
  rec.drs = state.drs;
  return rec;
}

RunSummary run_simulation(const SimulationConfig& config) {
  config.validate();
  WorldState state = initial_state(config);
  RunSummary summary;
  std::set<int> pairs;
  double total = 0.0;
  for (long n = 0; n < config.steps; ++n) {
    std::optional<StepRecord> rec = run_step(state, config);
    if (!rec) continue;
    const auto cycle = static_cast<std::size_t>(rec->cycle_index);
    if (summary.mean_rate_by_cycle.size() <= cycle) {
      summary.mean_rate_by_cycle.resize(cycle + 1, 0.0);
      summary.samples_by_cycle.resize(cycle + 1, 0);
    }
    summary.mean_rate_by_cycle[cycle] += rec->rate_bps;
    ++summary.samples_by_cycle[cycle];
    total += rec->rate_bps;
    pairs.insert(rec->pair_id);
    summary.records.push_back(*rec);
  }
  for (std::size_t i = 0; i < summary.mean_rate_by_cycle.size(); ++i) {
    if (summary.samples_by_cycle[i] > 0) summary.mean_rate_by_cycle[i] /= summary.samples_by_cycle[i];
  }
  summary.pairs = static_cast<int>(pairs.size());
  summary.cumulative_rate_bits = total * config.scenario.limits.time_step;
  summary.mean_rate_bps = summary.records.empty() ? 0.0 : total / summary.records.size();
  return summary;
}

double improvement_pct(double on, double off) { return off == 0.0 ? 0.0 : 100.0 * (on - off) / off; }

}  // namespace drs
