// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "drs/channel.hpp"
#include "drs/cli/commands.hpp"
#include "drs/engine.hpp"
#include "drs/nullsteer.hpp"
#include "drs/planner.hpp"
#include "drs/rng.hpp"
#include "oracles.hpp"

using namespace drs;
namespace fs = std::filesystem;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

RisConfig half_wave(int m, int n) {
  RisConfig r;
  r.m_rows = m;
  r.n_cols = n;
  r.dx = r.dy = r.wavelength / 2;
  return r;
}

Outcome orientation_improvement() {
  const auto start = std::chrono::steady_clock::now();
  double sum_on = 0.0, sum_off = 0.0;
  int seeds_not_worse = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SimulationConfig c;
    c.scenario.seed = seed;
    c.steps = 10000;
    c.orientation_control = true;
    const double on = run_simulation(c).mean_rate_bps;
    c.orientation_control = false;
    const double off = run_simulation(c).mean_rate_bps;
    sum_on += on / 20;
    sum_off += off / 20;
    if (on >= off) ++seeds_not_worse;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double pct = improvement_pct(sum_on, sum_off);
  return {sum_on > sum_off && pct > 0.0 && pct < 10.0 && seconds < 120.0,
          fmt("mean on %.6f bit/s, off %.6f bit/s, improvement %.3e %% (band (0, 10)), %d/20 seeds not worse, %.1f s",
              sum_on, sum_off, pct, seeds_not_worse, seconds)};
}

Outcome null_quality() {
  auto g = oracle::rng(2002);
  const int sizes[] = {8, 16, 32};
  int accepted = 0, draws = 0, deep = 0, residual_fail = 0, scan_fail = 0;
  double worst_residual = 0.0;
  while (accepted < 1000) {
    ++draws;
    NullSteerInput in;
    in.interferer = {oracle::uniform(g, 0.0, 1.5), oracle::uniform(g, -pi, pi)};
    in.receiver = {oracle::uniform(g, 0.0, 1.5), oracle::uniform(g, -pi, pi)};
    in.ris = half_wave(sizes[g() % 3], sizes[g() % 3]);
    in.alpha_bound = MotionLimits{}.max_rotation();
    if (candidate_alphas(in).empty()) continue;
    ++accepted;

    const NullSolution s = select_rotation(in);
    const double residual = std::abs(psi_interference(in, s.alpha));
    worst_residual = std::max(worst_residual, residual);
    if (s.mode != NullMode::analytic_null || residual > 1e-9) ++residual_fail;

    LinkGeometry before{in.interferer, in.receiver, 300.0, 250.0};
    LinkGeometry after = before;
    after.tx.phi += s.alpha;
    after.rx.phi += s.alpha;
    const PathLoss pl0 = path_loss_far_field(in.ris, before, psi(in.ris, before));
    const PathLoss pl1 = path_loss_far_field(in.ris, after, psi(in.ris, after));
    if (pl1.is_no_path() || pl1.linear() > 1e3 * pl0.linear()) ++deep;

    double scan_min = 1.0;
    for (int i = 0; i < 100000; ++i) {
      const double a = -in.alpha_bound + 2 * in.alpha_bound * i / 99999.0;
      scan_min = std::min(scan_min, std::abs(psi_interference(in, a)));
    }
    if (scan_min < residual - 1e-9) ++scan_fail;
  }
  const double deep_share = deep / 1000.0;
  return {residual_fail == 0 && scan_fail == 0 && deep_share >= 0.99,
          fmt("%d instances (%d drawn): worst |Psi_I| %.2e (<= 1e-9), PL gain > 1e3 in %.1f %% (>= 99 %%), "
              "%d scan beats",
              accepted, draws, worst_residual, 100 * deep_share, scan_fail)};
}

Outcome height_oracle() {
  const WorldBounds b;
  auto g = oracle::rng(2003);
  double worst = 0.0, worst_grid = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double d = oracle::uniform(g, 10, 500);
    const double expected = oracle::clamp_sqrt3(d, 100, 600);
    worst = std::max(worst, std::abs(optimal_height(d, b) - expected));
    worst_grid = std::max(worst_grid, std::abs(oracle::grid_argmin(d, 100, 600, 1'000'001) - expected));
  }
  return {worst <= 1e-3 && worst_grid <= 1e-3,
          fmt("max |h - clamp(sqrt3 d)| = %.2e m (<= 1e-3), grid search agrees to %.2e m", worst, worst_grid)};
}

Outcome psi_equivalence() {
  auto g = oracle::rng(2004);
  double worst = 0.0;
  int cases = 0;
  for (int m : {1, 2, 4, 8, 16}) {
    for (int n : {1, 2, 4, 8, 16}) {
      const RisConfig ris = half_wave(m, n);
      for (int i = 0; i < 1000; ++i) {
        const LinkGeometry l{{oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)},
                             {oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)},
                             1.0,
                             1.0};
        const DirectionSums u = direction_sums(l.tx, l.rx);
        const double brute = oracle::phasor_sum_magnitude(m, n, ris.dx, ris.dy, ris.wavelength, u.ux, u.uy);
        worst = std::max(worst, std::abs(std::abs(psi(ris, l)) - brute));
        ++cases;
      }
    }
  }
  return {worst <= 1e-9, fmt("%d cases, max deviation %.2e (<= 1e-9)", cases, worst)};
}

Outcome constraint_suite() {
  long violations = 0, steps = 0;
  for (InterfererKind kind : {InterfererKind::rsu, InterfererKind::vehicle}) {
    for (bool control : {true, false}) {
      SimulationConfig c;
      c.scenario.seed = 2005;
      c.scenario.interferer = kind;
      c.orientation_control = control;
      WorldState s = initial_state(c);
      for (long n = 0; n < 10000; ++n) {
        const Pose before = s.drs;
        run_step(s, c);
        ++steps;
        const MotionLimits& lim = c.scenario.limits;
        if (step_displacement(before.position(), s.drs.position()) > lim.v_drone * lim.time_step + 1e-9) ++violations;
        if (rotation_between(before, s.drs) > lim.rot_rate * lim.time_step + 1e-12) ++violations;
        if (!c.scenario.bounds.contains(s.drs.position(), 1e-9)) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%ld steps over 4 runs, %ld violations", steps, violations)};
}

Outcome harmonic_identity() {
  auto g = oracle::rng(2006);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    NullSteerInput in;
    in.interferer = {oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)};
    in.receiver = {oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)};
    const HarmonicCoefficients h = harmonic_coefficients(in);
    for (int j = 0; j < 100; ++j) {
      const double a = oracle::uniform(g, -pi, pi);
      const double direct = std::sin(in.interferer.theta) * std::cos(in.interferer.phi + a) +
                            std::sin(in.receiver.theta) * std::cos(in.receiver.phi + a);
      worst = std::max(worst, std::abs(h.p * std::cos(a) - h.q * std::sin(a) - direct));
    }
  }
  return {worst <= 1e-12, fmt("100000 evaluations, max deviation %.2e (<= 1e-12)", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "drs_acceptance_determinism";
  fs::remove_all(root);
  cli::RunOptions o;
  o.seed = 7;
  o.steps = 10000;
  o.out = root / "a";
  const int a = cli::cmd_run(o);
  o.out = root / "b";
  const int b = cli::cmd_run(o);
  const std::string first = slurp(root / "a" / "steps.csv");
  const std::string second = slurp(root / "b" / "steps.csv");
  return {a == 0 && b == 0 && !first.empty() && first == second,
          fmt("steps.csv %zu bytes, identical: %s", first.size(), first == second ? "yes" : "no")};
}

Outcome sampler_moments() {
  SplitMix64 rng(2008);
  std::string detail;
  bool ok = true;
  for (double rate : {0.1, 0.2}) {
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) sum += sample_exponential(rng, rate);
    const double rel = std::abs(sum / 100000 - 1.0 / rate) * rate;
    ok = ok && rel < 0.02;
    detail += fmt("exp(%.1f) mean err %.2f %%; ", rate, 100 * rel);
  }
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) sum += sample_poisson(rng, 0.5);
  const double rel = std::abs(sum / 100000 - 0.5) / 0.5;
  ok = ok && rel < 0.02;
  detail += fmt("poisson(0.5) mean err %.2f %% (< 2 %%)", 100 * rel);
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 orientation-control improvement", orientation_improvement},
      {"AC2 null quality", null_quality},
      {"AC3 height optimizer oracle", height_oracle},
      {"AC4 array factor brute-force equivalence", psi_equivalence},
      {"AC5 motion/rotation/box constraints", constraint_suite},
      {"AC6 harmonic identity", harmonic_identity},
      {"AC7 determinism", determinism},
      {"AC8 sampler moments", sampler_moments},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome o = check();
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
