// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "drs/nullsteer.hpp"
#include "oracles.hpp"

using namespace drs;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {

RisConfig half_wave(int m, int n) {
  RisConfig r;
  r.m_rows = m;
  r.n_cols = n;
  r.wavelength = 0.0508;
  r.dx = r.dy = 0.0254;
  return r;
}

NullSteerInput reference_input() {
  return {{pi / 4, 0.0}, {pi / 4, pi / 2}, half_wave(32, 32), 0.08725};
}

NullSteerInput random_input(std::mt19937_64& g) {
  NullSteerInput in;
  in.interferer = {oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)};
  in.receiver = {oracle::uniform(g, 0, pi / 2), oracle::uniform(g, -pi, pi)};
  const int sizes[] = {4, 8, 16, 32};
  in.ris = half_wave(sizes[g() % 4], sizes[g() % 4]);
  in.alpha_bound = oracle::uniform(g, 0.01, pi);
  return in;
}

double brute_force_psi(const NullSteerInput& in, double alpha) {
  const double si = std::sin(in.interferer.theta);
  const double sr = std::sin(in.receiver.theta);
  const double ux = si * std::cos(in.interferer.phi + alpha) + sr * std::cos(in.receiver.phi + alpha);
  const double uy = si * std::sin(in.interferer.phi + alpha) + sr * std::sin(in.receiver.phi + alpha);
  return oracle::phasor_sum_magnitude(in.ris.m_rows, in.ris.n_cols, in.ris.dx, in.ris.dy, in.ris.wavelength, ux, uy);
}

}  // namespace

TEST_CASE("psi_interference delegates to the array factor") {
  const NullSteerInput in = reference_input();
  CHECK(psi_interference(in, 0.0) == psi(in.ris, direction_sums(in.interferer, in.receiver)));
  CHECK(psi_interference(in, 2 * pi) == Approx(psi_interference(in, 0.0)).epsilon(1e-12));
  const double alpha = 0.3;
  const AngularCoords i{in.interferer.theta, in.interferer.phi + alpha};
  const AngularCoords r{in.receiver.theta, in.receiver.phi + alpha};
  CHECK(psi_interference(in, alpha) == psi(in.ris, direction_sums(i, r)));
}

TEST_CASE("psi_interference dense scan agrees with the explicit phasor sum") {
  const NullSteerInput in = reference_input();
  double scan_min = 1.0;
  for (int i = 0; i < 100'000; ++i) {
    const double alpha = -pi + 2 * pi * i / 99'999.0;
    const double v = std::abs(psi_interference(in, alpha));
    scan_min = std::min(scan_min, v);
    if (i % 997 == 0) CHECK(v == Approx(brute_force_psi(in, alpha)).epsilon(1e-9).scale(1.0));
  }
  CHECK(scan_min >= 0.0);
}

TEST_CASE("harmonic_coefficients examples") {
  const HarmonicCoefficients zero = harmonic_coefficients({{pi / 2, 0.0}, {pi / 2, pi}, half_wave(32, 32), 0.1});
  CHECK(std::abs(zero.p) < 1e-15);
  CHECK(std::abs(zero.q) < 1e-15);

  const HarmonicCoefficients h = harmonic_coefficients(reference_input());
  CHECK(h.p == Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
  CHECK(h.q == Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
}

TEST_CASE("harmonic identities hold for random inputs") {
  auto g = oracle::rng(41);
  for (int i = 0; i < 1000; ++i) {
    const NullSteerInput in = random_input(g);
    const HarmonicCoefficients h = harmonic_coefficients(in);
    const double si = std::sin(in.interferer.theta);
    const double sr = std::sin(in.receiver.theta);
    for (int j = 0; j < 100; ++j) {
      const double a = oracle::uniform(g, -pi, pi);
      const double lhs_x = si * std::cos(in.interferer.phi + a) + sr * std::cos(in.receiver.phi + a);
      const double lhs_y = si * std::sin(in.interferer.phi + a) + sr * std::sin(in.receiver.phi + a);
      REQUIRE(std::abs(h.p * std::cos(a) - h.q * std::sin(a) - lhs_x) <= 1e-12);
      REQUIRE(std::abs(h.q * std::cos(a) + h.p * std::sin(a) - lhs_y) <= 1e-12);
      REQUIRE(std::abs(h.amplitude() * std::cos(a + std::atan2(h.q, h.p)) - lhs_x) <= 1e-12);
      REQUIRE(std::abs(h.amplitude() * std::cos(a - std::atan2(h.p, h.q)) - lhs_y) <= 1e-12);
    }
  }
}

TEST_CASE("candidate_alphas for the 32x32 reference geometry") {
  const NullSteerInput in = reference_input();
  const std::vector<double> c = candidate_alphas(in);
  // 16 cos(alpha + pi/4) = 11 on the rows, 16 sin(alpha + pi/4) = 11 on the columns.
  const double expected = std::acos(11.0 / 16.0) - pi / 4;
  CHECK(expected == Approx(0.0272).epsilon(0.01));
  bool found = false;
  for (double a : c) {
    CHECK(std::abs(a) <= in.alpha_bound);
    CHECK(std::abs(psi_interference(in, a)) <= 1e-9);
    if (std::abs(a - expected) < 1e-9) found = true;
  }
  CHECK(found);
  CHECK(c.size() == 4);  // k = 11 and k = 12 on each axis
}

TEST_CASE("candidate_alphas is empty without a reachable condition") {
  NullSteerInput in{{pi / 2, 0.0}, {pi / 2, pi}, half_wave(32, 32), pi};
  CHECK(candidate_alphas(in).empty());
  in = {{0.0, 0.0}, {0.0, 0.0}, half_wave(16, 16), pi};
  CHECK(candidate_alphas(in).empty());
  // Amplitude below lambda / (M dx) = 1/8: no admissible k at all.
  in = {{0.02, 0.0}, {0.02, 0.3}, half_wave(16, 16), pi};
  CHECK(candidate_alphas(in).empty());
}

TEST_CASE("unconstrained candidates are exact row or column zeros") {
  auto g = oracle::rng(42);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    NullSteerInput in = random_input(g);
    in.alpha_bound = pi;
    for (double a : candidate_alphas(in)) {
      CHECK(brute_force_psi(in, a) <= 1e-9);
      const double si = std::sin(in.interferer.theta);
      const double sr = std::sin(in.receiver.theta);
      const double ux = si * std::cos(in.interferer.phi + a) + sr * std::cos(in.receiver.phi + a);
      const double uy = si * std::sin(in.interferer.phi + a) + sr * std::sin(in.receiver.phi + a);
      const double row = oracle::row_sum_magnitude(in.ris.m_rows, in.ris.dx, in.ris.wavelength, ux);
      const double col = oracle::row_sum_magnitude(in.ris.n_cols, in.ris.dy, in.ris.wavelength, uy);
      CHECK(std::min(row, col) <= 1e-9);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("candidates shift by -delta when both azimuths shift by delta") {
  auto g = oracle::rng(43);
  for (int i = 0; i < 200; ++i) {
    NullSteerInput in = random_input(g);
    in.alpha_bound = pi;
    const double delta = oracle::uniform(g, -1, 1);
    NullSteerInput shifted = in;
    shifted.interferer.phi += delta;
    shifted.receiver.phi += delta;
    const std::vector<double> a = candidate_alphas(in);
    const std::vector<double> b = candidate_alphas(shifted);
    REQUIRE(a.size() == b.size());
    for (double x : a) {
      const double moved = wrap_angle(x - delta);
      bool hit = false;
      for (double y : b) hit = hit || std::abs(wrap_angle(y - moved)) < 1e-9;
      CHECK(hit);
    }
  }
}

TEST_CASE("a full turn always reaches a null once the amplitude allows one") {
  auto g = oracle::rng(44);
  for (int i = 0; i < 500; ++i) {
    NullSteerInput in = random_input(g);
    in.alpha_bound = pi;
    const double threshold = in.ris.wavelength / (in.ris.m_rows * in.ris.dx);
    if (harmonic_coefficients(in).amplitude() >= threshold) CHECK_FALSE(candidate_alphas(in).empty());
  }
}

TEST_CASE("select_rotation") {
  SUBCASE("reference geometry picks the smallest rotation, negative on ties") {
    const NullSolution s = select_rotation(reference_input());
    CHECK(s.mode == NullMode::analytic_null);
    CHECK(std::abs(s.alpha) == Approx(std::acos(11.0 / 16.0) - pi / 4).epsilon(1e-9));
    CHECK(s.alpha < 0.0);
    CHECK(s.residual <= 1e-9);
  }

  SUBCASE("already nulled at zero") {
    // 2 sin(theta) = 5/16, a row zero for M = 32 at half-wave spacing.
    const double theta = std::asin(5.0 / 32.0);
    const NullSteerInput in{{theta, 0.0}, {theta, 0.0}, half_wave(32, 32), 0.08725};
    CHECK(std::abs(psi_interference(in, 0.0)) <= 1e-9);
    const NullSolution s = select_rotation(in);
    CHECK(s.mode == NullMode::analytic_null);
    CHECK(std::abs(s.alpha) < 1e-7);
    CHECK(s.residual <= 1e-9);
  }

  SUBCASE("zero amplitude leaves the surface alone") {
    const NullSolution s = select_rotation({{pi / 2, 0.0}, {pi / 2, pi}, half_wave(32, 32), 0.08725});
    CHECK(s.mode == NullMode::none);
    CHECK(s.alpha == 0.0);
  }

  SUBCASE("fallback never worsens the residual") {
    const NullSteerInput in{{0.02, 0.0}, {0.03, 0.3}, half_wave(16, 16), 0.08725};
    const NullSolution s = select_rotation(in);
    CHECK(s.mode != NullMode::analytic_null);
    CHECK(s.residual <= std::abs(psi_interference(in, 0.0)));
    CHECK(std::abs(s.alpha) <= in.alpha_bound);
  }

  SUBCASE("random inputs stay within the rotation budget") {
    auto g = oracle::rng(45);
    for (int i = 0; i < 500; ++i) {
      NullSteerInput in = random_input(g);
      in.alpha_bound = oracle::uniform(g, 0.001, 0.2);
      const NullSolution s = select_rotation(in);
      CHECK(std::abs(s.alpha) <= in.alpha_bound + 1e-12);
      CHECK(s.residual >= 0.0);
      if (s.mode == NullMode::analytic_null) CHECK(s.residual <= 1e-9);
      else CHECK(s.residual <= std::abs(psi_interference(in, 0.0)));
    }
  }
}
