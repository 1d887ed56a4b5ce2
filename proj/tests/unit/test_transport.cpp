// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "fwlab/error.hpp"
#include "fwlab/presets.hpp"
#include "fwlab/transport.hpp"
#include "oracles.hpp"

using namespace fwlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const BesovParams kParams{3, 2, 2};

GridFunction sine(const GridPtr &g, double shift = 0.0) {
  return GridFunction::from_function(g, [=](double x) { return std::sin(x - shift); });
}

double shift_error(double dt) {
  auto g = Grid::make(256, 1.0);
  const auto problem = TransportProblem::steady(GridFunction::constant(g, 1.0),
                                                GridFunction::zeros(g), sine(g),
                                                TimeGrid::covering(1.0, dt));
  const auto traj = solve_transport(problem, kParams);
  return oracle::max_abs_diff(traj.states.back().samples(), sine(g, 1.0).samples());
}

} // namespace

TEST_CASE("time grid covering", "[transport]") {
  const auto t = TimeGrid::covering(1.0, 0.003);
  CHECK(t.steps == 334);
  CHECK(t.dt <= 0.003);
  CHECK(std::abs(t.final_time() - 1.0) < 1e-14);
  CHECK(t.nodes() == 335);
}

TEST_CASE("nothing moves without velocity or forcing", "[transport]") {
  auto g = Grid::make(64, 1.0);
  const auto f0 = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 20, 1));
  const auto traj = solve_transport(
      TransportProblem::steady(GridFunction::zeros(g), GridFunction::zeros(g), f0,
                               TimeGrid::covering(1.0, 0.05)),
      kParams);
  for (const auto &state : traj.states)
    CHECK(oracle::max_abs_diff(state.samples(), f0.samples()) < 1e-12);
  const auto est = verify_transport_estimate(traj, kParams, 1.0);
  for (double ratio : est.ratio)
    CHECK(std::abs(ratio - 1.0) < 1e-10);
  CHECK(est.all_hold);
}

TEST_CASE("constant velocity shifts exactly", "[transport]") {
  const double fine = shift_error(1e-3);
  CHECK(fine <= 1e-8);
  const double coarse = shift_error(0.01);
  const double half = shift_error(0.005);
  INFO("errors " << coarse << " " << half);
  CHECK(coarse / half >= 12.0);
}

TEST_CASE("pure forcing is integrated exactly", "[transport]") {
  auto g = Grid::make(64, 1.0);
  const auto c = GridFunction::from_function(g, [](double x) { return std::cos(x); });
  const auto f0 = sine(g);
  const auto traj = solve_transport(
      TransportProblem::steady(GridFunction::zeros(g), c, f0, TimeGrid::covering(2.0, 0.01)),
      kParams);
  CHECK(oracle::max_abs_diff(traj.states.back().samples(), (f0 + c * 2.0).samples()) < 1e-10);
  CHECK(verify_transport_estimate(traj, kParams, 1.0).all_hold);
}

TEST_CASE("trajectory invariants", "[transport]") {
  auto g = Grid::make(128, 2.0);
  std::mt19937_64 rng(8);
  const auto family = random_transport_family(g, TimeGrid::covering(1.0, 0.02), 3, 42);
  for (const auto &problem : family) {
    const auto traj = solve_transport(problem, kParams);
    CHECK(oracle::max_abs_diff(traj.states.front().samples(), problem.initial.samples()) == 0.0);
    CHECK(traj.V_profile.front() == 0.0);
    for (std::size_t i = 1; i < traj.V_profile.size(); ++i)
      CHECK(traj.V_profile[i] >= traj.V_profile[i - 1]);
    CHECK(traj.states.size() == problem.time.nodes());
  }
}

TEST_CASE("mean conserved for spatially constant velocity", "[transport]") {
  auto g = Grid::make(64, 1.0);
  const auto f0 = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 15, 2));
  TransportProblem problem;
  problem.initial = f0;
  problem.time = TimeGrid::covering(1.0, 0.01);
  for (std::size_t i = 0; i < problem.time.nodes(); ++i) {
    problem.velocity.push_back(GridFunction::constant(g, std::sin(problem.time.time(i))));
    problem.forcing.push_back(GridFunction::zeros(g));
  }
  const auto traj = solve_transport(problem, kParams);
  for (const auto &state : traj.states)
    CHECK(std::abs(state.mean() - f0.mean()) <= 1e-12);
}

TEST_CASE("solution is linear in the data", "[transport]") {
  auto g = Grid::make(64, 1.0);
  const auto v = GridFunction::from_function(g, [](double x) { return 0.5 * std::sin(x); });
  const auto zero = GridFunction::zeros(g);
  const auto f = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 12, 3));
  const auto h = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 12, 4));
  const auto time = TimeGrid::covering(1.0, 0.01);
  auto solve = [&](const GridFunction &f0) {
    return solve_transport(TransportProblem::steady(v, zero, f0, time), kParams).states.back();
  };
  const auto lhs = solve(f * 2.0 + h * -0.75);
  const auto rhs = solve(f) * 2.0 + solve(h) * -0.75;
  CHECK(oracle::max_abs_diff(lhs.samples(), rhs.samples()) < 1e-10);
}

TEST_CASE("preconditions and failures", "[transport]") {
  auto g = Grid::make(64, 1.0);
  const auto zero = GridFunction::zeros(g);
  const auto fast = GridFunction::constant(g, 10.0);
  CHECK_THROWS_AS(solve_transport(TransportProblem::steady(fast, zero, sine(g),
                                                           TimeGrid::covering(1.0, 0.01)),
                                  kParams),
                  Error);

  // Non-finite forcing at one node surfaces as a numerical error naming a node.
  auto problem = TransportProblem::steady(zero, zero, sine(g), TimeGrid::covering(0.1, 0.01));
  std::vector<double> bad(64, 0.0);
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  problem.forcing[4] = GridFunction::from_samples(g, bad);
  try {
    solve_transport(problem, kParams);
    FAIL("expected a numerical error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::Numerical);
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }

  // Shape mismatch.
  auto short_problem = TransportProblem::steady(zero, zero, sine(g), TimeGrid::covering(0.1, 0.01));
  short_problem.velocity.pop_back();
  CHECK_THROWS_AS(solve_transport(short_problem, kParams), Error);
}

TEST_CASE("estimate verification and constant fitting", "[transport]") {
  auto g = Grid::make(128, 1.0);
  const auto time = TimeGrid::covering(1.0, 0.01);
  const auto zero = GridFunction::zeros(g);
  std::mt19937_64 rng(21);

  // v = 0 family: the triangle inequality caps the constant at 1.
  std::vector<TransportProblem> still;
  for (int m = 0; m < 4; ++m)
    still.push_back(TransportProblem::steady(zero, random_bandlimited(g, rng, 8, 0.5),
                                             random_bandlimited(g, rng, 16, 1.0), time));
  const auto fit0 = fit_transport_constant(still, kParams);
  CHECK(fit0.C <= 1.0 + 1e-3);
  for (const auto &traj : fit0.trajectories)
    CHECK(verify_transport_estimate(traj, kParams, 1.0).all_hold);

  // v = sin x: a finite constant exists and the fitted value works.
  const auto v = GridFunction::from_function(g, [](double x) { return std::sin(x); });
  const auto traj =
      solve_transport(TransportProblem::steady(v, zero, random_bandlimited(g, rng, 16, 1.0), time),
                      kParams);
  const std::vector<TransportTrajectory> one{traj};
  const double C = fit_transport_constant(one);
  CHECK(std::isfinite(C));
  CHECK(verify_transport_estimate(traj, kParams, C).all_hold);
  if (C > kTransportConstantFloor)
    CHECK_FALSE(verify_transport_estimate(traj, kParams, C * (1.0 - 2e-3)).all_hold);

  CHECK_THROWS_AS(fit_transport_constant(std::span<const TransportProblem>{}, kParams), Error);
  CHECK_THROWS_AS(verify_transport_estimate(traj, {3, 2, kInf}, 1.0), Error);
  CHECK_THROWS_AS(verify_transport_estimate(traj, {2.5, 2, 2}, 1.0), Error);
  CHECK_THROWS_AS(verify_transport_estimate(traj, kParams, 0.0), Error);
}
