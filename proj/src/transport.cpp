// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "fwlab/error.hpp"

namespace fwlab {

TimeGrid TimeGrid::covering(double final_time, double max_dt) {
  if (!(final_time > 0.0) || !std::isfinite(final_time))
    fail(ErrorCode::InvalidArgument, "final time must be positive and finite");
  if (!(max_dt > 0.0))
    fail(ErrorCode::InvalidArgument, "time step must be positive");
  const double ratio = final_time / max_dt;
  auto steps = static_cast<std::size_t>(std::ceil(ratio - 1e-9 * ratio));
  steps = std::max<std::size_t>(steps, 1);
  return {final_time / static_cast<double>(steps), steps};
}

TransportProblem TransportProblem::steady(const GridFunction &velocity,
                                          const GridFunction &forcing, GridFunction initial,
                                          TimeGrid time) {
  TransportProblem problem;
  problem.velocity.assign(time.nodes(), velocity);
  problem.forcing.assign(time.nodes(), forcing);
  problem.initial = std::move(initial);
  problem.time = time;
  return problem;
}

void TransportProblem::validate() const {
  if (!(time.dt > 0.0) || time.steps == 0)
    fail(ErrorCode::InvalidArgument, "transport problem needs a nonempty time grid");
  if (velocity.size() != time.nodes() || forcing.size() != time.nodes())
    fail(ErrorCode::InvalidArgument, "velocity and forcing need one field per time node");
  if (!initial.grid())
    fail(ErrorCode::InvalidArgument, "transport problem has no initial field");
  for (std::size_t i = 0; i < time.nodes(); ++i) {
    require_same_grid(initial, velocity[i]);
    require_same_grid(initial, forcing[i]);
  }
}

double transport_step_limit(const TransportProblem &problem) {
  double vmax = 0.0;
  for (const auto &v : problem.velocity)
    vmax = std::max(vmax, v.max_abs());
  if (vmax == 0.0)
    return kInfinity;
  return 0.5 * problem.initial.grid()->spacing() / vmax;
}

namespace {

GridFunction transport_rhs(const GridFunction &f, const GridFunction &v, const GridFunction &F) {
  if (v.is_zero())
    return F;
  return F - dealiased_product(v, dx(f));
}

GridFunction midpoint(const GridFunction &a, const GridFunction &b) {
  return GridFunction::axpy(a * 0.5, 0.5, b);
}

std::vector<double> trapezoid_cumulative(std::span<const double> values, double dt) {
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 1; i < values.size(); ++i)
    out[i] = out[i - 1] + 0.5 * dt * (values[i - 1] + values[i]);
  return out;
}

} // namespace

TransportTrajectory solve_transport(const TransportProblem &problem, const BesovParams &params) {
  problem.validate();
  params.validate();
  const double limit = transport_step_limit(problem);
  if (problem.time.dt > limit) {
    std::ostringstream os;
    os << "time step " << problem.time.dt << " exceeds the advective bound 0.5*dx/max|v| = "
       << limit;
    fail(ErrorCode::Precondition, os.str());
  }

  const LPPartition part(problem.initial.grid());
  const double dt = problem.time.dt;

  TransportTrajectory out;
  out.time = problem.time;
  out.params = params;
  out.states.reserve(problem.time.nodes());
  out.states.push_back(problem.initial);

  GridFunction f = problem.initial;
  for (std::size_t i = 0; i < problem.time.steps; ++i) {
    const GridFunction &v0 = problem.velocity[i];
    const GridFunction &v1 = problem.velocity[i + 1];
    const GridFunction &F0 = problem.forcing[i];
    const GridFunction &F1 = problem.forcing[i + 1];
    const GridFunction vh = midpoint(v0, v1);
    const GridFunction Fh = midpoint(F0, F1);

    const GridFunction k1 = transport_rhs(f, v0, F0);
    const GridFunction k2 = transport_rhs(GridFunction::axpy(f, 0.5 * dt, k1), vh, Fh);
    const GridFunction k3 = transport_rhs(GridFunction::axpy(f, 0.5 * dt, k2), vh, Fh);
    const GridFunction k4 = transport_rhs(GridFunction::axpy(f, dt, k3), v1, F1);
    GridFunction sum = GridFunction::axpy(k1, 2.0, k2);
    sum = GridFunction::axpy(sum, 2.0, k3);
    sum = sum + k4;
    f = GridFunction::axpy(f, dt / 6.0, sum);

    if (!f.all_finite()) {
      std::ostringstream os;
      os << "transport state stopped being finite at time node " << (i + 1)
         << " (t = " << problem.time.time(i + 1) << ")";
      fail(ErrorCode::Numerical, os.str());
    }
    out.states.push_back(f);
  }

  const BesovParams lower = params.shifted(-1.0);
  std::vector<double> velocity_norms(problem.time.nodes());
  out.state_norms.resize(problem.time.nodes());
  out.forcing_norms.resize(problem.time.nodes());
  for (std::size_t i = 0; i < problem.time.nodes(); ++i) {
    out.state_norms[i] = besov_norm(part, out.states[i], params);
    out.forcing_norms[i] = besov_norm(part, problem.forcing[i], params);
    velocity_norms[i] = besov_norm(part, dx(problem.velocity[i]), lower);
  }
  out.V_profile = trapezoid_cumulative(velocity_norms, dt);
  return out;
}

TransportEstimateReport verify_transport_estimate(const TransportTrajectory &trajectory,
                                                  const BesovParams &params, double C) {
  if (auto violation = params.transport_violation())
    fail(ErrorCode::Inadmissible, "transport estimate: " + *violation);
  if (params.s != trajectory.params.s || params.p != trajectory.params.p ||
      params.r != trajectory.params.r)
    fail(ErrorCode::InvalidArgument,
         "trajectory diagnostics were computed for different Besov indices");
  const std::size_t nodes = trajectory.time.nodes();
  if (trajectory.states.size() != nodes || trajectory.state_norms.size() != nodes ||
      trajectory.forcing_norms.size() != nodes || trajectory.V_profile.size() != nodes)
    fail(ErrorCode::InvalidArgument, "incomplete transport trajectory");
  if (!(C > 0.0))
    fail(ErrorCode::InvalidArgument, "transport constant C must be positive");

  const double dt = trajectory.time.dt;
  const auto &V = trajectory.V_profile;
  TransportEstimateReport report;
  report.lhs = trajectory.state_norms;
  report.rhs.resize(nodes);
  report.ratio.resize(nodes);
  report.holds.resize(nodes);

  double integral = 0.0;
  double previous = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double weighted = std::exp(-C * V[i]) * trajectory.forcing_norms[i];
    if (i > 0)
      integral += 0.5 * dt * (previous + weighted);
    previous = weighted;
    report.rhs[i] = std::exp(C * V[i]) * (trajectory.state_norms[0] + C * integral);
    report.ratio[i] = report.rhs[i] > 0.0 ? report.lhs[i] / report.rhs[i]
                                          : (report.lhs[i] > 0.0 ? kInfinity : 1.0);
    const bool ok = report.lhs[i] <= report.rhs[i] * (1.0 + kEstimateSlack);
    report.holds[i] = ok ? 1 : 0;
    report.all_hold = report.all_hold && ok;
    report.max_violation_ratio = std::max(report.max_violation_ratio, report.ratio[i]);
  }
  return report;
}

double fit_transport_constant(std::span<const TransportTrajectory> trajectories, double cap) {
  if (trajectories.empty())
    fail(ErrorCode::InvalidArgument, "cannot fit a transport constant to an empty family");
  auto holds = [&](double C) {
    return std::all_of(trajectories.begin(), trajectories.end(), [&](const auto &t) {
      return verify_transport_estimate(t, t.params, C).all_hold;
    });
  };
  if (holds(kTransportConstantFloor))
    return kTransportConstantFloor;
  double lo = kTransportConstantFloor;
  double hi = 1.0;
  while (!holds(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > cap) {
      std::ostringstream os;
      os << "transport constant calibration failed: no C below " << cap << " works";
      fail(ErrorCode::Numerical, os.str());
    }
  }
  while (hi - lo > 1e-3 * hi) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

TransportFit fit_transport_constant(std::span<const TransportProblem> problems,
                                    const BesovParams &params, double cap) {
  if (problems.empty())
    fail(ErrorCode::InvalidArgument, "cannot fit a transport constant to an empty family");
  if (auto violation = params.transport_violation())
    fail(ErrorCode::Inadmissible, "transport estimate: " + *violation);
  std::vector<std::future<TransportTrajectory>> jobs;
  jobs.reserve(problems.size());
  for (const auto &problem : problems)
    jobs.push_back(std::async(std::launch::async, [&problem, &params] {
      return solve_transport(problem, params);
    }));
  TransportFit fit;
  for (auto &job : jobs)
    fit.trajectories.push_back(job.get());
  fit.C = fit_transport_constant(fit.trajectories, cap);
  return fit;
}

} // namespace fwlab
