// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/fw_system.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "fwlab/error.hpp"

namespace fwlab {

FWRates fw_rhs(const GridFunction &u, const GridFunction &rho) {
  require_same_grid(u, rho);
  const GridFunction ux = dx(u);
  GridFunction du = lambda_inv_dx(rho - u) - dealiased_product(u, ux);
  GridFunction drho = -(dealiased_product(u, dx(rho)) + dealiased_product(rho, ux) + ux);
  return {std::move(du), std::move(drho)};
}

double fw_step_limit(const GridFunction &u0) {
  return 0.5 * u0.grid()->spacing() / std::max(1.0, u0.max_abs());
}

FWTrajectory solve_fw_direct(const FWState &initial, TimeGrid time) {
  require_same_grid(initial.u, initial.rho);
  if (!(time.dt > 0.0) || time.steps == 0)
    fail(ErrorCode::InvalidArgument, "direct solve needs a nonempty time grid");
  const double limit = fw_step_limit(initial.u);
  if (time.dt > limit) {
    std::ostringstream os;
    os << "time step " << time.dt << " exceeds the bound 0.5*dx/max(1, max|u0|) = " << limit;
    fail(ErrorCode::Precondition, os.str());
  }

  FWTrajectory out;
  out.time = time;
  out.u.reserve(time.nodes());
  out.rho.reserve(time.nodes());
  auto record = [&out](const GridFunction &u, const GridFunction &rho) {
    out.u.push_back(u);
    out.rho.push_back(rho);
    out.mean_u.push_back(u.mean());
    out.mean_rho.push_back(rho.mean());
  };
  record(initial.u, initial.rho);

  const double dt = time.dt;
  GridFunction u = initial.u;
  GridFunction rho = initial.rho;
  for (std::size_t i = 0; i < time.steps; ++i) {
    const FWRates k1 = fw_rhs(u, rho);
    const FWRates k2 =
        fw_rhs(GridFunction::axpy(u, 0.5 * dt, k1.du), GridFunction::axpy(rho, 0.5 * dt, k1.drho));
    const FWRates k3 =
        fw_rhs(GridFunction::axpy(u, 0.5 * dt, k2.du), GridFunction::axpy(rho, 0.5 * dt, k2.drho));
    const FWRates k4 = fw_rhs(GridFunction::axpy(u, dt, k3.du), GridFunction::axpy(rho, dt, k3.drho));
    const GridFunction su = GridFunction::axpy(GridFunction::axpy(k1.du, 2.0, k2.du), 2.0, k3.du) + k4.du;
    const GridFunction sr =
        GridFunction::axpy(GridFunction::axpy(k1.drho, 2.0, k2.drho), 2.0, k3.drho) + k4.drho;
    u = GridFunction::axpy(u, dt / 6.0, su);
    rho = GridFunction::axpy(rho, dt / 6.0, sr);
    if (!u.all_finite() || !rho.all_finite()) {
      out.blowup_node = i + 1;
      break;
    }
    record(u, rho);
  }
  return out;
}

FWTrajectory solve_fw_direct(const FWState &initial, double final_time, double dt) {
  return solve_fw_direct(initial, TimeGrid::covering(final_time, dt));
}

Lifespan lifespan(double P0, double C, double cap) {
  if (!(P0 >= 0.0) || !std::isfinite(P0))
    fail(ErrorCode::InvalidArgument, "initial size P0 must be nonnegative");
  if (!(C > 0.0) || !std::isfinite(C))
    fail(ErrorCode::InvalidArgument, "lifespan constant C must be positive");
  if (P0 == 0.0)
    return {cap, true};
  return {3.0 / (16.0 * C * P0 * P0), false};
}

double initial_size(const LPPartition &part, const GridFunction &u0, const GridFunction &rho0,
                    const BesovParams &params) {
  return besov_norm(part, u0, params) + besov_norm(part, rho0, params.shifted(-1.0));
}

void SchemeConfig::validate() const {
  params.validate();
  if (auto violation = params.wellposedness_violation())
    fail(ErrorCode::Inadmissible, "inadmissible Besov indices: " + *violation);
  if (!(C > 0.0) || !std::isfinite(C))
    fail(ErrorCode::InvalidArgument, "scheme constant C must be positive");
  if (n_max == 0)
    fail(ErrorCode::InvalidArgument, "scheme needs at least one iterate");
  if (!(dt > 0.0))
    fail(ErrorCode::InvalidArgument, "scheme time step must be positive");
  if (!(t_cap > 0.0))
    fail(ErrorCode::InvalidArgument, "time cap must be positive");
}

double IterationTrace::bound_312_value(double t) const {
  const double denominator = 1.0 - 4.0 * C * P0 * P0 * t;
  if (denominator <= 0.0)
    return kInfinity;
  return P0 / std::sqrt(denominator);
}

bool IterationTrace::all_bounds_hold() const {
  for (std::size_t n = 0; n < bound_312.size(); ++n)
    for (std::size_t i = 0; i < bound_312[n].size(); ++i)
      if (!bound_312[n][i] || !bound_313[n][i])
        return false;
  return true;
}

namespace {

constexpr double kBoundSlack = 1e-12;
constexpr std::size_t kMaxTimeNodes = 200000;

std::vector<double> velocity_integral(const LPPartition &part, const std::vector<GridFunction> &u,
                                      const BesovParams &params, double dt) {
  std::vector<double> V(u.size(), 0.0);
  double previous = besov_norm(part, dx(u[0]), params.shifted(-1.0));
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double current = besov_norm(part, dx(u[i]), params.shifted(-1.0));
    V[i] = V[i - 1] + 0.5 * dt * (previous + current);
    previous = current;
  }
  return V;
}

void record_bounds(IterationTrace &trace, std::size_t n) {
  const std::size_t nodes = trace.time.nodes();
  trace.bound_312[n].resize(nodes);
  trace.bound_313[n].resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double sum = trace.norm_sum(n, i);
    const double b312 = trace.bound_312_value(trace.time.time(i));
    trace.bound_312[n][i] = sum <= b312 * (1.0 + kBoundSlack) ? 1 : 0;
    trace.bound_313[n][i] = sum <= trace.bound_313_value() * (1.0 + kBoundSlack) ? 1 : 0;
  }
}

std::vector<double> pair_norms(const LPPartition &part, const std::vector<GridFunction> &a_u,
                               const std::vector<GridFunction> &a_rho,
                               const std::vector<GridFunction> &b_u,
                               const std::vector<GridFunction> &b_rho, const BesovParams &params,
                               double ds) {
  const std::size_t nodes =
      std::min({a_u.size(), a_rho.size(), b_u.size(), b_rho.size()});
  const BesovParams pu = params.shifted(ds);
  const BesovParams pr = params.shifted(ds - 1.0);
  std::vector<double> out(nodes);
  for (std::size_t i = 0; i < nodes; ++i)
    out[i] = besov_norm(part, a_u[i] - b_u[i], pu) + besov_norm(part, a_rho[i] - b_rho[i], pr);
  return out;
}

} // namespace

double sup_distance(const LPPartition &part, const std::vector<GridFunction> &a_u,
                    const std::vector<GridFunction> &a_rho, const std::vector<GridFunction> &b_u,
                    const std::vector<GridFunction> &b_rho, const BesovParams &params,
                    double ds) {
  const auto norms = pair_norms(part, a_u, a_rho, b_u, b_rho, params, ds);
  return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

IterationTrace run_scheme(const GridFunction &u0, const GridFunction &rho0,
                          const SchemeConfig &cfg) {
  cfg.validate();
  require_same_grid(u0, rho0);
  const LPPartition part(u0.grid());
  const double P0 = initial_size(part, u0, rho0, cfg.params);
  const Lifespan horizon = lifespan(P0, cfg.C, cfg.t_cap);
  if (!horizon.capped && !(4.0 * cfg.C * P0 * P0 * horizon.T < 1.0))
    fail(ErrorCode::Internal, "lifespan violates 4 C P0^2 T < 1");
  const TimeGrid time = TimeGrid::covering(horizon.T, cfg.dt);
  if (time.nodes() > kMaxTimeNodes) {
    std::ostringstream os;
    os << "lifespan T = " << horizon.T << " needs " << time.nodes()
       << " time nodes at dt = " << cfg.dt << "; raise C or dt";
    fail(ErrorCode::Precondition, os.str());
  }
  IterationTrace trace = run_scheme(u0, rho0, cfg, time);
  trace.horizon = horizon;
  return trace;
}

IterationTrace run_scheme(const GridFunction &u0, const GridFunction &rho0,
                          const SchemeConfig &cfg, TimeGrid time) {
  cfg.validate();
  require_same_grid(u0, rho0);
  const GridPtr &grid = u0.grid();
  const LPPartition part(grid);
  const std::size_t nodes = time.nodes();

  IterationTrace trace;
  trace.time = time;
  trace.C = cfg.C;
  trace.P0 = initial_size(part, u0, rho0, cfg.params);
  trace.horizon = {time.final_time(), false};
  trace.bound_312.resize(cfg.n_max + 1);
  trace.bound_313.resize(cfg.n_max + 1);

  const GridFunction zero = GridFunction::zeros(grid);
  trace.u.emplace_back(nodes, zero);
  trace.rho.emplace_back(nodes, zero);
  trace.norm_u.emplace_back(nodes, 0.0);
  trace.norm_rho.emplace_back(nodes, 0.0);
  record_bounds(trace, 0);

  for (std::size_t n = 0; n < cfg.n_max; ++n) {
    const auto &un = trace.u[n];
    const auto &rn = trace.rho[n];
    std::vector<GridFunction> forcing_u(nodes);
    std::vector<GridFunction> forcing_rho(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      forcing_u[i] = lambda_inv_dx(rn[i] - un[i]);
      const GridFunction ux = dx(un[i]);
      forcing_rho[i] = -(dealiased_product(rn[i], ux) + ux);
    }

    TransportTrajectory tu;
    TransportTrajectory tr;
    try {
      const MollifierKernel kernel(grid, SchemeConfig::mollifier_width(n));
      TransportProblem pu{un, std::move(forcing_u), mollify(u0, kernel), time};
      TransportProblem pr{un, std::move(forcing_rho), mollify(rho0, kernel), time};
      auto job = std::async(std::launch::async, [&pr, &cfg] {
        return solve_transport(pr, cfg.params.shifted(-1.0));
      });
      tu = solve_transport(pu, cfg.params);
      tr = job.get();
    } catch (const Error &e) {
      fail(e.code(), "iterate " + std::to_string(n + 1) + ": " + e.what());
    }

    trace.V.push_back(std::move(tu.V_profile));
    trace.u.push_back(std::move(tu.states));
    trace.rho.push_back(std::move(tr.states));
    trace.norm_u.push_back(std::move(tu.state_norms));
    trace.norm_rho.push_back(std::move(tr.state_norms));
    record_bounds(trace, n + 1);
    trace.d.push_back(sup_distance(part, trace.u[n + 1], trace.rho[n + 1], trace.u[n],
                                   trace.rho[n], cfg.params, -1.0));
  }
  trace.V.push_back(velocity_integral(part, trace.u.back(), cfg.params, time.dt));
  return trace;
}

LifespanMeasurement empirical_lifespan(const GridFunction &u0, const GridFunction &rho0,
                                       const SchemeConfig &cfg, double t_cap,
                                       LifespanMode mode) {
  cfg.validate();
  require_same_grid(u0, rho0);
  const LPPartition part(u0.grid());
  const TimeGrid time = TimeGrid::covering(t_cap, cfg.dt);

  LifespanMeasurement m;
  m.P0 = initial_size(part, u0, rho0, cfg.params);
  const BesovParams lower = cfg.params.shifted(-1.0);

  std::optional<std::size_t> blowup;
  if (mode == LifespanMode::Direct) {
    const FWTrajectory traj = solve_fw_direct({u0, rho0, 0.0}, time);
    for (std::size_t i = 0; i < traj.stored_nodes(); ++i) {
      m.times.push_back(time.time(i));
      m.norm_sums.push_back(besov_norm(part, traj.u[i], cfg.params) +
                            besov_norm(part, traj.rho[i], lower));
    }
    blowup = traj.blowup_node;
  } else {
    const IterationTrace trace = run_scheme(u0, rho0, cfg, time);
    const std::size_t last = trace.iterates() - 1;
    for (std::size_t i = 0; i < time.nodes(); ++i) {
      m.times.push_back(time.time(i));
      m.norm_sums.push_back(trace.norm_sum(last, i));
    }
  }

  const double bound = 2.0 * m.P0 * (1.0 + kBoundSlack);
  for (std::size_t i = 0; i < m.norm_sums.size(); ++i) {
    if (m.norm_sums[i] > bound) {
      m.violated_at_start = i == 0;
      m.T_emp = i == 0 ? 0.0 : m.times[i - 1];
      return m;
    }
  }
  if (blowup) {
    m.blowup_time = time.time(*blowup);
    m.T_emp = m.times.back();
    return m;
  }
  m.T_emp = m.times.back();
  return m;
}

StabilityReport stability_experiment(const GridFunction &u0, const GridFunction &rho0,
                                     const GridFunction &du, const GridFunction &drho,
                                     const SchemeConfig &cfg) {
  cfg.validate();
  require_same_grid(u0, rho0);
  require_same_grid(u0, du);
  require_same_grid(u0, drho);
  const LPPartition part(u0.grid());
  const double P0 = initial_size(part, u0, rho0, cfg.params);
  const Lifespan horizon = lifespan(P0, cfg.C, cfg.t_cap);

  StabilityReport report;
  report.time = TimeGrid::covering(horizon.T, cfg.dt);
  auto perturbed = std::async(std::launch::async, [&] {
    return solve_fw_direct({u0 + du, rho0 + drho, 0.0}, report.time);
  });
  const FWTrajectory base = solve_fw_direct({u0, rho0, 0.0}, report.time);
  const FWTrajectory other = perturbed.get();
  report.truncated = !base.completed() || !other.completed();

  report.D = pair_norms(part, other.u, other.rho, base.u, base.rho, cfg.params, -1.0);
  for (std::size_t i = 0; i < report.D.size(); ++i)
    report.times.push_back(report.time.time(i));
  if (report.D.empty() || report.D[0] == 0.0)
    return report;

  // Ordinary least squares for log D = a + beta t over nodes with D > 0.
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0, count = 0.0;
  for (std::size_t i = 0; i < report.D.size(); ++i) {
    if (!(report.D[i] > 0.0))
      continue;
    const double t = report.times[i];
    const double y = std::log(report.D[i]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    count += 1.0;
  }
  const double denominator = count * stt - st * st;
  if (count < 2.0 || denominator <= 0.0)
    return report;
  report.fitted = true;
  report.beta_fit = (count * sty - st * sy) / denominator;

  for (std::size_t i = 0; i < report.D.size(); ++i) {
    const double ratio = report.D[i] / (report.D[0] * std::exp(report.beta_fit * report.times[i]));
    report.max_gronwall_ratio = std::max(report.max_gronwall_ratio, ratio);
  }
  report.gronwall_holds = report.max_gronwall_ratio <= kGronwallSlack;
  return report;
}

ContinuityReport continuity_experiment(const GridFunction &u0, const GridFunction &rho0,
                                       std::size_t j_max, const SchemeConfig &cfg) {
  cfg.validate();
  require_same_grid(u0, rho0);
  if (j_max < 3)
    fail(ErrorCode::InvalidArgument, "continuity experiment needs j_max >= 3");
  const GridPtr &grid = u0.grid();
  const LPPartition part(grid);
  const double P0 = initial_size(part, u0, rho0, cfg.params);
  const Lifespan horizon = lifespan(P0, cfg.C, cfg.t_cap);

  ContinuityReport report;
  report.time = TimeGrid::covering(horizon.T, cfg.dt);
  const FWTrajectory reference = solve_fw_direct({u0, rho0, 0.0}, report.time);
  if (!reference.completed())
    fail(ErrorCode::Numerical, "reference run blew up");

  std::vector<std::future<double>> jobs;
  for (std::size_t j = 1; j <= j_max; ++j) {
    const double eps = std::ldexp(1.0, -static_cast<int>(j));
    report.epsilons.push_back(eps);
    if (!report.first_subgrid_j && eps < grid->spacing())
      report.first_subgrid_j = j;
    jobs.push_back(std::async(std::launch::async, [&, eps, j] {
      try {
        const MollifierKernel kernel(grid, eps);
        const FWTrajectory run =
            solve_fw_direct({mollify(u0, kernel), mollify(rho0, kernel), 0.0}, report.time);
        if (!run.completed())
          fail(ErrorCode::Numerical, "run blew up");
        return sup_distance(part, run.u, run.rho, reference.u, reference.rho, cfg.params, 0.0);
      } catch (const Error &e) {
        fail(e.code(), "continuity member j = " + std::to_string(j) + ": " + e.what());
      }
    }));
  }
  for (auto &job : jobs)
    report.errors.push_back(job.get());
  for (std::size_t j = 1; j < report.errors.size(); ++j)
    report.nonincreasing = report.nonincreasing && report.errors[j] <= report.errors[j - 1];
  return report;
}

} // namespace fwlab
