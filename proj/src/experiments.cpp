// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "fwlab/error.hpp"
#include "fwlab/fw_system.hpp"
#include "fwlab/harness.hpp"
#include "fwlab/presets.hpp"
#include "fwlab/transport.hpp"

#ifndef FWLAB_VERSION_STRING
#define FWLAB_VERSION_STRING "0.0.0"
#endif

namespace fwlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPartitionTol = 1e-12;
constexpr double kReconstructionTol = 1e-10;
constexpr double kOrthogonalityTol = 1e-12;
constexpr double kMeanDriftTol = 1e-10;
constexpr double kScalingBand = 0.30;
constexpr double kBetaAgreement = 0.10;
constexpr double kContinuityTarget = 1e-5;
constexpr std::size_t kVerifyFields = 20;

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

GridFunction load_field(const std::string &name, double amplitude, const GridPtr &grid,
                        std::uint64_t seed) {
  if (is_field_preset(name))
    return field_preset(grid, name, amplitude, seed);
  return read_field_csv(name, grid);
}

std::pair<GridFunction, GridFunction> load_initial(const RunConfig &cfg, const GridPtr &grid,
                                                   double amplitude) {
  auto data = initial_preset(grid, cfg.preset, amplitude);
  if (!cfg.u0.empty())
    data.first = read_field_csv(cfg.u0, grid);
  if (!cfg.rho0.empty())
    data.second = read_field_csv(cfg.rho0, grid);
  return data;
}

Table field_table(const std::string &name, const GridFunction &f) {
  Table table{name, {"x", "value"}, {}};
  const auto samples = f.samples();
  for (std::size_t j = 0; j < samples.size(); ++j)
    table.rows.push_back({f.grid()->node(j), samples[j]});
  return table;
}

void add_verdict(ExperimentReport &report, std::string name, bool passed, std::string detail) {
  report.verdicts.push_back({std::move(name), passed, std::move(detail)});
}

// Transport constant fitted on the seeded random family over [0, T].
double fitted_transport_constant(const RunConfig &cfg, const GridPtr &grid,
                                 const BesovParams &params, ExperimentReport &report) {
  const TimeGrid time = TimeGrid::covering(cfg.T, cfg.dt);
  const auto family = random_transport_family(grid, time, cfg.family_size, cfg.seed);
  const double C = fit_transport_constant(family, params).C;
  report.scalars.emplace_back("C_emp", C);
  return C;
}

double scheme_constant(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const double C = cfg.C ? *cfg.C : fitted_transport_constant(cfg, grid, cfg.params, report);
  report.scalars.emplace_back("C", C);
  return C;
}

SchemeConfig scheme_config(const RunConfig &cfg, double C) {
  SchemeConfig s;
  s.params = cfg.params;
  s.C = C;
  s.n_max = cfg.n_max;
  s.dt = cfg.dt;
  s.t_cap = cfg.t_cap;
  return s;
}

void run_norm(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const LPPartition part(grid);
  const GridFunction f = load_field(cfg.field, cfg.amplitude, grid, cfg.seed);
  const auto blocks = block_lp_norms(part, f, cfg.params.p);
  Table table{"blocks", {"q", "block_lp_norm", "weighted"}, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const double q = static_cast<double>(i) - 1.0;
    table.rows.push_back({q, blocks[i], std::exp2(q * cfg.params.s) * blocks[i]});
  }
  const double norm = besov_norm_from_blocks(blocks, cfg.params.s, cfg.params.r);
  report.tables.push_back(std::move(table));
  report.tables.push_back(field_table("field", f));
  report.tables.push_back(mask_table(part));
  report.scalars.emplace_back("q_max", part.q_max());
  report.scalars.emplace_back("besov_norm", norm);
  add_verdict(report, "norm_finite", std::isfinite(norm), "||f||_B = " + fmt(norm));
}

void run_transport(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const TimeGrid time = TimeGrid::covering(cfg.T, cfg.dt);
  const GridFunction v = load_field(cfg.velocity, cfg.velocity_amplitude, grid, cfg.seed + 2);
  const GridFunction F = load_field(cfg.forcing, cfg.forcing_amplitude, grid, cfg.seed + 3);
  const GridFunction f0 = load_field(cfg.field, cfg.amplitude, grid, cfg.seed + 4);
  const TransportTrajectory traj =
      solve_transport(TransportProblem::steady(v, F, f0, time), cfg.params);

  double C = cfg.C.value_or(0.0);
  if (cfg.fit_constant || !cfg.C) {
    const double C_emp = fitted_transport_constant(cfg, grid, cfg.params, report);
    if (!cfg.C)
      C = C_emp;
    const auto held_out = random_transport_family(grid, time, cfg.family_size, cfg.seed + 1);
    std::vector<std::future<TransportEstimateReport>> jobs;
    for (const auto &problem : held_out)
      jobs.push_back(std::async(std::launch::async, [&problem, &cfg, C_emp] {
        return verify_transport_estimate(solve_transport(problem, cfg.params), cfg.params, C_emp);
      }));
    std::size_t violations = 0;
    double worst = 0.0;
    for (auto &job : jobs) {
      const auto est = job.get();
      for (auto h : est.holds)
        violations += h ? 0 : 1;
      worst = std::max(worst, est.max_violation_ratio);
    }
    report.scalars.emplace_back("held_out_violations", static_cast<double>(violations));
    report.scalars.emplace_back("held_out_max_ratio", worst);
    add_verdict(report, "held_out_revalidation", violations == 0,
                std::to_string(violations) + " violating nodes at C_emp = " + fmt(C_emp));
  }
  report.scalars.emplace_back("C", C);

  const auto est = verify_transport_estimate(traj, cfg.params, C);
  Table table{"transport", {"t", "besov_norm", "V", "lhs", "rhs", "ratio"}, {}};
  for (std::size_t i = 0; i < time.nodes(); ++i)
    table.rows.push_back({time.time(i), traj.state_norms[i], traj.V_profile[i], est.lhs[i],
                          est.rhs[i], est.ratio[i]});
  report.tables.push_back(std::move(table));
  report.tables.push_back(field_table("f_final", traj.states.back()));
  report.scalars.emplace_back("max_violation_ratio", est.max_violation_ratio);
  add_verdict(report, "estimate_holds", est.all_hold,
              "max lhs/rhs = " + fmt(est.max_violation_ratio));
}

void run_simulate(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const LPPartition part(grid);
  const auto [u0, rho0] = load_initial(cfg, grid, cfg.amplitude);
  const FWTrajectory traj = solve_fw_direct({u0, rho0, 0.0}, cfg.T, cfg.dt);
  const BesovParams lower = cfg.params.shifted(-1.0);
  Table table{"trajectory", {"t", "norm_u_Bs", "norm_rho_Bsm1", "mean_u", "mean_rho"}, {}};
  double drift_u = 0.0;
  double drift_rho = 0.0;
  for (std::size_t i = 0; i < traj.stored_nodes(); ++i) {
    table.rows.push_back({traj.time.time(i), besov_norm(part, traj.u[i], cfg.params),
                          besov_norm(part, traj.rho[i], lower), traj.mean_u[i], traj.mean_rho[i]});
    drift_u = std::max(drift_u, std::abs(traj.mean_u[i] - traj.mean_u[0]));
    drift_rho = std::max(drift_rho, std::abs(traj.mean_rho[i] - traj.mean_rho[0]));
  }
  report.tables.push_back(std::move(table));
  report.tables.push_back(field_table("u_final", traj.u.back()));
  report.tables.push_back(field_table("rho_final", traj.rho.back()));
  report.scalars.emplace_back("P0", initial_size(part, u0, rho0, cfg.params));
  report.scalars.emplace_back("mean_u_drift", drift_u);
  report.scalars.emplace_back("mean_rho_drift", drift_rho);
  report.scalars.emplace_back("final_time", traj.time.time(traj.stored_nodes() - 1));
  add_verdict(report, "no_blowup", traj.completed(),
              traj.completed() ? "completed"
                               : "non-finite state at t = " +
                                     fmt(traj.time.time(*traj.blowup_node)));
  const double scale_u = std::max(1.0, std::abs(traj.mean_u[0]));
  const double scale_rho = std::max(1.0, std::abs(traj.mean_rho[0]));
  add_verdict(report, "means_conserved",
              drift_u <= kMeanDriftTol * scale_u && drift_rho <= kMeanDriftTol * scale_rho,
              "drift u " + fmt(drift_u) + ", rho " + fmt(drift_rho));
}

void run_iterate(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const LPPartition part(grid);
  const auto [u0, rho0] = load_initial(cfg, grid, cfg.amplitude);
  const double C = scheme_constant(cfg, grid, report);
  const IterationTrace trace = run_scheme(u0, rho0, scheme_config(cfg, C));
  const FWTrajectory direct = solve_fw_direct({u0, rho0, 0.0}, trace.time);

  Table scheme{"scheme", {"n", "t", "norm_sum", "bound_312", "bound_313", "d_n"}, {}};
  for (std::size_t n = 0; n < trace.iterates(); ++n) {
    const double d = n < trace.d.size() ? trace.d[n] : kNaN;
    for (std::size_t i = 0; i < trace.time.nodes(); ++i)
      scheme.rows.push_back({static_cast<double>(n), trace.time.time(i), trace.norm_sum(n, i),
                             static_cast<double>(trace.bound_312[n][i]),
                             static_cast<double>(trace.bound_313[n][i]), d});
  }
  report.tables.push_back(std::move(scheme));

  Table steps{"contraction", {"n", "d_n", "ratio"}, {}};
  bool contracting = true;
  for (std::size_t n = 0; n < trace.d.size(); ++n) {
    const double ratio = n > 0 && trace.d[n - 1] > 0.0 ? trace.d[n] / trace.d[n - 1] : kNaN;
    steps.rows.push_back({static_cast<double>(n), trace.d[n], ratio});
    // d_{n+1} / d_n < 1 for n >= 2, i.e. ratio rows n >= 3.
    if (n >= 3)
      contracting = contracting && ratio < 1.0;
  }
  report.tables.push_back(std::move(steps));

  const std::size_t last = trace.iterates() - 1;
  const double distance = sup_distance(part, trace.u[last], trace.rho[last], direct.u,
                                       direct.rho, cfg.params, -1.0);
  report.scalars.emplace_back("P0", trace.P0);
  report.scalars.emplace_back("T_lifespan", trace.horizon.T);
  report.scalars.emplace_back("distance_last_to_direct", distance);
  add_verdict(report, "bounds_hold", trace.all_bounds_hold(),
              "norm sums against P0/sqrt(1-4CP0^2t) and 2P0");
  add_verdict(report, "contraction", contracting, "d_{n+1}/d_n < 1 for n >= 2");
  add_verdict(report, "direct_completed", direct.completed(), "reference run on the horizon");
}

void run_lifespan(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const bool scheme_mode = cfg.mode == "scheme";
  const double C = scheme_mode ? scheme_constant(cfg, grid, report) : cfg.C.value_or(1.0);
  const SchemeConfig scfg = scheme_config(cfg, C);
  const LifespanMode mode = scheme_mode ? LifespanMode::Scheme : LifespanMode::Direct;

  std::vector<std::future<LifespanMeasurement>> jobs;
  for (double a : cfg.amplitudes)
    jobs.push_back(std::async(std::launch::async, [&, a] {
      const auto [u0, rho0] = load_initial(cfg, grid, a);
      return empirical_lifespan(u0, rho0, scfg, cfg.t_cap, mode);
    }));

  Table table{"lifespan", {"a", "P0", "T_emp", "product"}, {}};
  Table detail{"lifespan_detail", {"a", "T_formula", "blowup_time", "violated_at_start"}, {}};
  double log_sum = 0.0;
  std::vector<double> products;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const LifespanMeasurement m = jobs[k].get();
    const double a = cfg.amplitudes[k];
    const double product = m.T_emp * m.P0 * m.P0;
    table.rows.push_back({a, m.P0, m.T_emp, product});
    detail.rows.push_back({a, lifespan(m.P0, C, cfg.t_cap).T, m.blowup_time.value_or(kNaN),
                           m.violated_at_start ? 1.0 : 0.0});
    products.push_back(product);
    log_sum += std::log(product);
  }
  report.tables.push_back(std::move(table));
  report.tables.push_back(std::move(detail));

  const double geometric_mean = std::exp(log_sum / static_cast<double>(products.size()));
  double deviation = 0.0;
  for (double product : products)
    deviation = std::max(deviation, std::abs(product / geometric_mean - 1.0));
  if (!std::isfinite(geometric_mean))
    deviation = kInfinity;
  report.scalars.emplace_back("geometric_mean_product", geometric_mean);
  report.scalars.emplace_back("max_relative_deviation", deviation);
  add_verdict(report, "scaling_within_30pct", deviation <= kScalingBand,
              "max |product/geomean - 1| = " + fmt(deviation));
}

void run_stability(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const auto [u0, rho0] = load_initial(cfg, grid, cfg.amplitude);
  const double C = scheme_constant(cfg, grid, report);
  const SchemeConfig scfg = scheme_config(cfg, C);
  const double m = std::max(1.0, std::round(cfg.L)) / cfg.L;

  std::vector<std::future<StabilityReport>> jobs;
  for (double delta : cfg.deltas)
    jobs.push_back(std::async(std::launch::async, [&, delta] {
      const auto du =
          GridFunction::from_function(grid, [=](double x) { return delta * std::sin(2 * m * x); });
      const auto drho =
          GridFunction::from_function(grid, [=](double x) { return delta * std::cos(2 * m * x); });
      return stability_experiment(u0, rho0, du, drho, scfg);
    }));

  Table fits{"stability_fits", {"delta", "beta_fit", "max_gronwall_ratio", "truncated"}, {}};
  std::vector<double> betas;
  bool all_fitted = true;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const StabilityReport s = jobs[k].get();
    const double delta = cfg.deltas[k];
    Table curve{"stability_" + std::to_string(k), {"t", "D", "gronwall_bound"}, {}};
    for (std::size_t i = 0; i < s.D.size(); ++i)
      curve.rows.push_back(
          {s.times[i], s.D[i], s.fitted ? s.D[0] * std::exp(s.beta_fit * s.times[i]) : kNaN});
    report.tables.push_back(std::move(curve));
    fits.rows.push_back({delta, s.fitted ? s.beta_fit : kNaN, s.max_gronwall_ratio,
                         s.truncated ? 1.0 : 0.0});
    all_fitted = all_fitted && s.fitted;
    betas.push_back(s.beta_fit);
    add_verdict(report, "gronwall_" + std::to_string(k), s.fitted && s.gronwall_holds,
                "delta " + fmt(delta) + ": max D/(D0 e^{beta t}) = " + fmt(s.max_gronwall_ratio));
  }
  report.tables.push_back(std::move(fits));

  const auto [lo, hi] = std::minmax_element(betas.begin(), betas.end());
  double scale = 0.0;
  for (double b : betas)
    scale = std::max(scale, std::abs(b));
  const double spread = scale > 0.0 ? (*hi - *lo) / scale : 0.0;
  report.scalars.emplace_back("beta_spread", spread);
  add_verdict(report, "beta_agreement", all_fitted && spread <= kBetaAgreement,
              "(max - min) / max|beta| = " + fmt(spread));
}

void run_continuity(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const auto [u0, rho0] = load_initial(cfg, grid, cfg.amplitude);
  const double C = scheme_constant(cfg, grid, report);
  const ContinuityReport c = continuity_experiment(u0, rho0, cfg.j_max, scheme_config(cfg, C));
  Table table{"continuity", {"j", "eps", "error"}, {}};
  for (std::size_t k = 0; k < c.errors.size(); ++k)
    table.rows.push_back({static_cast<double>(k + 1), c.epsilons[k], c.errors[k]});
  report.tables.push_back(std::move(table));
  add_verdict(report, "nonincreasing", c.nonincreasing, "errors nonincreasing in j");
  if (c.first_subgrid_j) {
    const double error = c.errors[*c.first_subgrid_j - 1];
    report.scalars.emplace_back("first_subgrid_j", static_cast<double>(*c.first_subgrid_j));
    report.scalars.emplace_back("error_at_subgrid_j", error);
    add_verdict(report, "reaches_target", error <= kContinuityTarget,
                "error " + fmt(error) + " at j = " + std::to_string(*c.first_subgrid_j));
  } else {
    add_verdict(report, "reaches_target", false, "no eps_j below dx; raise j_max");
  }
}

void run_verify(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const LPPartition part(grid);
  std::mt19937_64 rng(cfg.seed);
  const std::size_t k_max = std::max<std::size_t>(1, grid->size() / 4);
  std::vector<GridFunction> fields;
  for (std::size_t m = 0; m < kVerifyFields; ++m)
    fields.push_back(random_bandlimited(grid, rng, k_max, 1.0));

  Table table{"verify",
              {"index", "reconstruction_error", "orthogonality_max", "product_ratio",
               "multiplier_ratio"},
              {}};
  double worst_rec = 0.0, worst_orth = 0.0, worst_prod = 0.0, worst_mult = 0.0;
  for (std::size_t m = 0; m < fields.size(); ++m) {
    const GridFunction &f = fields[m];
    const double f2 = lp_norm(f, 2.0);
    std::vector<GridFunction> blocks;
    GridFunction sum = GridFunction::zeros(grid);
    for (int q = -1; q <= part.q_max(); ++q) {
      blocks.push_back(dyadic_block(part, f, q));
      sum = sum + blocks.back();
    }
    const double rec = lp_norm(sum - f, 2.0) / f2;
    double orth = 0.0;
    for (int p = -1; p <= part.q_max(); ++p)
      for (int q = -1; q <= part.q_max(); ++q)
        if (std::abs(p - q) >= 2)
          orth = std::max(orth, lp_norm(dyadic_block(part, blocks[q + 1], p), 2.0) / f2);
    const double prod = check_product_estimate(part, f, fields[(m + 1) % fields.size()], cfg.params);
    const double mult = check_multiplier_bound(part, f, cfg.params);
    table.rows.push_back({static_cast<double>(m), rec, orth, prod, mult});
    worst_rec = std::max(worst_rec, rec);
    worst_orth = std::max(worst_orth, orth);
    worst_prod = std::max(worst_prod, prod);
    worst_mult = std::max(worst_mult, mult);
  }
  report.tables.push_back(std::move(table));
  const double residual = part.partition_residual();
  report.scalars.emplace_back("partition_residual", residual);
  report.scalars.emplace_back("max_reconstruction_error", worst_rec);
  report.scalars.emplace_back("max_orthogonality", worst_orth);
  report.scalars.emplace_back("max_product_ratio", worst_prod);
  report.scalars.emplace_back("max_multiplier_ratio", worst_mult);
  add_verdict(report, "partition", residual <= kPartitionTol, "residual " + fmt(residual));
  add_verdict(report, "reconstruction", worst_rec <= kReconstructionTol, fmt(worst_rec));
  add_verdict(report, "orthogonality", worst_orth <= kOrthogonalityTol, fmt(worst_orth));
  add_verdict(report, "estimates_finite", std::isfinite(worst_prod) && std::isfinite(worst_mult),
              "product " + fmt(worst_prod) + ", multiplier " + fmt(worst_mult));
}

void run_partition_check(const RunConfig &cfg, const GridPtr &grid, ExperimentReport &report) {
  const LPPartition part(grid);
  const double residual = part.partition_residual();
  report.tables.push_back(Table{"partition",
                                {"N", "L", "q_max", "residual"},
                                {{static_cast<double>(cfg.N), cfg.L,
                                  static_cast<double>(part.q_max()), residual}}});
  report.scalars.emplace_back("partition_residual", residual);
  add_verdict(report, "partition", residual <= kPartitionTol, "residual " + fmt(residual));
}

} // namespace

bool ExperimentReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.passed; });
}

const Table *ExperimentReport::table(std::string_view name) const {
  for (const auto &t : tables)
    if (t.name == name)
      return &t;
  return nullptr;
}

std::optional<double> ExperimentReport::scalar(std::string_view name) const {
  for (const auto &[key, value] : scalars)
    if (key == name)
      return value;
  return std::nullopt;
}

std::string_view library_version() { return FWLAB_VERSION_STRING; }

ExperimentReport run_experiment(const RunConfig &cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = cfg;
  report.version = std::string(library_version());
  try {
    const GridPtr grid = Grid::make(cfg.N, cfg.L);
    switch (cfg.kind) {
    case ExperimentKind::Norm:
      run_norm(cfg, grid, report);
      break;
    case ExperimentKind::Transport:
      run_transport(cfg, grid, report);
      break;
    case ExperimentKind::Simulate:
      run_simulate(cfg, grid, report);
      break;
    case ExperimentKind::Iterate:
      run_iterate(cfg, grid, report);
      break;
    case ExperimentKind::Lifespan:
      run_lifespan(cfg, grid, report);
      break;
    case ExperimentKind::Stability:
      run_stability(cfg, grid, report);
      break;
    case ExperimentKind::Continuity:
      run_continuity(cfg, grid, report);
      break;
    case ExperimentKind::Verify:
      run_verify(cfg, grid, report);
      break;
    case ExperimentKind::PartitionCheck:
      run_partition_check(cfg, grid, report);
      break;
    }
  } catch (const Error &e) {
    fail(e.code(), std::string(kind_name(cfg.kind)) + " experiment: " + e.what());
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string summary_text(const ExperimentReport &report) {
  std::ostringstream txt;
  txt << "fwlab " << report.version << "\n";
  txt << "experiment: " << kind_name(report.config.kind) << "\n";
  txt << "wall_seconds: " << fmt(report.wall_seconds) << "\n\n";
  txt << "config:\n" << serialize_config(report.config) << "\n";
  txt << "scalars:\n";
  for (const auto &[name, value] : report.scalars)
    txt << "  " << name << " = " << fmt(value) << "\n";
  txt << "\nverdicts:\n";
  for (const auto &v : report.verdicts)
    txt << "  [" << (v.passed ? "PASS" : "FAIL") << "] " << v.name << ": " << v.detail << "\n";
  txt << "\nresult: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return txt.str();
}

void write_report(const ExperimentReport &report, const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    fail(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());

  auto write = [&dir](const std::string &file, const std::string &text) {
    const auto path = dir / file;
    std::ofstream out(path, std::ios::binary);
    if (!out)
      fail(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
      fail(ErrorCode::Io, "write failed for " + path.string());
  };

  for (const auto &table : report.tables)
    write(table.name + ".csv", table_csv(table));

  std::string summary_csv = "name,value\n";
  for (const auto &[name, value] : report.scalars) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    summary_csv += name + "," + buffer + "\n";
  }
  for (const auto &v : report.verdicts)
    summary_csv += "verdict_" + v.name + "," + (v.passed ? "1" : "0") + "\n";
  write("summary.csv", summary_csv);

  const std::string config = serialize_config(report.config);
  write("config.json", config);

  write("summary.txt", summary_text(report));
}

} // namespace fwlab
