// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_FW_SYSTEM_HPP
#define FWLAB_FW_SYSTEM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fwlab/besov.hpp"
#include "fwlab/spectral.hpp"
#include "fwlab/transport.hpp"

namespace fwlab {

/// Two-component Fornberg-Whitham state: velocity u and elevation
/// rho = eta - 1 at time t.
struct FWState {
  GridFunction u;
  GridFunction rho;
  double t = 0.0;
};

struct FWRates {
  GridFunction du;
  GridFunction drho;
};

/// u_t   = -u u_x + Lambda^{-1} d_x (rho - u)
/// rho_t = -u rho_x - rho u_x - u_x
/// Products are dealiased with the 2/3 rule.
FWRates fw_rhs(const GridFunction &u, const GridFunction &rho);
inline FWRates fw_rhs(const FWState &state) { return fw_rhs(state.u, state.rho); }

struct FWTrajectory {
  TimeGrid time;
  std::vector<GridFunction> u;
  std::vector<GridFunction> rho;
  std::vector<double> mean_u;
  std::vector<double> mean_rho;
  /// First node whose state was not finite. Stored states stop before it.
  std::optional<std::size_t> blowup_node;

  bool completed() const noexcept { return !blowup_node.has_value(); }
  std::size_t stored_nodes() const noexcept { return u.size(); }
  FWState state(std::size_t i) const { return {u[i], rho[i], time.time(i)}; }
};

/// dt <= 0.5 dx / max(1, max|u_0|).
double fw_step_limit(const GridFunction &u0);

/// Direct RK4 integration of the system. Non-finite states end the run and
/// are recorded in blowup_node instead of raising.
FWTrajectory solve_fw_direct(const FWState &initial, TimeGrid time);
FWTrajectory solve_fw_direct(const FWState &initial, double final_time, double dt);

struct Lifespan {
  double T = 0.0;
  bool capped = false; // zero data: the formula is unbounded, T is the cap
};

/// T = 3 / (16 C P0^2).
Lifespan lifespan(double P0, double C, double cap);

/// P0 = ||u0||_{B^s} + ||rho0||_{B^{s-1}}.
double initial_size(const LPPartition &part, const GridFunction &u0, const GridFunction &rho0,
                    const BesovParams &params);

struct SchemeConfig {
  BesovParams params;
  double C = 1.0;
  std::size_t n_max = 10;
  double dt = 0.01;
  /// Lifespan used when the data are zero.
  double t_cap = 4.0;

  /// Mollifier width for the initial data of iterate n + 1.
  static double mollifier_width(std::size_t n) { return 1.0 / static_cast<double>(n + 1); }

  /// Throws Error(Inadmissible) or Error(InvalidArgument).
  void validate() const;
};

struct IterationTrace {
  TimeGrid time;
  double P0 = 0.0;
  double C = 0.0;
  Lifespan horizon;
  // Indexed [n][node], n = 0 .. n_max.
  std::vector<std::vector<GridFunction>> u;
  std::vector<std::vector<GridFunction>> rho;
  std::vector<std::vector<double>> norm_u;   // ||u^n(t)||_{B^s}
  std::vector<std::vector<double>> norm_rho; // ||rho^n(t)||_{B^{s-1}}
  std::vector<std::vector<double>> V;        // V_n(t) = int ||u^n_x||_{B^{s-1}}
  std::vector<std::vector<std::uint8_t>> bound_312;
  std::vector<std::vector<std::uint8_t>> bound_313;
  /// d_n = sup_t ||u^{n+1}-u^n||_{B^{s-1}} + ||rho^{n+1}-rho^n||_{B^{s-2}}, n = 0 .. n_max-1.
  std::vector<double> d;

  std::size_t iterates() const noexcept { return u.size(); }
  double norm_sum(std::size_t n, std::size_t node) const {
    return norm_u[n][node] + norm_rho[n][node];
  }
  /// P0 / sqrt(1 - 4 C P0^2 t).
  double bound_312_value(double t) const;
  double bound_313_value() const { return 2.0 * P0; }
  bool all_bounds_hold() const;
};

/// Mollified transport iteration starting from u^0 = rho^0 = 0 on
/// [0, lifespan(P0, C)].
IterationTrace run_scheme(const GridFunction &u0, const GridFunction &rho0,
                          const SchemeConfig &cfg);
/// Same iteration on an explicit time grid (no lifespan assertion).
IterationTrace run_scheme(const GridFunction &u0, const GridFunction &rho0,
                          const SchemeConfig &cfg, TimeGrid time);

/// sup_t ||a_u - b_u||_{B^{s+ds}} + ||a_rho - b_rho||_{B^{s-1+ds}} over common nodes.
double sup_distance(const LPPartition &part, const std::vector<GridFunction> &a_u,
                    const std::vector<GridFunction> &a_rho, const std::vector<GridFunction> &b_u,
                    const std::vector<GridFunction> &b_rho, const BesovParams &params,
                    double ds);

enum class LifespanMode { Direct, Scheme };

struct LifespanMeasurement {
  double P0 = 0.0;
  double T_emp = 0.0;
  bool violated_at_start = false;
  std::optional<double> blowup_time;
  std::vector<double> times;
  std::vector<double> norm_sums;
};

/// Last time node before ||u||_{B^s} + ||rho||_{B^{s-1}} first exceeds 2 P0.
LifespanMeasurement empirical_lifespan(const GridFunction &u0, const GridFunction &rho0,
                                       const SchemeConfig &cfg, double t_cap,
                                       LifespanMode mode = LifespanMode::Direct);

struct StabilityReport {
  TimeGrid time;
  std::vector<double> times;
  std::vector<double> D; // ||w||_{B^{s-1}} + ||v||_{B^{s-2}}
  bool fitted = false;
  double beta_fit = 0.0;
  double max_gronwall_ratio = 0.0; // max D(t) / (D(0) e^{beta t})
  bool gronwall_holds = true;      // ratio <= kGronwallSlack everywhere
  bool truncated = false;          // a run blew up before the horizon
};

inline constexpr double kGronwallSlack = 1.05;

/// Solves from (u0, rho0) and (u0 + du, rho0 + drho) on [0, lifespan(P0, C)]
/// and fits log D(t) by least squares.
StabilityReport stability_experiment(const GridFunction &u0, const GridFunction &rho0,
                                     const GridFunction &du, const GridFunction &drho,
                                     const SchemeConfig &cfg);

struct ContinuityReport {
  TimeGrid time;
  std::vector<double> epsilons; // eps_j = 2^-j, j = 1 .. j_max
  std::vector<double> errors;   // sup_t ||u^j - u||_{B^s} + ||rho^j - rho||_{B^{s-1}}
  bool nonincreasing = true;
  /// First j with eps_j < dx (mollifier is the identity on the grid), if any.
  std::optional<std::size_t> first_subgrid_j;
};

ContinuityReport continuity_experiment(const GridFunction &u0, const GridFunction &rho0,
                                       std::size_t j_max, const SchemeConfig &cfg);

} // namespace fwlab

#endif // FWLAB_FW_SYSTEM_HPP
