// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_TRANSPORT_HPP
#define FWLAB_TRANSPORT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fwlab/besov.hpp"
#include "fwlab/spectral.hpp"

namespace fwlab {

/// Uniform time nodes t_i = i * dt, i = 0 .. steps. The final time is
/// defined as dt * steps.
struct TimeGrid {
  double dt = 0.0;
  std::size_t steps = 0;

  /// Smallest step count with dt <= max_dt that lands exactly on final_time.
  static TimeGrid covering(double final_time, double max_dt);

  double final_time() const noexcept { return dt * static_cast<double>(steps); }
  double time(std::size_t i) const noexcept { return dt * static_cast<double>(i); }
  std::size_t nodes() const noexcept { return steps + 1; }
};

/// d_t f + v d_x f = F on the torus with node values of v and F.
struct TransportProblem {
  std::vector<GridFunction> velocity; // one per time node
  std::vector<GridFunction> forcing;  // one per time node
  GridFunction initial;
  TimeGrid time;

  /// Time-independent velocity and forcing.
  static TransportProblem steady(const GridFunction &velocity, const GridFunction &forcing,
                                 GridFunction initial, TimeGrid time);

  /// Throws Error(InvalidArgument) on shape or grid mismatches.
  void validate() const;
};

struct TransportTrajectory {
  TimeGrid time;
  BesovParams params;
  std::vector<GridFunction> states;
  std::vector<double> state_norms;   // ||f(t_i)||_{B^s}
  std::vector<double> forcing_norms; // ||F(t_i)||_{B^s}
  std::vector<double> V_profile;     // int_0^t ||d_x v||_{B^{s-1}}, trapezoidal
};

/// Advective step bound dt <= 0.5 dx / max|v|.
double transport_step_limit(const TransportProblem &problem);

/// Classical RK4 for df/dt = -dealias(v d_x f) + F with v, F averaged at the
/// half step. Throws Error(Precondition) when dt exceeds the advective bound
/// and Error(Numerical) when a state stops being finite.
TransportTrajectory solve_transport(const TransportProblem &problem, const BesovParams &params);

struct TransportEstimateReport {
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> ratio;
  std::vector<std::uint8_t> holds;
  double max_violation_ratio = 0.0; // max lhs/rhs over nodes
  bool all_hold = true;
};

/// Relative slack granted to lhs <= rhs for floating-point rounding.
inline constexpr double kEstimateSlack = 1e-12;

/// ||f(t)|| <= e^{C V(t)} (||f_0|| + C int_0^t e^{-C V} ||F||) at every node.
TransportEstimateReport verify_transport_estimate(const TransportTrajectory &trajectory,
                                                  const BesovParams &params, double C);

struct TransportFit {
  double C = 0.0;
  std::vector<TransportTrajectory> trajectories;
};

inline constexpr double kTransportConstantCap = 1e6;
inline constexpr double kTransportConstantFloor = 1e-6;

/// Smallest C (relative bisection tolerance 1e-3) for which the estimate
/// holds on every node of every trajectory.
double fit_transport_constant(std::span<const TransportTrajectory> trajectories,
                              double cap = kTransportConstantCap);
TransportFit fit_transport_constant(std::span<const TransportProblem> problems,
                                    const BesovParams &params,
                                    double cap = kTransportConstantCap);

} // namespace fwlab

#endif // FWLAB_TRANSPORT_HPP
