// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_BESOV_HPP
#define FWLAB_BESOV_HPP

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwlab/spectral.hpp"

namespace fwlab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Besov index triple (s, p, r). Norms are defined for any real s and
/// p, r in [1, inf]; the admissibility checks below only matter for the
/// well-posedness and transport experiments.
struct BesovParams {
  double s = 3.0;
  double p = 2.0;
  double r = 2.0;

  /// Throws Error(InvalidArgument) unless p, r are in [1, inf] and s is finite.
  void validate() const;

  BesovParams shifted(double ds) const { return {s + ds, p, r}; }
  bool operator==(const BesovParams &) const = default;

  /// Existence theory hypothesis: s > max(2 + 1/p, 5/2) and r < inf.
  /// Returns the violated inequality, or nullopt when admissible.
  std::optional<std::string> wellposedness_violation() const;
  bool admissible_for_wellposedness() const { return !wellposedness_violation(); }

  /// Transport estimate hypothesis: s > 1 + 1/p with r in (1, inf), or
  /// s >= 1 + 1/p with r = 1.
  std::optional<std::string> transport_violation() const;
};

/// Smooth radial cutoff: 1 on |xi| <= 3/4, 0 on |xi| >= 4/3, C-infinity
/// transition glued from exp(-1/x).
double lp_chi(double xi);
/// Ring function phi(xi) = chi(xi/2) - chi(xi), supported in 3/4 <= |xi| <= 8/3.
double lp_phi(double xi);

/// Littlewood-Paley masks evaluated on one grid (storage order).
class LPPartition {
public:
  explicit LPPartition(GridPtr grid);

  const GridPtr &grid() const noexcept { return grid_; }
  /// Last q >= 0 whose ring mask is nonzero on the grid. Every block above
  /// it is identically zero, so sums truncated at q_max are exact.
  int q_max() const noexcept { return q_max_; }

  std::span<const double> chi_mask() const noexcept { return chi_; }
  std::span<const double> phi_mask(int q) const;
  /// Mask of Delta_q for q >= -1 (chi for q = -1); empty span beyond q_max.
  std::span<const double> block_mask(int q) const;

  /// max over grid wavenumbers of |chi + sum_q phi(2^-q xi) - 1|.
  double partition_residual() const;

private:
  GridPtr grid_;
  int q_max_ = 0;
  std::vector<double> chi_;
  std::vector<std::vector<double>> phi_;
};

/// Delta_q f. Zero for q <= -2 and q > q_max.
GridFunction dyadic_block(const LPPartition &part, const GridFunction &f, int q);
/// S_q f as the single mask chi(2^-q D). Requires q >= 0.
GridFunction low_cutoff(const LPPartition &part, const GridFunction &f, int q);
/// S_q f as sum_{p=-1}^{q-1} Delta_p f.
GridFunction low_cutoff_by_blocks(const LPPartition &part, const GridFunction &f, int q);

/// ||Delta_q f||_{L^p} for q = -1 .. q_max (index 0 holds q = -1).
std::vector<double> block_lp_norms(const LPPartition &part, const GridFunction &f, double p);
/// Weighted l^r combination of precomputed block norms.
double besov_norm_from_blocks(std::span<const double> block_norms, double s, double r);
double besov_norm(const LPPartition &part, const GridFunction &f, const BesovParams &params);

/// Friedrichs mollifier J_eps on a fixed grid: periodic convolution with
/// eps^-1 phi(x/eps), phi(x) proportional to exp(-1/(1-x^2)) on (-1, 1),
/// normalized to unit discrete mass on the grid.
class MollifierKernel {
public:
  /// Throws Error(InvalidArgument) unless 0 < eps < pi*L.
  MollifierKernel(GridPtr grid, double epsilon);

  double epsilon() const noexcept { return epsilon_; }
  const GridPtr &grid() const noexcept { return grid_; }
  /// Kernel samples at the grid nodes (periodically wrapped around x = 0).
  std::span<const double> weights() const noexcept { return weights_; }
  /// dx * sum of weights; 1 up to rounding.
  double discrete_mass() const;
  /// Spectral transfer function 2*pi*L * hat(kernel), storage order.
  std::span<const double> transfer() const noexcept { return transfer_; }

  /// Unnormalized profile exp(-1/(1-x^2)) on (-1, 1), zero elsewhere.
  static double profile(double x);

private:
  GridPtr grid_;
  double epsilon_;
  std::vector<double> weights_;
  std::vector<double> transfer_;
};

GridFunction mollify(const GridFunction &f, const MollifierKernel &kernel);
GridFunction mollify(const GridFunction &f, double epsilon);

/// ||fg||_{B^{s-1}} / (||f||_{B^{s-1}} ||g||_{B^s}). Throws on zero denominators.
double check_product_estimate(const LPPartition &part, const GridFunction &f,
                              const GridFunction &g, const BesovParams &params);
/// ||Lambda^{-1} d_x f||_{B^s} / ||f||_{B^{s-1}}. Throws when f is zero.
double check_multiplier_bound(const LPPartition &part, const GridFunction &f,
                              const BesovParams &params);

} // namespace fwlab

#endif // FWLAB_BESOV_HPP
