// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fwlab/error.hpp"

namespace fwlab {

// ---------------------------------------------------------------------------
// BesovParams

void BesovParams::validate() const {
  if (!std::isfinite(s))
    fail(ErrorCode::InvalidArgument, "Besov regularity s must be finite");
  if (std::isnan(p) || p < 1.0)
    fail(ErrorCode::InvalidArgument, "Besov integrability p must lie in [1, inf]");
  if (std::isnan(r) || r < 1.0)
    fail(ErrorCode::InvalidArgument, "Besov summability r must lie in [1, inf]");
}

std::optional<std::string> BesovParams::wellposedness_violation() const {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double bound = std::max(2.0 + inv_p, 2.5);
  if (!(s > bound)) {
    std::ostringstream os;
    os << "s > max{2 + 1/p, 5/2} = " << bound << " violated by s = " << s;
    return os.str();
  }
  if (std::isinf(r))
    return std::string("r in [1, inf) violated by r = inf");
  return std::nullopt;
}

std::optional<std::string> BesovParams::transport_violation() const {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double bound = 1.0 + inv_p;
  if (std::isinf(r))
    return std::string("r = inf is not supported by the transport estimate");
  if (r == 1.0) {
    if (s >= bound)
      return std::nullopt;
    std::ostringstream os;
    os << "s >= 1 + 1/p = " << bound << " (r = 1) violated by s = " << s;
    return os.str();
  }
  if (s > bound)
    return std::nullopt;
  std::ostringstream os;
  os << "s > 1 + 1/p = " << bound << " violated by s = " << s;
  return os.str();
}

// ---------------------------------------------------------------------------
// Littlewood-Paley functions

namespace {

constexpr double kInner = 0.75;
constexpr double kOuter = 4.0 / 3.0;

double glue(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

} // namespace

double lp_chi(double xi) {
  const double a = std::abs(xi);
  if (a <= kInner)
    return 1.0;
  if (a >= kOuter)
    return 0.0;
  const double up = glue(kOuter - a);
  const double down = glue(a - kInner);
  return up / (up + down);
}

double lp_phi(double xi) { return std::max(0.0, lp_chi(0.5 * xi) - lp_chi(xi)); }

LPPartition::LPPartition(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_)
    fail(ErrorCode::InvalidArgument, "partition needs a grid");
  const auto xi = grid_->wavenumbers();
  chi_.resize(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i)
    chi_[i] = lp_chi(xi[i]);

  // Smallest Q with chi(2^-(Q+1) xi) == 1 on the whole grid; the telescoped
  // sum up to Q is then exactly 1 at every grid wavenumber.
  const double xi_max = grid_->max_wavenumber();
  int q = 0;
  while (std::ldexp(kInner, q + 1) < xi_max)
    ++q;
  for (int k = 0; k <= q; ++k) {
    std::vector<double> mask(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i)
      mask[i] = lp_phi(std::ldexp(xi[i], -k));
    phi_.push_back(std::move(mask));
  }
  while (!phi_.empty() &&
         std::all_of(phi_.back().begin(), phi_.back().end(), [](double v) { return v == 0.0; }))
    phi_.pop_back();
  q_max_ = static_cast<int>(phi_.size()) - 1;
}

std::span<const double> LPPartition::phi_mask(int q) const {
  if (q < 0 || q > q_max_)
    return {};
  return phi_[static_cast<std::size_t>(q)];
}

std::span<const double> LPPartition::block_mask(int q) const {
  if (q == -1)
    return chi_;
  return phi_mask(q);
}

double LPPartition::partition_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < chi_.size(); ++i) {
    double sum = chi_[i];
    for (const auto &mask : phi_)
      sum += mask[i];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Blocks and norms

namespace {

void require_partition_grid(const LPPartition &part, const GridFunction &f) {
  if (!f.grid() || !(*f.grid() == *part.grid()))
    fail(ErrorCode::InvalidArgument, "field and partition live on different grids");
}

} // namespace

GridFunction dyadic_block(const LPPartition &part, const GridFunction &f, int q) {
  require_partition_grid(part, f);
  const auto mask = part.block_mask(q);
  if (mask.empty())
    return GridFunction::zeros(f.grid());
  return apply_mask(f, mask);
}

GridFunction low_cutoff(const LPPartition &part, const GridFunction &f, int q) {
  require_partition_grid(part, f);
  if (q < 0)
    fail(ErrorCode::InvalidArgument, "low-frequency cutoff S_q needs q >= 0");
  const auto xi = f.grid()->wavenumbers();
  std::vector<double> mask(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i)
    mask[i] = lp_chi(std::ldexp(xi[i], -q));
  return apply_mask(f, mask);
}

GridFunction low_cutoff_by_blocks(const LPPartition &part, const GridFunction &f, int q) {
  require_partition_grid(part, f);
  if (q < 0)
    fail(ErrorCode::InvalidArgument, "low-frequency cutoff S_q needs q >= 0");
  GridFunction sum = GridFunction::zeros(f.grid());
  for (int k = -1; k <= std::min(q - 1, part.q_max()); ++k)
    sum = sum + dyadic_block(part, f, k);
  return sum;
}

std::vector<double> block_lp_norms(const LPPartition &part, const GridFunction &f, double p) {
  require_partition_grid(part, f);
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(part.q_max() + 2));
  const bool zero = f.is_zero();
  for (int q = -1; q <= part.q_max(); ++q)
    norms.push_back(zero ? 0.0 : lp_norm(apply_mask(f, part.block_mask(q)), p));
  return norms;
}

double besov_norm_from_blocks(std::span<const double> block_norms, double s, double r) {
  if (std::isnan(r) || r < 1.0)
    fail(ErrorCode::InvalidArgument, "Besov summability r must lie in [1, inf]");
  std::vector<double> terms(block_norms.size());
  double top = 0.0;
  for (std::size_t i = 0; i < block_norms.size(); ++i) {
    const double q = static_cast<double>(i) - 1.0;
    terms[i] = std::exp2(s * q) * block_norms[i];
    top = std::max(top, terms[i]);
  }
  if (std::isinf(r) || top == 0.0)
    return top;
  // Normalizing by the largest term keeps a single dominant block exact.
  double sum = 0.0;
  for (double t : terms)
    sum += r == 1.0 ? t / top : std::pow(t / top, r);
  return top * (r == 1.0 ? sum : std::pow(sum, 1.0 / r));
}

double besov_norm(const LPPartition &part, const GridFunction &f, const BesovParams &params) {
  params.validate();
  return besov_norm_from_blocks(block_lp_norms(part, f, params.p), params.s, params.r);
}

// ---------------------------------------------------------------------------
// Mollifier

double MollifierKernel::profile(double x) {
  const double a = std::abs(x);
  if (a >= 1.0)
    return 0.0;
  return std::exp(-1.0 / (1.0 - a * a));
}

MollifierKernel::MollifierKernel(GridPtr grid, double epsilon)
    : grid_(std::move(grid)), epsilon_(epsilon) {
  if (!grid_)
    fail(ErrorCode::InvalidArgument, "mollifier needs a grid");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    fail(ErrorCode::InvalidArgument, "mollifier width must be positive");
  if (epsilon >= Grid::kPi * grid_->length_scale())
    fail(ErrorCode::InvalidArgument,
         "mollifier width eps = " + std::to_string(epsilon) +
             " must be below pi*L so the kernel support fits in the torus");

  const std::size_t n = grid_->size();
  const double dx = grid_->spacing();
  weights_.resize(n);
  double mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double distance = static_cast<double>(std::min(j, n - j)) * dx;
    weights_[j] = profile(distance / epsilon_) / epsilon_;
    mass += weights_[j];
  }
  mass *= dx;
  for (auto &w : weights_)
    w /= mass;

  const auto kernel = GridFunction::from_samples(grid_, weights_);
  const double period = grid_->period();
  transfer_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    transfer_[i] = period * kernel.coefficients()[i].real();
}

double MollifierKernel::discrete_mass() const {
  double sum = 0.0;
  for (double w : weights_)
    sum += w;
  return sum * grid_->spacing();
}

GridFunction mollify(const GridFunction &f, const MollifierKernel &kernel) {
  if (!f.grid() || !(*f.grid() == *kernel.grid()))
    fail(ErrorCode::InvalidArgument, "field and mollifier live on different grids");
  return apply_mask(f, kernel.transfer());
}

GridFunction mollify(const GridFunction &f, double epsilon) {
  return mollify(f, MollifierKernel(f.grid(), epsilon));
}

// ---------------------------------------------------------------------------
// Inequality checkers

double check_product_estimate(const LPPartition &part, const GridFunction &f,
                              const GridFunction &g, const BesovParams &params) {
  require_same_grid(f, g);
  const BesovParams lower = params.shifted(-1.0);
  const double nf = besov_norm(part, f, lower);
  const double ng = besov_norm(part, g, params);
  if (nf == 0.0 || ng == 0.0)
    fail(ErrorCode::InvalidArgument, "product estimate ratio has a zero denominator");
  return besov_norm(part, multiply(f, g), lower) / (nf * ng);
}

double check_multiplier_bound(const LPPartition &part, const GridFunction &f,
                              const BesovParams &params) {
  const double denominator = besov_norm(part, f, params.shifted(-1.0));
  if (denominator == 0.0)
    fail(ErrorCode::InvalidArgument, "multiplier bound ratio has a zero denominator");
  return besov_norm(part, lambda_inv_dx(f), params) / denominator;
}

} // namespace fwlab
