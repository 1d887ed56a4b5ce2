// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "fwlab/besov.hpp"
#include "fwlab/error.hpp"
#include "fwlab/presets.hpp"
#include "oracles.hpp"

using namespace fwlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Discrete L^p norm of sampled values, written out directly.
double lp_samples(std::span<const double> f, double dx, double p) {
  double acc = 0.0;
  for (double v : f)
    acc = std::isinf(p) ? std::max(acc, std::abs(v)) : acc + std::pow(std::abs(v), p);
  return std::isinf(p) ? acc : std::pow(dx * acc, 1.0 / p);
}

// (s, p, r) norm of a field whose blocks each hold one mode: weights[q+1] is
// the mask value times the L^p norm of that mode.
double norm_from(std::span<const double> block_values, double s, double r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < block_values.size(); ++i) {
    const double w = std::exp2(s * (static_cast<double>(i) - 1.0)) * block_values[i];
    acc = std::isinf(r) ? std::max(acc, w) : acc + std::pow(w, r);
  }
  return std::isinf(r) ? acc : std::pow(acc, 1.0 / r);
}

GridFunction mode(const GridPtr &g, double (*fn)(double), double k, double a = 1.0) {
  return GridFunction::from_function(g, [=](double x) { return a * fn(k * x); });
}

std::vector<double> samples_of(const GridFunction &f) {
  return {f.samples().begin(), f.samples().end()};
}

} // namespace

TEST_CASE("chi and phi match the closed form", "[besov]") {
  for (double xi = -5.0; xi <= 5.0; xi += 0.013) {
    CHECK(std::abs(lp_chi(xi) - oracle::chi(xi)) < 1e-15);
    CHECK(std::abs(lp_phi(xi) - oracle::phi(xi)) < 1e-15);
  }
  CHECK(lp_chi(0.0) == 1.0);
  CHECK(lp_phi(0.0) == 0.0);
  CHECK(std::abs(lp_chi(1.0) + lp_phi(1.0) - 1.0) < 1e-15);
  CHECK(lp_chi(4.0 / 3.0) == 0.0);
  CHECK(lp_chi(0.75) == 1.0);
}

TEST_CASE("partition masks and invariants", "[besov]") {
  for (std::size_t n : {16u, 128u, 256u, 1024u}) {
    for (double L : {1.0, 2.5, 8.0}) {
      const LPPartition part(Grid::make(n, L));
      const auto &grid = *part.grid();
      CHECK(part.partition_residual() <= 1e-12);

      // Independent q_max: last q whose oracle mask is nonzero somewhere on the grid.
      int expected_qmax = -1;
      for (int q = 0; q < 40; ++q)
        for (double xi : grid.wavenumbers())
          if (oracle::phi(std::ldexp(xi, -q)) > 0.0)
            expected_qmax = q;
      CHECK(part.q_max() == expected_qmax);

      for (std::size_t i = 0; i < n; ++i) {
        const double xi = grid.wavenumbers()[i];
        CHECK(std::abs(part.chi_mask()[i] - oracle::chi(xi)) < 1e-15);
        double sum = part.chi_mask()[i];
        for (int q = 0; q <= part.q_max(); ++q) {
          const double m = part.phi_mask(q)[i];
          CHECK(m >= 0.0);
          CHECK(m <= 1.0);
          CHECK(std::abs(m - oracle::phi(std::ldexp(xi, -q))) < 1e-15);
          const double scaled = std::abs(std::ldexp(xi, -q));
          if (scaled < 0.75 || scaled > 8.0 / 3.0)
            CHECK(m == 0.0);
          sum += m;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
      // Disjoint supports for |q - q'| >= 2.
      for (int q = -1; q <= part.q_max(); ++q)
        for (int qq = q + 2; qq <= part.q_max(); ++qq)
          for (std::size_t i = 0; i < n; ++i)
            CHECK(part.block_mask(q)[i] * part.block_mask(qq)[i] == 0.0);
    }
  }
  CHECK(LPPartition(Grid::make(256, 8.0)).q_max() == 4);
  CHECK(LPPartition(Grid::make(8, 1.0)).block_mask(5).empty());
}

TEST_CASE("dyadic block examples", "[besov]") {
  auto g = Grid::make(64, 1.0);
  const LPPartition part(g);
  const auto one = GridFunction::constant(g, 1.0);
  CHECK(oracle::max_abs_diff(dyadic_block(part, one, -1).samples(), one.samples()) < 1e-15);
  CHECK(dyadic_block(part, one, 0).max_abs() < 1e-15);
  CHECK(dyadic_block(part, one, -2).max_abs() == 0.0);

  const auto s8 = mode(g, std::sin, 8.0);
  CHECK(oracle::max_abs_diff(dyadic_block(part, s8, 3).samples(),
                             (s8 * oracle::phi(1.0)).samples()) < 1e-14);
  CHECK(oracle::max_abs_diff(dyadic_block(part, s8, 2).samples(),
                             (s8 * oracle::phi(2.0)).samples()) < 1e-14);
  for (int q : {-1, 0, 1, 4, 5, 6})
    CHECK(dyadic_block(part, s8, q).max_abs() < 1e-14);
}

TEST_CASE("low cutoff", "[besov]") {
  auto g = Grid::make(64, 1.0);
  const LPPartition part(g);
  const auto s8 = mode(g, std::sin, 8.0);
  CHECK(low_cutoff(part, s8, 0).max_abs() < 1e-15);
  const auto f = s8 + GridFunction::constant(g, 1.0);
  CHECK(oracle::max_abs_diff(low_cutoff(part, f, 0).samples(),
                             GridFunction::constant(g, 1.0).samples()) < 1e-14);
  const auto r = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 31, 5));
  CHECK(oracle::max_abs_diff(low_cutoff(part, r, part.q_max() + 2).samples(), r.samples()) <
        1e-13);
  for (int q = 0; q <= part.q_max() + 1; ++q)
    CHECK(oracle::max_abs_diff(low_cutoff(part, r, q).samples(),
                               low_cutoff_by_blocks(part, r, q).samples()) <= 1e-12);
  CHECK_THROWS_AS(low_cutoff(part, r, -1), Error);
}

TEST_CASE("besov norm closed forms", "[besov]") {
  auto g1 = Grid::make(64, 1.0);
  const LPPartition part(g1);
  CHECK(besov_norm(part, GridFunction::zeros(g1), {3, 2, 2}) == 0.0);
  CHECK(std::abs(besov_norm(part, GridFunction::constant(g1, 1.0), {2, 2, 2}) -
                 0.25 * std::sqrt(2.0 * oracle::kPi)) < 1e-14);

  const auto s8 = mode(g1, std::sin, 8.0);
  const auto raw = samples_of(s8);
  for (const BesovParams prm : {BesovParams{3, 2, 2}, BesovParams{2.6, 4, 1},
                                BesovParams{3, kInf, 3}, BesovParams{-1, 1.5, kInf}}) {
    const double lp = lp_samples(raw, g1->spacing(), prm.p);
    std::vector<double> blocks(part.q_max() + 2, 0.0);
    blocks[3] = oracle::phi(2.0) * lp; // q = 2
    blocks[4] = oracle::phi(1.0) * lp; // q = 3
    const double expected = norm_from(blocks, prm.s, prm.r);
    CHECK(std::abs(besov_norm(part, s8, prm) - expected) <= 1e-10 * expected);
  }
}

TEST_CASE("r- and s-monotonicity and scaling on random fields", "[besov]") {
  auto g = Grid::make(128, 2.0);
  const LPPartition part(g);
  std::mt19937_64 rng(99);
  const double rs[] = {1.0, 1.5, 2.0, 3.0, kInf};
  for (int m = 0; m < 20; ++m) {
    const auto f = random_bandlimited(g, rng, 60, 1.0);
    for (double p : {1.0, 2.0, kInf}) {
      for (double s : {-0.5, 1.0, 3.0}) {
        for (std::size_t a = 0; a + 1 < std::size(rs); ++a)
          CHECK(besov_norm(part, f, {s, p, rs[a + 1]}) <= besov_norm(part, f, {s, p, rs[a]}));
        for (double ds : {0.25, 1.0, 2.5})
          CHECK(besov_norm(part, f, {s, p, 2}) <=
                std::exp2(ds) * besov_norm(part, f, {s + ds, p, 2}));
        const double base = besov_norm(part, f, {s, p, 2});
        CHECK(std::abs(besov_norm(part, f * -3.5, {s, p, 2}) - 3.5 * base) <= 1e-12 * 3.5 * base);
      }
    }
  }
}

TEST_CASE("reconstruction, orthogonality and block bounds", "[besov]") {
  auto g = Grid::make(256, 8.0);
  const LPPartition part(g);
  std::mt19937_64 rng(5);
  double K = 0.0;
  for (int m = 0; m < 10; ++m) {
    const auto f = random_bandlimited(g, rng, 100, 1.0);
    GridFunction sum = GridFunction::zeros(g);
    for (int q = -1; q <= part.q_max(); ++q) {
      const auto b = dyadic_block(part, f, q);
      sum = sum + b;
      CHECK(lp_norm(b, 2.0) <= (1.0 + 1e-10) * lp_norm(f, 2.0));
      for (double p : {1.0, 4.0, kInf})
        K = std::max(K, lp_norm(b, p) / lp_norm(f, p));
      for (int qq = -1; qq <= part.q_max(); ++qq)
        if (std::abs(q - qq) >= 2)
          CHECK(lp_norm(dyadic_block(part, b, qq), 2.0) <= 1e-12 * lp_norm(f, 2.0));
    }
    CHECK(lp_norm(sum - f, 2.0) <= 1e-10 * lp_norm(f, 2.0));
  }
  INFO("empirical block bound K = " << K);
  CHECK(std::isfinite(K));
}

TEST_CASE("mollifier matches direct convolution", "[besov]") {
  auto g = Grid::make(128, 1.0);
  const auto f = GridFunction::from_samples(g, oracle::random_trig(128, 1.0, 30, 17));
  for (double eps : {0.06, 0.1, 0.4, 1.0, 2.5}) {
    const MollifierKernel kernel(g, eps);
    CHECK(std::abs(kernel.discrete_mass() - 1.0) <= 1e-12);
    const auto expected = oracle::mollify_direct(f.samples(), g->period(), eps);
    CHECK(oracle::max_abs_diff(mollify(f, kernel).samples(), expected) < 1e-12);
    CHECK(std::abs(mollify(f, kernel).mean() - f.mean()) <= 1e-12);
  }
  const auto c = GridFunction::constant(g, 2.5);
  CHECK(oracle::max_abs_diff(mollify(c, 0.3).samples(), c.samples()) < 1e-12);

  // Below the grid spacing only the centre sample survives.
  const double tiny = 0.9 * g->spacing();
  CHECK(oracle::max_abs_diff(mollify(f, tiny).samples(), f.samples()) < 1e-14);

  CHECK_THROWS_AS(MollifierKernel(g, oracle::kPi), Error);
  CHECK_THROWS_AS(MollifierKernel(g, 0.0), Error);
  CHECK_THROWS_AS(MollifierKernel(g, -0.1), Error);
}

TEST_CASE("mollifier convergence on sin x", "[besov]") {
  auto g = Grid::make(256, 1.0);
  const auto s = mode(g, std::sin, 1.0);
  double previous = kInf;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    const double err = lp_norm(mollify(s, eps) - s, 2.0);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("product estimate ratio", "[besov]") {
  auto g = Grid::make(64, 1.0);
  const LPPartition part(g);
  const BesovParams prm{3, 2, 2};
  const auto one = GridFunction::constant(g, 1.0);
  const auto h = GridFunction::from_samples(g, oracle::random_trig(64, 1.0, 10, 2));
  const double r1 = check_product_estimate(part, one, h, prm);
  CHECK(std::abs(r1 - besov_norm(part, h, prm.shifted(-1)) /
                          (besov_norm(part, one, prm.shifted(-1)) * besov_norm(part, h, prm))) <
        1e-12 * r1);

  // sin^2 = 1/2 - cos(2x)/2: constant in block -1, cos 2x split over q = 0, 1.
  const auto s = mode(g, std::sin, 1.0);
  const auto c2 = mode(g, std::cos, 2.0, 0.5);
  const double dxs = g->spacing();
  const double half = lp_samples(samples_of(GridFunction::constant(g, 0.5)), dxs, 2.0);
  const double lc2 = lp_samples(samples_of(c2), dxs, 2.0);
  const double ls = lp_samples(samples_of(s), dxs, 2.0);
  std::vector<double> prod_blocks(part.q_max() + 2, 0.0);
  prod_blocks[0] = half;
  prod_blocks[1] = oracle::phi(2.0) * lc2;
  prod_blocks[2] = oracle::phi(1.0) * lc2;
  std::vector<double> sin_blocks(part.q_max() + 2, 0.0);
  sin_blocks[0] = oracle::chi(1.0) * ls;
  sin_blocks[1] = oracle::phi(1.0) * ls;
  const double expected = norm_from(prod_blocks, 2.0, 2.0) /
                          (norm_from(sin_blocks, 2.0, 2.0) * norm_from(sin_blocks, 3.0, 2.0));
  CHECK(std::abs(check_product_estimate(part, s, s, prm) - expected) <= 1e-10 * expected);

  CHECK_THROWS_AS(check_product_estimate(part, GridFunction::zeros(g), s, prm), Error);

  std::mt19937_64 rng(3);
  double M = 0.0;
  for (int m = 0; m < 100; ++m) {
    const auto a = random_bandlimited(g, rng, 10, 1.0);
    const auto b = random_bandlimited(g, rng, 10, 1.0);
    M = std::max(M, check_product_estimate(part, a, b, prm));
  }
  INFO("empirical product constant M = " << M);
  CHECK(std::isfinite(M));
}

TEST_CASE("multiplier bound ratio", "[besov]") {
  auto g = Grid::make(64, 1.0);
  const LPPartition part(g);
  const BesovParams prm{3, 2, 2};
  const auto s = mode(g, std::sin, 1.0);
  const double ls = lp_samples(samples_of(s), g->spacing(), 2.0);
  std::vector<double> blocks(part.q_max() + 2, 0.0);
  blocks[0] = oracle::chi(1.0) * ls;
  blocks[1] = oracle::phi(1.0) * ls;
  const double expected = 0.5 * norm_from(blocks, 3.0, 2.0) / norm_from(blocks, 2.0, 2.0);
  CHECK(std::abs(check_multiplier_bound(part, s, prm) - expected) <= 1e-10 * expected);
  CHECK_THROWS_AS(check_multiplier_bound(part, GridFunction::zeros(g), prm), Error);

  std::mt19937_64 rng(4);
  double theta = 0.0;
  for (int m = 0; m < 100; ++m)
    theta = std::max(theta, check_multiplier_bound(part, random_bandlimited(g, rng, 20, 1.0), prm));
  INFO("empirical multiplier constant theta = " << theta);
  CHECK(std::isfinite(theta));
}

TEST_CASE("admissibility conditions", "[besov]") {
  CHECK(BesovParams{3, 2, 2}.admissible_for_wellposedness());
  CHECK_FALSE(BesovParams{2.4, 2, 2}.admissible_for_wellposedness());
  CHECK_FALSE(BesovParams{2.5, kInf, 2}.admissible_for_wellposedness());
  CHECK_FALSE(BesovParams{3, 1, 2}.admissible_for_wellposedness()); // needs s > 3
  CHECK(BesovParams{3.01, 1, 2}.admissible_for_wellposedness());
  CHECK_FALSE(BesovParams{3, 2, kInf}.admissible_for_wellposedness());
  CHECK(BesovParams{1.5, 2, 1}.transport_violation() == std::nullopt);
  CHECK(BesovParams{1.5, 2, 2}.transport_violation().has_value());
  CHECK(BesovParams{3, 2, kInf}.transport_violation().has_value());
  CHECK_THROWS_AS((BesovParams{3, 0.5, 2}.validate()), Error);
  CHECK_THROWS_AS((BesovParams{3, 2, 0.5}.validate()), Error);
}
