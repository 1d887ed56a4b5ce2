// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/presets.hpp"

#include <algorithm>
#include <cmath>

#include "fwlab/error.hpp"

namespace fwlab {

namespace {

double preset_wavenumber(const Grid &grid) {
  return std::max(1.0, std::round(grid.length_scale())) / grid.length_scale();
}

GridFunction bump(const GridPtr &grid, double amplitude) {
  const double L = grid->length_scale();
  const double centre = Grid::kPi * L;
  return GridFunction::from_function(grid, [=](double x) {
    const double s = std::sin((x - centre) / (2.0 * L));
    return amplitude * std::exp(-2.0 * L * L * s * s);
  });
}

} // namespace

std::pair<GridFunction, GridFunction> initial_preset(const GridPtr &grid, const std::string &name,
                                                     double amplitude) {
  if (!std::isfinite(amplitude))
    fail(ErrorCode::InvalidArgument, "preset amplitude must be finite");
  if (name == "sine") {
    const double m = preset_wavenumber(*grid);
    return {GridFunction::from_function(grid, [=](double x) { return amplitude * std::sin(m * x); }),
            GridFunction::from_function(grid, [=](double x) { return amplitude * std::cos(m * x); })};
  }
  if (name == "gauss")
    return {bump(grid, amplitude), GridFunction::zeros(grid)};
  if (name == "zero")
    return {GridFunction::zeros(grid), GridFunction::zeros(grid)};
  fail(ErrorCode::InvalidArgument, "unknown data preset '" + name + "' (sine, gauss, zero)");
}

bool is_field_preset(const std::string &name) {
  return name == "zero" || name == "constant" || name == "sine" || name == "cosine" ||
         name == "gauss" || name == "random";
}

GridFunction field_preset(const GridPtr &grid, const std::string &name, double amplitude,
                          std::uint64_t seed) {
  const double m = preset_wavenumber(*grid);
  if (name == "zero")
    return GridFunction::zeros(grid);
  if (name == "constant")
    return GridFunction::constant(grid, amplitude);
  if (name == "sine")
    return GridFunction::from_function(grid, [=](double x) { return amplitude * std::sin(m * x); });
  if (name == "cosine")
    return GridFunction::from_function(grid, [=](double x) { return amplitude * std::cos(m * x); });
  if (name == "gauss")
    return bump(grid, amplitude);
  if (name == "random") {
    std::mt19937_64 rng(seed);
    return random_bandlimited(grid, rng, 8, amplitude);
  }
  fail(ErrorCode::InvalidArgument, "unknown field preset '" + name + "'");
}

GridFunction random_bandlimited(const GridPtr &grid, std::mt19937_64 &rng, std::size_t k_max,
                                double amplitude) {
  const std::size_t n = grid->size();
  if (k_max == 0 || k_max >= n / 2)
    fail(ErrorCode::InvalidArgument, "random field needs 1 <= k_max < N/2");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> c(n, Complex(0.0, 0.0));
  c[0] = 0.5 * normal(rng);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    const Complex value = Complex(re, im) / static_cast<double>(k);
    c[k] = value;
    c[n - k] = std::conj(value);
  }
  const GridFunction raw = GridFunction::from_coefficients(grid, std::move(c));
  const double peak = raw.max_abs();
  if (peak == 0.0)
    return raw;
  return raw * (amplitude / peak);
}

std::vector<TransportProblem> random_transport_family(const GridPtr &grid, TimeGrid time,
                                                      std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TransportProblem> family;
  family.reserve(count);
  const std::size_t nodes = time.nodes();
  const double T = time.final_time();
  for (std::size_t m = 0; m < count; ++m) {
    const GridFunction v0 = random_bandlimited(grid, rng, 8, 1.0);
    const GridFunction v1 = random_bandlimited(grid, rng, 8, 1.0);
    const GridFunction F0 = random_bandlimited(grid, rng, 8, 0.5);
    const GridFunction F1 = random_bandlimited(grid, rng, 8, 0.5);
    const GridFunction f0 = random_bandlimited(grid, rng, 16, 1.0);
    TransportProblem problem;
    problem.initial = f0;
    problem.time = time;
    problem.velocity.reserve(nodes);
    problem.forcing.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      const double w = T > 0.0 ? time.time(i) / T : 0.0;
      problem.velocity.push_back(v0 * (1.0 - w) + v1 * w);
      problem.forcing.push_back(F0 * (1.0 - w) + F1 * w);
    }
    family.push_back(std::move(problem));
  }
  return family;
}

} // namespace fwlab
