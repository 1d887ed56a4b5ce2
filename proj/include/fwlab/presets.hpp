// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_PRESETS_HPP
#define FWLAB_PRESETS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fwlab/spectral.hpp"
#include "fwlab/transport.hpp"

namespace fwlab {

/// Initial data (u0, rho0) by name.
///   sine  : u0 = a sin(m x / L), rho0 = a cos(m x / L), m = max(1, round(L))
///           (so sin x and cos x whenever L is an integer)
///   gauss : u0 = a exp(-2 L^2 sin^2((x - pi L) / (2 L))), rho0 = 0.
///           A periodic bump of unit width centred in the domain.
///   zero  : both zero
std::pair<GridFunction, GridFunction> initial_preset(const GridPtr &grid, const std::string &name,
                                                     double amplitude);

/// Single field by name: zero, constant, sine, cosine, gauss, random.
/// "random" draws from random_bandlimited with k_max = 8.
GridFunction field_preset(const GridPtr &grid, const std::string &name, double amplitude,
                          std::uint64_t seed);

bool is_field_preset(const std::string &name);

/// Real field with modes 1 <= |k| <= k_max: c_k = (g1 + i g2) / k with
/// standard normal g's, plus a mean 0.5 g0, rescaled to max|f| = amplitude.
GridFunction random_bandlimited(const GridPtr &grid, std::mt19937_64 &rng, std::size_t k_max,
                                double amplitude);

/// Random transport problems: v and F interpolate linearly in time between
/// two band-limited draws (k <= 8, amplitudes 1 and 0.5), f0 has k <= 16
/// and amplitude 1.
std::vector<TransportProblem> random_transport_family(const GridPtr &grid, TimeGrid time,
                                                      std::size_t count, std::uint64_t seed);

} // namespace fwlab

#endif // FWLAB_PRESETS_HPP
