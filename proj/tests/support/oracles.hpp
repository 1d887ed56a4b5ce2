// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

// Reference computations written independently of the library code paths.

#ifndef FWLAB_TESTS_ORACLES_HPP
#define FWLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// O(N^2) forward DFT, divided by N.
inline std::vector<std::complex<double>> dft(std::span<const double> f) {
  const std::size_t n = f.size();
  std::vector<std::complex<double>> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * kPi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      acc += f[j] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

// Smooth transition: 1 on [0, 3/4], 0 on [4/3, inf).
inline double chi(double xi) {
  const double a = std::abs(xi);
  if (a <= 0.75)
    return 1.0;
  if (a >= 4.0 / 3.0)
    return 0.0;
  const double left = std::exp(-1.0 / (4.0 / 3.0 - a));
  const double right = std::exp(-1.0 / (a - 0.75));
  return left / (left + right);
}

inline double phi(double xi) { return chi(xi / 2.0) - chi(xi); }

// Direct periodic convolution with eps^-1 b(d / eps), b(x) = exp(-1/(1-x^2)),
// normalized to unit discrete mass.
inline std::vector<double> mollify_direct(std::span<const double> f, double period, double eps) {
  const std::size_t n = f.size();
  const double dx = period / static_cast<double>(n);
  std::vector<double> w(n, 0.0);
  double mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = static_cast<double>(std::min(j, n - j)) * dx / eps;
    w[j] = d < 1.0 ? std::exp(-1.0 / (1.0 - d * d)) : 0.0;
    mass += w[j] * dx;
  }
  for (auto &v : w)
    v /= mass;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i] += dx * w[(i + n - j) % n] * f[j];
  return out;
}

// Sum of random cosines/sines with modes 1..k_max plus a mean, sampled on
// [0, 2 pi L) at N points.
inline std::vector<double> random_trig(std::size_t n, double L, std::size_t k_max,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(k_max + 1), b(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    a[k] = u(rng);
    b[k] = u(rng);
  }
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = 2.0 * kPi * L * static_cast<double>(j) / static_cast<double>(n);
    double v = a[0];
    for (std::size_t k = 1; k <= k_max; ++k)
      v += (a[k] * std::cos(k * x / L) + b[k] * std::sin(k * x / L)) / static_cast<double>(k);
    f[j] = v;
  }
  return f;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace oracle

#endif // FWLAB_TESTS_ORACLES_HPP
