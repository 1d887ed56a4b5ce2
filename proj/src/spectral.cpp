// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "fwlab/error.hpp"

namespace fwlab {

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(std::size_t n, double length_scale)
    : n_(n), length_scale_(length_scale), dx_(2.0 * kPi * length_scale / static_cast<double>(n)),
      xi_(n) {
  for (std::size_t i = 0; i < n_; ++i)
    xi_[i] = static_cast<double>(mode(i)) / length_scale_;
}

std::shared_ptr<const Grid> Grid::make(std::size_t n, double length_scale) {
  if (n < 8 || n % 2 != 0)
    fail(ErrorCode::InvalidArgument,
         "grid size N must be even and at least 8, got " + std::to_string(n));
  if (!(length_scale > 0.0) || !std::isfinite(length_scale))
    fail(ErrorCode::InvalidArgument, "grid length scale L must be positive");
  return std::shared_ptr<const Grid>(new Grid(n, length_scale));
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j)
    x[j] = node(j);
  return x;
}

std::vector<double> Grid::ordered_wavenumbers() const {
  std::vector<double> xi(xi_.begin(), xi_.end());
  std::sort(xi.begin(), xi.end());
  return xi;
}

double Grid::max_wavenumber() const noexcept {
  return static_cast<double>(n_ / 2) / length_scale_;
}

// ---------------------------------------------------------------------------
// GridFunction

namespace {

void project_real(std::vector<Complex> &c) {
  const std::size_t n = c.size();
  c[0] = Complex(c[0].real(), 0.0);
  c[n / 2] = Complex(c[n / 2].real(), 0.0);
  for (std::size_t i = 1; i < n / 2; ++i) {
    const Complex plus = c[i];
    const Complex minus = c[n - i];
    const Complex sym = 0.5 * (plus + std::conj(minus));
    c[i] = sym;
    c[n - i] = std::conj(sym);
  }
}

} // namespace

GridFunction GridFunction::from_samples(GridPtr grid, std::vector<double> samples) {
  if (!grid)
    fail(ErrorCode::InvalidArgument, "grid function needs a grid");
  if (samples.size() != grid->size())
    fail(ErrorCode::InvalidArgument, "sample count " + std::to_string(samples.size()) +
                                         " does not match grid size " +
                                         std::to_string(grid->size()));
  auto coefficients = fft::forward(samples);
  project_real(coefficients);
  return GridFunction(std::move(grid), std::move(samples), std::move(coefficients));
}

GridFunction GridFunction::from_function(GridPtr grid, const std::function<double(double)> &f) {
  if (!grid)
    fail(ErrorCode::InvalidArgument, "grid function needs a grid");
  std::vector<double> samples(grid->size());
  for (std::size_t j = 0; j < samples.size(); ++j)
    samples[j] = f(grid->node(j));
  return from_samples(std::move(grid), std::move(samples));
}

GridFunction GridFunction::from_coefficients(GridPtr grid, std::vector<Complex> coefficients) {
  if (!grid)
    fail(ErrorCode::InvalidArgument, "grid function needs a grid");
  if (coefficients.size() != grid->size())
    fail(ErrorCode::InvalidArgument, "coefficient count does not match grid size");
  project_real(coefficients);
  auto samples = fft::inverse_real(coefficients);
  return GridFunction(std::move(grid), std::move(samples), std::move(coefficients));
}

GridFunction GridFunction::zeros(GridPtr grid) { return constant(std::move(grid), 0.0); }

GridFunction GridFunction::constant(GridPtr grid, double value) {
  if (!grid)
    fail(ErrorCode::InvalidArgument, "grid function needs a grid");
  const std::size_t n = grid->size();
  std::vector<Complex> c(n, Complex(0.0, 0.0));
  c[0] = Complex(value, 0.0);
  return GridFunction(std::move(grid), std::vector<double>(n, value), std::move(c));
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (double v : samples_)
    m = std::max(m, std::abs(v));
  return m;
}

bool GridFunction::all_finite() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); });
}

bool GridFunction::is_zero() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
}

GridFunction GridFunction::axpy(const GridFunction &a, double scale, const GridFunction &b) {
  require_same_grid(a, b);
  std::vector<double> s(a.samples_.size());
  std::vector<Complex> c(a.coefficients_.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    s[j] = a.samples_[j] + scale * b.samples_[j];
    c[j] = a.coefficients_[j] + scale * b.coefficients_[j];
  }
  return GridFunction(a.grid_, std::move(s), std::move(c));
}

GridFunction GridFunction::operator+(const GridFunction &other) const {
  return axpy(*this, 1.0, other);
}

GridFunction GridFunction::operator-(const GridFunction &other) const {
  return axpy(*this, -1.0, other);
}

GridFunction GridFunction::operator-() const { return *this * -1.0; }

GridFunction GridFunction::operator*(double scale) const {
  std::vector<double> s(samples_);
  std::vector<Complex> c(coefficients_);
  for (auto &v : s)
    v *= scale;
  for (auto &v : c)
    v *= scale;
  return GridFunction(grid_, std::move(s), std::move(c));
}

void require_same_grid(const GridFunction &a, const GridFunction &b) {
  if (!a.grid() || !b.grid() || !(*a.grid() == *b.grid()))
    fail(ErrorCode::InvalidArgument, "grid functions live on different grids");
}

// ---------------------------------------------------------------------------
// Multipliers

MultiplierSymbol MultiplierSymbol::identity() {
  return {"identity", [](double) { return Complex(1.0, 0.0); }};
}

MultiplierSymbol MultiplierSymbol::derivative() {
  return {"d_x", [](double xi) { return Complex(0.0, xi); }};
}

MultiplierSymbol MultiplierSymbol::lambda_inv() {
  return {"Lambda^-1", [](double xi) { return Complex(1.0 / (1.0 + xi * xi), 0.0); }};
}

MultiplierSymbol MultiplierSymbol::lambda_inv_dx() {
  return {"Lambda^-1 d_x", [](double xi) { return Complex(0.0, xi / (1.0 + xi * xi)); }};
}

MultiplierSymbol MultiplierSymbol::product(const MultiplierSymbol &a, const MultiplierSymbol &b) {
  return {a.name + " * " + b.name, [sa = a.symbol, sb = b.symbol](double xi) {
            return sa(xi) * sb(xi);
          }};
}

std::vector<Complex> MultiplierSymbol::evaluate(const Grid &grid) const {
  const auto xi = grid.wavenumbers();
  std::vector<Complex> m(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    m[i] = symbol(xi[i]);
    if (!std::isfinite(m[i].real()) || !std::isfinite(m[i].imag()))
      fail(ErrorCode::Numerical, "multiplier '" + name + "' is not finite at xi = " +
                                     std::to_string(xi[i]));
  }
  return m;
}

GridFunction apply_multiplier(const GridFunction &f, const MultiplierSymbol &m) {
  const auto values = m.evaluate(*f.grid());
  const auto fc = f.coefficients();
  std::vector<Complex> c(fc.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = values[i] * fc[i];
  return GridFunction::from_coefficients(f.grid(), std::move(c));
}

GridFunction apply_mask(const GridFunction &f, std::span<const double> mask) {
  const auto fc = f.coefficients();
  if (mask.size() != fc.size())
    fail(ErrorCode::InvalidArgument, "spectral mask does not match grid size");
  std::vector<Complex> c(fc.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mask[i] * fc[i];
  return GridFunction::from_coefficients(f.grid(), std::move(c));
}

GridFunction dx(const GridFunction &f) {
  static const MultiplierSymbol d = MultiplierSymbol::derivative();
  return apply_multiplier(f, d);
}

GridFunction lambda_inv_dx(const GridFunction &f) {
  static const MultiplierSymbol m = MultiplierSymbol::lambda_inv_dx();
  return apply_multiplier(f, m);
}

GridFunction dealias(const GridFunction &f) {
  const Grid &grid = *f.grid();
  const long n = static_cast<long>(grid.size());
  const auto fc = f.coefficients();
  std::vector<Complex> c(fc.begin(), fc.end());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (3 * std::abs(grid.mode(i)) > n)
      c[i] = Complex(0.0, 0.0);
  return GridFunction::from_coefficients(f.grid(), std::move(c));
}

GridFunction multiply(const GridFunction &a, const GridFunction &b) {
  require_same_grid(a, b);
  std::vector<double> s(a.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    s[j] = a[j] * b[j];
  return GridFunction::from_samples(a.grid(), std::move(s));
}

GridFunction dealiased_product(const GridFunction &a, const GridFunction &b) {
  return dealias(multiply(dealias(a), dealias(b)));
}

double lp_norm(const GridFunction &f, double p) {
  if (std::isnan(p) || p < 1.0)
    fail(ErrorCode::InvalidArgument, "L^p norm needs p >= 1");
  const auto s = f.samples();
  if (std::isinf(p))
    return f.max_abs();
  const double dx = f.grid()->spacing();
  if (p == 2.0) {
    double sum = 0.0;
    for (double v : s)
      sum += v * v;
    return std::sqrt(dx * sum);
  }
  // Scale by the largest magnitude so high p cannot overflow.
  const double top = f.max_abs();
  if (top == 0.0)
    return 0.0;
  double sum = 0.0;
  for (double v : s)
    sum += std::pow(std::abs(v) / top, p);
  return top * std::pow(dx * sum, 1.0 / p);
}

} // namespace fwlab
