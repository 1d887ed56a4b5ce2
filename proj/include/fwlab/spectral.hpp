// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_SPECTRAL_HPP
#define FWLAB_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fwlab {

using Complex = std::complex<double>;

/// Uniform periodic grid on [0, 2*pi*L) with N samples.
///
/// Spectral data is stored in FFT order: index i holds integer mode
/// k = i for i < N/2 and k = i - N otherwise, so k ranges over [-N/2, N/2).
/// The physical wavenumber of mode k is xi = k / L. The single unpaired
/// mode k = -N/2 is the Nyquist mode.
class Grid {
public:
  /// Throws Error(InvalidArgument) unless N is even, N >= 8 and L > 0.
  static std::shared_ptr<const Grid> make(std::size_t n, double length_scale);

  std::size_t size() const noexcept { return n_; }
  double length_scale() const noexcept { return length_scale_; }
  double spacing() const noexcept { return dx_; }
  double period() const noexcept { return 2.0 * kPi * length_scale_; }

  double node(std::size_t j) const noexcept { return static_cast<double>(j) * dx_; }
  std::vector<double> nodes() const;

  /// Integer mode number of storage index i.
  long mode(std::size_t i) const noexcept {
    return i < n_ / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n_);
  }
  /// Storage index of integer mode k, k in [-N/2, N/2).
  std::size_t index_of_mode(long k) const noexcept {
    return k >= 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k + static_cast<long>(n_));
  }
  std::size_t nyquist_index() const noexcept { return n_ / 2; }

  /// Wavenumbers in storage (FFT) order.
  std::span<const double> wavenumbers() const noexcept { return xi_; }
  /// Wavenumbers sorted ascending: -N/(2L), ..., (N/2-1)/L.
  std::vector<double> ordered_wavenumbers() const;
  /// Largest |xi| on the grid, i.e. the Nyquist wavenumber N/(2L).
  double max_wavenumber() const noexcept;

  bool operator==(const Grid &other) const noexcept {
    return n_ == other.n_ && length_scale_ == other.length_scale_;
  }

  static constexpr double kPi = 3.14159265358979323846;

private:
  Grid(std::size_t n, double length_scale);

  std::size_t n_;
  double length_scale_;
  double dx_;
  std::vector<double> xi_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Immutable real periodic field, held both as samples and as mode
/// amplitudes. Forward transform divides by N, so c_k is the amplitude of
/// exp(i xi_k x) and dx * sum |f_j|^2 == 2*pi*L * sum |c_k|^2.
class GridFunction {
public:
  GridFunction() = default;

  static GridFunction from_samples(GridPtr grid, std::vector<double> samples);
  static GridFunction from_function(GridPtr grid, const std::function<double(double)> &f);
  /// Coefficients are projected onto real fields before the inverse transform.
  static GridFunction from_coefficients(GridPtr grid, std::vector<Complex> coefficients);
  static GridFunction zeros(GridPtr grid);
  static GridFunction constant(GridPtr grid, double value);

  const GridPtr &grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  double operator[](std::size_t j) const noexcept { return samples_[j]; }

  /// Spatial mean (the k = 0 coefficient).
  double mean() const noexcept { return coefficients_.empty() ? 0.0 : coefficients_[0].real(); }
  double max_abs() const noexcept;
  bool all_finite() const noexcept;
  bool is_zero() const noexcept;

  GridFunction operator+(const GridFunction &other) const;
  GridFunction operator-(const GridFunction &other) const;
  GridFunction operator-() const;
  GridFunction operator*(double scale) const;
  friend GridFunction operator*(double scale, const GridFunction &f) { return f * scale; }

  /// a + scale * b, computed without extra transforms.
  static GridFunction axpy(const GridFunction &a, double scale, const GridFunction &b);

private:
  GridFunction(GridPtr grid, std::vector<double> samples, std::vector<Complex> coefficients)
      : grid_(std::move(grid)), samples_(std::move(samples)),
        coefficients_(std::move(coefficients)) {}

  GridPtr grid_;
  std::vector<double> samples_;
  std::vector<Complex> coefficients_;
};

/// Throws Error(InvalidArgument) when the two fields live on different grids.
void require_same_grid(const GridFunction &a, const GridFunction &b);

/// Fourier multiplier m(xi), evaluated on a grid's wavenumbers.
struct MultiplierSymbol {
  std::string name;
  std::function<Complex(double)> symbol;

  static MultiplierSymbol identity();
  static MultiplierSymbol derivative();        // i xi
  static MultiplierSymbol lambda_inv();        // 1 / (1 + xi^2)
  static MultiplierSymbol lambda_inv_dx();     // i xi / (1 + xi^2)
  static MultiplierSymbol product(const MultiplierSymbol &a, const MultiplierSymbol &b);

  /// Symbol values in storage order; throws Error(Numerical) on non-finite entries.
  std::vector<Complex> evaluate(const Grid &grid) const;
};

/// f(D)u: multiplies each coefficient by m(xi) and projects back onto real fields.
GridFunction apply_multiplier(const GridFunction &f, const MultiplierSymbol &m);
/// Pointwise spectral mask (real, storage order).
GridFunction apply_mask(const GridFunction &f, std::span<const double> mask);

GridFunction dx(const GridFunction &f);
/// Lambda^{-1} d_x with Lambda = 1 - d_x^2.
GridFunction lambda_inv_dx(const GridFunction &f);

/// 2/3-rule truncation: zeroes every mode with |k| > N/3.
GridFunction dealias(const GridFunction &f);
/// Pointwise product without dealiasing.
GridFunction multiply(const GridFunction &a, const GridFunction &b);
/// dealias(dealias(a) * dealias(b)); alias-free on the retained modes.
GridFunction dealiased_product(const GridFunction &a, const GridFunction &b);

/// (dx * sum |f_j|^p)^(1/p), or max |f_j| for p = infinity. p < 1 is rejected.
double lp_norm(const GridFunction &f, double p);

} // namespace fwlab

#endif // FWLAB_SPECTRAL_HPP
