// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_SRC_FFT_HPP
#define FWLAB_SRC_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace fwlab::fft {

// c_k = (1/N) sum_j f_j exp(-2 pi i j k / N), storage in FFT order.
std::vector<std::complex<double>> forward(std::span<const double> samples);

// f_j = Re sum_k c_k exp(2 pi i j k / N).
std::vector<double> inverse_real(std::span<const std::complex<double>> coefficients);

} // namespace fwlab::fft

#endif // FWLAB_SRC_FFT_HPP
