// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "fwlab/error.hpp"

namespace fwlab::fft {
namespace {

// FFTW's planner is not thread-safe; plan execution through the new-array
// interface is. Plans are created once per (size, sign) under a lock.
class PlanCache {
public:
  ~PlanCache() {
    for (auto &[key, plan] : plans_)
      fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end())
      return it->second;
    auto *in = fftw_alloc_complex(static_cast<std::size_t>(n));
    auto *out = fftw_alloc_complex(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr)
      fail(ErrorCode::Internal, "FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache &cache() {
  static PlanCache instance;
  return instance;
}

fftw_complex *as_fftw(std::complex<double> *p) { return reinterpret_cast<fftw_complex *>(p); }

} // namespace

std::vector<std::complex<double>> forward(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  std::vector<std::complex<double>> in(samples.begin(), samples.end());
  std::vector<std::complex<double>> out(samples.size());
  fftw_execute_dft(cache().get(n, FFTW_FORWARD), as_fftw(in.data()), as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(n);
  for (auto &c : out)
    c *= scale;
  return out;
}

std::vector<double> inverse_real(std::span<const std::complex<double>> coefficients) {
  const int n = static_cast<int>(coefficients.size());
  std::vector<std::complex<double>> in(coefficients.begin(), coefficients.end());
  std::vector<std::complex<double>> out(coefficients.size());
  fftw_execute_dft(cache().get(n, FFTW_BACKWARD), as_fftw(in.data()), as_fftw(out.data()));
  std::vector<double> samples(out.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    samples[j] = out[j].real();
  return samples;
}

} // namespace fwlab::fft
