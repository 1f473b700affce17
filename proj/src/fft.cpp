// Copyright 2026 The critex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "critex/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <functional>
#include <mutex>
#include <numbers>
#include <numeric>

#include "critex/error.hpp"

namespace critex {
namespace {

std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

struct RealFft::Plans {
  double* real = nullptr;
  fftw_complex* spectrum = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~Plans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    fftw_free(real);
    fftw_free(spectrum);
  }
};

RealFft::RealFft(std::vector<int> shape) : shape_(std::move(shape)) {
  if (shape_.empty() || shape_.size() > 3 ||
      std::any_of(shape_.begin(), shape_.end(), [](int s) { return s < 2; })) {
    throw ValidationError("FFT grid needs 1 to 3 axes of at least 2 points");
  }
  real_size_ = std::accumulate(shape_.begin(), shape_.end(), std::size_t{1},
                               std::multiplies<>());
  complex_size_ = real_size_ / shape_.back() * (shape_.back() / 2 + 1);
  plans_ = std::make_unique<Plans>();
  std::lock_guard<std::mutex> lock(planner_mutex());
  plans_->real = fftw_alloc_real(real_size_);
  plans_->spectrum = fftw_alloc_complex(complex_size_);
  const int rank = static_cast<int>(shape_.size());
  plans_->forward = fftw_plan_dft_r2c(rank, shape_.data(), plans_->real, plans_->spectrum,
                                      FFTW_ESTIMATE);
  plans_->inverse = fftw_plan_dft_c2r(rank, shape_.data(), plans_->spectrum, plans_->real,
                                      FFTW_ESTIMATE);
  if (!plans_->forward || !plans_->inverse) throw NumericalError("FFTW planning failed");
}

RealFft::~RealFft() = default;

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) {
  std::memcpy(plans_->real, in.data(), real_size_ * sizeof(double));
  fftw_execute(plans_->forward);
  std::memcpy(static_cast<void*>(out.data()), plans_->spectrum,
              complex_size_ * sizeof(fftw_complex));
}

void RealFft::inverse(std::span<const std::complex<double>> in, std::span<double> out) {
  std::memcpy(plans_->spectrum, in.data(), complex_size_ * sizeof(fftw_complex));
  fftw_execute(plans_->inverse);
  const double scale = 1.0 / static_cast<double>(real_size_);
  for (std::size_t i = 0; i < real_size_; ++i) out[i] = plans_->real[i] * scale;
}

std::vector<double> mode_norms_squared(const std::vector<int>& shape, double spacing) {
  const int rank = static_cast<int>(shape.size());
  std::vector<int> extent = shape;
  extent.back() = shape.back() / 2 + 1;
  std::size_t total = 1;
  for (int e : extent) total *= e;
  std::vector<double> norms(total, 0.0);
  auto wave = [&](int axis, int k) {
    const int n = shape[axis];
    const int signed_k = k <= n / 2 ? k : k - n;
    return 2.0 * std::numbers::pi * signed_k / (n * spacing);
  };
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    double sum = 0.0;
    for (int axis = rank - 1; axis >= 0; --axis) {
      const int k = static_cast<int>(rest % extent[axis]);
      rest /= extent[axis];
      const double w = wave(axis, k);
      sum += w * w;
    }
    norms[flat] = sum;
  }
  return norms;
}

}  // namespace critex
