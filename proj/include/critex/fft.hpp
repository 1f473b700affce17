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

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace critex {

/// Real-to-complex FFT on a row-major grid of 1 to 3 axes (FFTW, estimate
/// planning). Plan creation is serialized; execution is thread-safe per object.
class RealFft {
 public:
  explicit RealFft(std::vector<int> shape);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t real_size() const { return real_size_; }
  /// Half-spectrum length: last axis stores shape.back()/2 + 1 modes.
  std::size_t complex_size() const { return complex_size_; }
  const std::vector<int>& shape() const { return shape_; }

  /// Unnormalized forward transform.
  void forward(std::span<const double> in, std::span<std::complex<double>> out);
  /// Inverse transform including the 1/N factor.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  struct Plans;
  std::vector<int> shape_;
  std::size_t real_size_ = 0;
  std::size_t complex_size_ = 0;
  std::unique_ptr<Plans> plans_;
};

/// |xi|^2 for each half-spectrum mode of a grid with the given spacing
/// (angular wavenumbers 2 pi k / (N h)).
std::vector<double> mode_norms_squared(const std::vector<int>& shape, double spacing);

}  // namespace critex
