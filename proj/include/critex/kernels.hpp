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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>

// Data-parallel loops used by the engine oracle and the spectral solver.
// serial:: is the reference; omp:: must agree with it to rounding.

namespace critex::kernels {

struct LineD {
  double slope = 0.0;
  double intercept = 0.0;
};

struct GridMax {
  double value = -std::numeric_limits<double>::infinity();
  long index = -1;
};

/// Per-mode 2x2 propagator [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
};

inline double h_at(std::span<const LineD> lines, double n, double eta) {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& line : lines) g = std::min(g, line.slope * eta + line.intercept);
  const double den = n + eta - g;
  return den > 0.0 ? (n + eta) / den : std::numeric_limits<double>::infinity();
}

namespace serial {

inline GridMax h_grid_max(std::span<const LineD> lines, double n, double eta_max,
                          long steps) {
  GridMax best;
  for (long i = 0; i <= steps; ++i) {
    const double h = h_at(lines, n, eta_max * static_cast<double>(i) / steps);
    if (h > best.value) best = {h, i};
  }
  return best;
}

inline void abs_pow(std::span<const double> in, double p, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::pow(std::abs(in[i]), p);
}

/// NaN if any entry is NaN.
inline double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) {
    if (std::isnan(v)) return v;
    m = std::max(m, std::abs(v));
  }
  return m;
}

inline void scale_modes(std::span<std::complex<double>> modes,
                        std::span<const double> factors) {
  for (std::size_t i = 0; i < modes.size(); ++i) modes[i] *= factors[i];
}

inline void apply_2x2(std::span<const Mat2> mats, std::span<std::complex<double>> y0,
                      std::span<std::complex<double>> y1) {
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto u = y0[i];
    const auto v = y1[i];
    y0[i] = mats[i].a * u + mats[i].b * v;
    y1[i] = mats[i].c * u + mats[i].d * v;
  }
}

}  // namespace serial

namespace omp {

inline GridMax h_grid_max(std::span<const LineD> lines, double n, double eta_max,
                          long steps) {
  GridMax best;
#pragma omp parallel
  {
    GridMax local;
#pragma omp for nowait schedule(static)
    for (long i = 0; i <= steps; ++i) {
      const double h = h_at(lines, n, eta_max * static_cast<double>(i) / steps);
      if (h > local.value) local = {h, i};
    }
#pragma omp critical(critex_h_grid_max)
    {
      if (local.value > best.value ||
          (local.value == best.value && local.index < best.index)) {
        best = local;
      }
    }
  }
  return best;
}

inline void abs_pow(std::span<const double> in, double p, std::span<double> out) {
  const long size = static_cast<long>(in.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < size; ++i) out[i] = std::pow(std::abs(in[i]), p);
}

inline double max_abs(std::span<const double> x) {
  const long size = static_cast<long>(x.size());
  double m = 0.0;
  int nan = 0;
#pragma omp parallel for reduction(max : m) reduction(| : nan) schedule(static)
  for (long i = 0; i < size; ++i) {
    nan |= std::isnan(x[i]);
    m = std::max(m, std::abs(x[i]));
  }
  return nan ? std::numeric_limits<double>::quiet_NaN() : m;
}

inline void scale_modes(std::span<std::complex<double>> modes,
                        std::span<const double> factors) {
  const long size = static_cast<long>(modes.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < size; ++i) modes[i] *= factors[i];
}

inline void apply_2x2(std::span<const Mat2> mats, std::span<std::complex<double>> y0,
                      std::span<std::complex<double>> y1) {
  const long size = static_cast<long>(mats.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < size; ++i) {
    const auto u = y0[i];
    const auto v = y1[i];
    y0[i] = mats[i].a * u + mats[i].b * v;
    y1[i] = mats[i].c * u + mats[i].d * v;
  }
}

}  // namespace omp
}  // namespace critex::kernels
