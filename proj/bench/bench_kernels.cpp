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

// Serial vs OpenMP timings for the data-parallel kernels.
#include <omp.h>

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "critex/kernels.hpp"

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, s);
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-12s serial %9.3f ms  omp %9.3f ms  speedup %5.2f\n", name, 1e3 * serial,
              1e3 * parallel, serial / parallel);
}

}  // namespace

int main() {
  namespace k = critex::kernels;
  std::printf("threads: %d\n", omp_get_max_threads());
  const std::size_t size = 1 << 20;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::vector<double> x(size), y(size), factors(size);
  std::vector<std::complex<double>> u(size), v(size);
  std::vector<k::Mat2> mats(size);
  for (std::size_t i = 0; i < size; ++i) {
    x[i] = normal(rng);
    factors[i] = std::exp(-std::abs(normal(rng)));
    u[i] = {normal(rng), normal(rng)};
    v[i] = {normal(rng), normal(rng)};
    mats[i] = {0.9, 0.1, -0.1, 0.9};
  }
  const std::vector<k::LineD> lines = {{-1, 2}, {0, 1}, {1, 0.5}, {2, 0}};
  const int reps = 5;

  report("abs_pow", best_of(reps, [&] { k::serial::abs_pow(x, 2.5, y); }),
         best_of(reps, [&] { k::omp::abs_pow(x, 2.5, y); }));
  double sink = 0.0;
  report("max_abs", best_of(reps, [&] { sink += k::serial::max_abs(x); }),
         best_of(reps, [&] { sink += k::omp::max_abs(x); }));
  report("scale_modes", best_of(reps, [&] { k::serial::scale_modes(u, factors); }),
         best_of(reps, [&] { k::omp::scale_modes(u, factors); }));
  report("apply_2x2", best_of(reps, [&] { k::serial::apply_2x2(mats, u, v); }),
         best_of(reps, [&] { k::omp::apply_2x2(mats, u, v); }));
  report("h_grid_max",
         best_of(reps, [&] { sink += k::serial::h_grid_max(lines, 1.0, 50.0, 1000000).value; }),
         best_of(reps, [&] { sink += k::omp::h_grid_max(lines, 1.0, 50.0, 1000000).value; }));
  std::printf("checksum %g\n", sink);
  return 0;
}
