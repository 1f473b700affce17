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

#include "critex/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

using namespace critex::kernels;

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  const std::size_t size = 10007;
  std::vector<double> x(size), a(size), b(size), factors(size);
  std::vector<std::complex<double>> u(size), v(size);
  std::vector<Mat2> mats(size);
  for (std::size_t i = 0; i < size; ++i) {
    x[i] = normal(rng);
    factors[i] = std::exp(normal(rng));
    u[i] = {normal(rng), normal(rng)};
    v[i] = {normal(rng), normal(rng)};
    mats[i] = {normal(rng), normal(rng), normal(rng), normal(rng)};
  }

  serial::abs_pow(x, 2.7, a);
  omp::abs_pow(x, 2.7, b);
  CHECK(a == b);
  CHECK(serial::max_abs(x) == omp::max_abs(x));

  auto u1 = u, u2 = u;
  serial::scale_modes(u1, factors);
  omp::scale_modes(u2, factors);
  CHECK(u1 == u2);

  auto p0 = u, p1 = v, q0 = u, q1 = v;
  serial::apply_2x2(mats, p0, p1);
  omp::apply_2x2(mats, q0, q1);
  CHECK(p0 == q0);
  CHECK(p1 == q1);

  const std::vector<LineD> lines = {{1, 0}, {0, 0.5}, {-1, 3}};
  const auto s = serial::h_grid_max(lines, 1.0, 20.0, 20000);
  const auto o = omp::h_grid_max(lines, 1.0, 20.0, 20000);
  CHECK(s.value == o.value);
  CHECK(s.index == o.index);
}

TEST_CASE("max_abs propagates NaN") {
  std::vector<double> x = {1.0, -3.0, std::nan(""), 2.0};
  CHECK(std::isnan(serial::max_abs(x)));
  CHECK(std::isnan(omp::max_abs(x)));
  x[2] = -INFINITY;
  CHECK(std::isinf(omp::max_abs(x)));
}

TEST_CASE("h at a point") {
  const std::vector<LineD> heat = {{1, 0}, {0, 2}};
  CHECK(h_at(heat, 1.0, 2.0) == doctest::Approx(3.0));
  CHECK(h_at(heat, 1.0, 0.0) == doctest::Approx(1.0));
  const std::vector<LineD> steep = {{2, 0}};
  CHECK(std::isinf(h_at(steep, 1.0, 5.0)));
}
