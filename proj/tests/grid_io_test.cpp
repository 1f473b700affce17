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

#include "critex/grid_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "critex/error.hpp"
#include "doctest.h"

using namespace critex;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("grid round trip") {
  const auto g = GridFunction::sample(2, 16, 3.0, [](std::span<const double> x) {
    return std::sin(x[0]) * std::cos(2 * x[1]) + 1e-300;
  });
  const std::string path = temp_path("critex_grid_roundtrip.bin");
  write_grid(path, g);
  const auto back = read_grid(path);
  CHECK(back.dim == 2);
  CHECK(back.shape == g.shape);
  CHECK(back.spacing == g.spacing);
  CHECK(back.half_width == g.half_width);
  CHECK(back.values == g.values);
  std::filesystem::remove(path);
}

TEST_CASE("grid I/O failures") {
  CHECK_THROWS_AS(read_grid(temp_path("critex_does_not_exist.bin")), IoError);
  CHECK_THROWS_AS(write_grid("/nonexistent-dir/x.bin", GridFunction::zeros(1, 4, 1.0)), IoError);
  const std::string path = temp_path("critex_grid_bad.bin");
  {
    std::ofstream out(path);
    out << "not a header\n";
  }
  CHECK_THROWS_AS(read_grid(path), ValidationError);
  {
    std::ofstream out(path);
    out << R"({"dim":1,"shape":[4],"spacing":0.5,"half_width":1,"dtype":"float64","endian":"little"})"
        << "\n" << "short";
  }
  CHECK_THROWS(read_grid(path));
  std::filesystem::remove(path);
}
