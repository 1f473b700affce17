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

#include <bit>
#include <cstring>
#include <fstream>

#include "critex/error.hpp"
#include "json.hpp"

namespace critex {

static_assert(std::endian::native == std::endian::little,
              "grid files are written in native little-endian order");

void write_grid(const std::string& path, const GridFunction& f) {
  f.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  nlohmann::ordered_json header;
  header["dim"] = f.dim;
  header["shape"] = f.shape;
  header["spacing"] = f.spacing;
  header["half_width"] = f.half_width;
  header["dtype"] = "float64";
  header["endian"] = "little";
  out << header.dump() << '\n';
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!out) throw IoError("failed writing " + path);
}

GridFunction read_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing grid header in " + path);
  GridFunction f;
  try {
    const auto header = nlohmann::json::parse(line);
    f.dim = header.at("dim").get<int>();
    f.shape = header.at("shape").get<std::vector<int>>();
    f.spacing = header.at("spacing").get<double>();
    f.half_width = header.at("half_width").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad grid header: ") + e.what());
  }
  std::size_t total = 1;
  for (int s : f.shape) total *= static_cast<std::size_t>(std::max(s, 0));
  f.values.resize(total);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(total * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(total * sizeof(double))) {
    throw IoError("truncated grid payload in " + path);
  }
  f.validate();
  return f;
}

}  // namespace critex
