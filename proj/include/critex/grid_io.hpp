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

#include <string>

#include "critex/fraclap.hpp"

namespace critex {

/// One JSON header line (dim, shape, spacing, half_width) followed by the
/// values as little-endian float64.
void write_grid(const std::string& path, const GridFunction& f);
GridFunction read_grid(const std::string& path);

}  // namespace critex
