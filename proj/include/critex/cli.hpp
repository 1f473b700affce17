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

#include <iosfwd>
#include <string>
#include <vector>

#include "critex/weak_sim.hpp"
#include "json.hpp"

namespace critex {

/// Exit statuses of the command-line front end.
enum ExitCode { kExitOk = 0, kExitValidation = 2, kExitIo = 3, kExitNumerical = 4 };

/// Simulation request:
///   {"operator": {...}, "data": [...], "p": 2, "points": 1024,
///    "half_width": 90, "dt": 0.01, "t_end": 50, "threshold": 1e6,
///    "nonlinear": true, "snapshot_every": 0}
SimConfig parse_sim_config(const nlohmann::json& doc);

/// Runs one command; args exclude the program name. Reports go to `out`
/// unless --output is given, errors go to `err` as one JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critex
