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

#include <cstdint>
#include <string>
#include <string_view>

#include "critex/exponent_engine.hpp"
#include "critex/fraclap.hpp"
#include "critex/weak_sim.hpp"
#include "json.hpp"

namespace critex {

inline constexpr std::string_view kVersion = "0.1.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

/// Stable text form: two-space indent, trailing newline.
std::string dump(const nlohmann::ordered_json& doc);

nlohmann::ordered_json exponent_json(const ExponentReport& report);
nlohmann::ordered_json envelope_json(const Envelope& env);

/// Stamps input_hash and version onto a report.
void stamp(nlohmann::ordered_json& doc, std::string_view input);

struct FraclapVerification {
  int n = 1;
  Rational sigma;
  Rational q;
  double origin_quadrature = 0.0;
  double origin_closed_form = 0.0;
  double relative_error = 0.0;
  DecayFit fit;
  /// Empirical C in |value| <= C <x>^{-q_sigma} over the fit radii.
  double bound_constant = 0.0;
};

FraclapVerification verify_fraclap(int n, const Rational& sigma, const Rational& q);
nlohmann::ordered_json fraclap_json(const FraclapVerification& v);
/// Columns x, value, bound.
std::string decay_table_csv(const FraclapVerification& v);

nlohmann::ordered_json run_json(const SimRun& run, const SimConfig& config);
nlohmann::ordered_json sweep_json(const SweepResult& result);
/// Columns t, sup.
std::string sup_series_csv(const SimRun& run);

}  // namespace critex
