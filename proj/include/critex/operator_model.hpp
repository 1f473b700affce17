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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critex/rational.hpp"
#include "json.hpp"

namespace critex {

enum class OperatorMode { kFractional, kInteger };

/// One summand a_j (-Delta)^{omega_j / 2} d_t^j. In integer mode omega_j is
/// the spatial derivative order r_j.
struct OperatorTerm {
  int j = 0;
  Rational a;
  Rational omega;

  Rational sigma() const { return omega / Rational(2); }
  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// Evolution operator L = sum_{j=0}^{m} a_j (-Delta)^{sigma_j} d_t^j with the
/// power nonlinearity |d_t^ell u|^p. Immutable after construction.
///
/// Only active terms (a_j != 0) are stored, sorted by j; the leading term
/// (j = m, a = 1, omega = 0) is always present.
class OperatorSpec {
 public:
  /// Validates and normalizes. When `mode` is empty it is inferred:
  /// fractional if some active term has a non-integer sigma, else integer.
  static OperatorSpec create(int n, int m, int ell, std::vector<OperatorTerm> terms,
                             std::optional<OperatorMode> mode = std::nullopt);

  int dimension() const { return n_; }
  int order() const { return m_; }
  int ell() const { return ell_; }
  OperatorMode mode() const { return mode_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }

  /// Active term with time order j, or nullptr.
  const OperatorTerm* term(int j) const;
  /// a_j, zero for inactive j.
  Rational coefficient(int j) const;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

 private:
  OperatorSpec() = default;

  int n_ = 1;
  int m_ = 1;
  int ell_ = 0;
  OperatorMode mode_ = OperatorMode::kFractional;
  std::vector<OperatorTerm> terms_;
};

OperatorSpec parse_operator(const nlohmann::json& document);
OperatorSpec parse_operator(std::string_view text);
nlohmann::ordered_json serialize_operator(const OperatorSpec& spec);

/// Smallest fractional part of a non-integer sigma_j with a_j != 0.
Rational fractional_part_s(const OperatorSpec& spec);
/// q = n + 2 s.
Rational weight_exponent_q(const OperatorSpec& spec);
/// { j in [ell, m-1] : omega_{j+1} = 0 and a_{j+1} != 0 }, ascending.
std::vector<int> index_set_I(const OperatorSpec& spec);

/// Symbolic description of one initial datum u_j.
struct DataProfile {
  enum class Kind { kZero, kGaussian, kOddGaussian, kCustom };

  Kind kind = Kind::kZero;
  double amplitude = 0.0;
  double width = 1.0;
  /// Required for kCustom, derived for the closed-form kinds.
  std::optional<double> integral;
  std::string weighted_class = "L1(<x>^q dx)";

  static DataProfile zero();
  static DataProfile gaussian(double amplitude, double width);
  static DataProfile odd_gaussian(double amplitude, double width);

  /// Integral over R^n, when known.
  std::optional<double> integral_over(int n) const;
  /// Pointwise value; throws for kCustom (no sampler).
  double value(std::span<const double> x) const;
  std::string kind_name() const;
};

/// Initial data keyed by time order j; absent entries are zero.
struct DataSpec {
  std::map<int, DataProfile> profiles;

  const DataProfile* profile(int j) const;
};

DataSpec parse_data(const nlohmann::json& document, const OperatorSpec& spec);
nlohmann::ordered_json serialize_data(const DataSpec& data);

struct SignCondition {
  double value = 0.0;
  bool positive = false;
};

/// sum_{j in I} a_{j+1} * integral(u_j); positive iff strictly > 0.
SignCondition check_sign_condition(const OperatorSpec& spec, const DataSpec& data);

}  // namespace critex
