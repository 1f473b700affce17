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

#include "critex/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "critex/error.hpp"

namespace critex {
namespace {

Rational rational_field(const nlohmann::json& node, const char* name) {
  if (!node.contains(name)) {
    throw ValidationError(std::string("term is missing field \"") + name + "\"");
  }
  const auto& value = node.at(name);
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw ValidationError(std::string("field \"") + name +
                        "\" must be a rational string \"p/q\"");
}

int int_field(const nlohmann::json& node, const char* name) {
  if (!node.contains(name) || !node.at(name).is_number_integer()) {
    throw ValidationError(std::string("field \"") + name + "\" must be an integer");
  }
  return node.at(name).get<int>();
}

double number_field(const nlohmann::json& node, const char* name, double fallback) {
  if (!node.contains(name)) return fallback;
  if (!node.at(name).is_number()) {
    throw ValidationError(std::string("field \"") + name + "\" must be a number");
  }
  return node.at(name).get<double>();
}

bool has_fractional_term(const std::vector<OperatorTerm>& terms) {
  return std::any_of(terms.begin(), terms.end(),
                     [](const OperatorTerm& t) { return !t.sigma().is_integer(); });
}

}  // namespace

OperatorSpec OperatorSpec::create(int n, int m, int ell, std::vector<OperatorTerm> terms,
                                  std::optional<OperatorMode> mode) {
  if (n < 1) throw ValidationError("space dimension n must be positive");
  if (m < 1) throw ValidationError("time order m must be positive");
  if (ell < 0 || ell > m - 1) {
    throw ValidationError("ell out of range: need 0 <= ell <= m-1, got " +
                          std::to_string(ell));
  }
  std::set<int> seen;
  for (const auto& t : terms) {
    if (t.j < 0 || t.j > m) {
      throw ValidationError("term j=" + std::to_string(t.j) + " outside [0, m]");
    }
    if (!seen.insert(t.j).second) {
      throw ValidationError("duplicate term j=" + std::to_string(t.j));
    }
    if (t.omega.sign() < 0) {
      throw ValidationError("negative spatial order omega=" + t.omega.to_string() +
                            " for j=" + std::to_string(t.j));
    }
    if (t.j == m && (t.a != Rational(1) || t.omega.sign() != 0)) {
      throw ValidationError("leading term j=m must have a=1 and omega=0");
    }
  }
  std::erase_if(terms, [](const OperatorTerm& t) { return t.a.sign() == 0; });
  if (!seen.contains(m)) terms.push_back({m, Rational(1), Rational(0)});
  std::sort(terms.begin(), terms.end(),
            [](const OperatorTerm& x, const OperatorTerm& y) { return x.j < y.j; });

  const bool fractional = has_fractional_term(terms);
  OperatorMode resolved =
      mode.value_or(fractional ? OperatorMode::kFractional : OperatorMode::kInteger);
  if (resolved == OperatorMode::kFractional && !fractional) {
    throw ValidationError(
        "fractional mode requires a term with non-integer sigma_j = omega_j/2 and "
        "a_j != 0");
  }
  if (resolved == OperatorMode::kInteger) {
    for (const auto& t : terms) {
      if (!t.omega.is_integer()) {
        throw ValidationError("integer mode requires integer spatial orders; got omega=" +
                              t.omega.to_string());
      }
    }
  }

  OperatorSpec spec;
  spec.n_ = n;
  spec.m_ = m;
  spec.ell_ = ell;
  spec.mode_ = resolved;
  spec.terms_ = std::move(terms);
  return spec;
}

const OperatorTerm* OperatorSpec::term(int j) const {
  for (const auto& t : terms_) {
    if (t.j == j) return &t;
  }
  return nullptr;
}

Rational OperatorSpec::coefficient(int j) const {
  const auto* t = term(j);
  return t ? t->a : Rational(0);
}

OperatorSpec parse_operator(const nlohmann::json& document) {
  if (!document.is_object()) throw ValidationError("operator document must be an object");
  const int n = int_field(document, "n");
  const int m = int_field(document, "m");
  const int ell = int_field(document, "ell");
  std::optional<OperatorMode> mode;
  if (document.contains("mode")) {
    const auto& node = document.at("mode");
    if (node == "fractional") {
      mode = OperatorMode::kFractional;
    } else if (node == "integer") {
      mode = OperatorMode::kInteger;
    } else {
      throw ValidationError("mode must be \"fractional\" or \"integer\"");
    }
  }
  std::vector<OperatorTerm> terms;
  if (document.contains("terms")) {
    const auto& list = document.at("terms");
    if (!list.is_array()) throw ValidationError("terms must be an array");
    for (const auto& node : list) {
      if (!node.is_object()) throw ValidationError("each term must be an object");
      terms.push_back({int_field(node, "j"), rational_field(node, "a"),
                       rational_field(node, "omega")});
    }
  }
  return OperatorSpec::create(n, m, ell, std::move(terms), mode);
}

OperatorSpec parse_operator(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("operator JSON: ") + e.what());
  }
  return parse_operator(document);
}

nlohmann::ordered_json serialize_operator(const OperatorSpec& spec) {
  nlohmann::ordered_json out;
  out["n"] = spec.dimension();
  out["m"] = spec.order();
  out["ell"] = spec.ell();
  out["mode"] = spec.mode() == OperatorMode::kFractional ? "fractional" : "integer";
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : spec.terms()) {
    nlohmann::ordered_json term;
    term["j"] = t.j;
    term["a"] = t.a.to_string();
    term["omega"] = t.omega.to_string();
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Rational fractional_part_s(const OperatorSpec& spec) {
  std::optional<Rational> s;
  for (const auto& t : spec.terms()) {
    const Rational sigma = t.sigma();
    if (sigma.is_integer()) continue;
    const Rational frac = sigma.fractional_part();
    if (!s || frac < *s) s = frac;
  }
  if (!s) throw ValidationError("no term with non-integer sigma_j and a_j != 0");
  return *s;
}

Rational weight_exponent_q(const OperatorSpec& spec) {
  return Rational(spec.dimension()) + Rational(2) * fractional_part_s(spec);
}

std::vector<int> index_set_I(const OperatorSpec& spec) {
  std::vector<int> result;
  for (int j = spec.ell(); j <= spec.order() - 1; ++j) {
    const auto* next = spec.term(j + 1);
    if (next && next->omega.sign() == 0) result.push_back(j);
  }
  return result;
}

DataProfile DataProfile::zero() { return {}; }

DataProfile DataProfile::gaussian(double amplitude, double width) {
  DataProfile p;
  p.kind = Kind::kGaussian;
  p.amplitude = amplitude;
  p.width = width;
  p.weighted_class = "Schwartz";
  return p;
}

DataProfile DataProfile::odd_gaussian(double amplitude, double width) {
  DataProfile p = gaussian(amplitude, width);
  p.kind = Kind::kOddGaussian;
  return p;
}

std::optional<double> DataProfile::integral_over(int n) const {
  switch (kind) {
    case Kind::kZero:
    case Kind::kOddGaussian:
      return 0.0;
    case Kind::kGaussian:
      return amplitude * std::pow(width * std::sqrt(std::numbers::pi), n);
    case Kind::kCustom:
      return integral;
  }
  return std::nullopt;
}

double DataProfile::value(std::span<const double> x) const {
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  switch (kind) {
    case Kind::kZero:
      return 0.0;
    case Kind::kGaussian:
      return amplitude * std::exp(-r2 / (width * width));
    case Kind::kOddGaussian:
      return amplitude * (x.empty() ? 0.0 : x[0] / width) * std::exp(-r2 / (width * width));
    case Kind::kCustom:
      break;
  }
  throw ValidationError("custom profile has no pointwise sampler");
}

std::string DataProfile::kind_name() const {
  switch (kind) {
    case Kind::kZero:
      return "zero";
    case Kind::kGaussian:
      return "gaussian";
    case Kind::kOddGaussian:
      return "odd_gaussian";
    case Kind::kCustom:
      return "custom";
  }
  return "zero";
}

const DataProfile* DataSpec::profile(int j) const {
  auto it = profiles.find(j);
  return it == profiles.end() ? nullptr : &it->second;
}

DataSpec parse_data(const nlohmann::json& document, const OperatorSpec& spec) {
  if (!document.is_array()) throw ValidationError("data must be an array of profiles");
  DataSpec data;
  for (const auto& node : document) {
    if (!node.is_object()) throw ValidationError("each datum must be an object");
    const int j = int_field(node, "j");
    if (j < 0 || j > spec.order() - 1) {
      throw ValidationError("datum j=" + std::to_string(j) + " outside [0, m-1]");
    }
    const std::string kind = node.value("profile", std::string("zero"));
    DataProfile profile;
    if (kind == "zero") {
      profile = DataProfile::zero();
    } else if (kind == "gaussian" || kind == "odd_gaussian") {
      const double amplitude = number_field(node, "amplitude", 1.0);
      const double width = number_field(node, "width", 1.0);
      if (!(width > 0.0)) throw ValidationError("profile width must be positive");
      profile = kind == "gaussian" ? DataProfile::gaussian(amplitude, width)
                                   : DataProfile::odd_gaussian(amplitude, width);
    } else if (kind == "custom") {
      profile.kind = DataProfile::Kind::kCustom;
      if (node.contains("integral")) profile.integral = number_field(node, "integral", 0.0);
    } else {
      throw ValidationError("unknown profile \"" + kind + "\"");
    }
    if (node.contains("class")) profile.weighted_class = node.at("class").get<std::string>();
    const bool nonzero = profile.kind != DataProfile::Kind::kZero &&
                         !(profile.kind != DataProfile::Kind::kCustom &&
                           profile.amplitude == 0.0);
    if (j < spec.ell() && nonzero) {
      throw ValidationError("u_j must vanish for j <= ell-1 (j=" + std::to_string(j) + ")");
    }
    if (!data.profiles.emplace(j, profile).second) {
      throw ValidationError("duplicate datum j=" + std::to_string(j));
    }
  }
  return data;
}

nlohmann::ordered_json serialize_data(const DataSpec& data) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [j, profile] : data.profiles) {
    nlohmann::ordered_json node;
    node["j"] = j;
    node["profile"] = profile.kind_name();
    if (profile.kind == DataProfile::Kind::kGaussian ||
        profile.kind == DataProfile::Kind::kOddGaussian) {
      node["amplitude"] = profile.amplitude;
      node["width"] = profile.width;
    }
    if (profile.kind == DataProfile::Kind::kCustom && profile.integral) {
      node["integral"] = *profile.integral;
    }
    node["class"] = profile.weighted_class;
    out.push_back(std::move(node));
  }
  return out;
}

SignCondition check_sign_condition(const OperatorSpec& spec, const DataSpec& data) {
  SignCondition result;
  for (int j : index_set_I(spec)) {
    const DataProfile* profile = data.profile(j);
    std::optional<double> integral =
        profile ? profile->integral_over(spec.dimension()) : std::optional<double>(0.0);
    if (!integral) {
      throw ValidationError("missing integral for u_" + std::to_string(j) +
                            " (j is in the index set I)");
    }
    result.value += spec.coefficient(j + 1).to_double() * *integral;
  }
  result.positive = result.value > 0.0;
  return result;
}

}  // namespace critex
