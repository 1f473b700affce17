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

#include "critex/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "critex/error.hpp"

namespace critex {
namespace {

using nlohmann::ordered_json;

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

ordered_json optional_rational(const std::optional<Rational>& r) {
  return r ? ordered_json(r->to_string()) : ordered_json(nullptr);
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json exponent_json(const ExponentReport& report) {
  ordered_json doc;
  doc["p_c"] = report.p_c.to_string();
  doc["eta_opt"] = report.eta_opt ? ordered_json(report.eta_opt->to_string()) : ordered_json();
  ordered_json breakpoints = ordered_json::array();
  for (const auto& piece : report.envelope.pieces) {
    breakpoints.push_back(ordered_json::array({piece.eta.to_string(), piece.j()}));
  }
  doc["breakpoints"] = breakpoints;
  doc["signs"] = report.signs;
  doc["J_p"] = report.J_p;
  doc["q"] = optional_rational(report.q);
  doc["s"] = optional_rational(report.s);
  doc["I"] = report.I;
  doc["classification"] = report.classification;
  doc["status"] = status_name(report.status);
  doc["boundary_case"] = report.boundary_case;
  return doc;
}

ordered_json envelope_json(const Envelope& env) {
  ordered_json doc;
  doc["ell"] = env.ell;
  doc["j_first"] = env.j_first;
  doc["j_last"] = env.j_last;
  ordered_json lines = ordered_json::array();
  for (const auto& line : env.lines) {
    lines.push_back({{"j", line.source_j},
                     {"slope", line.slope.to_string()},
                     {"intercept", line.intercept.to_string()}});
  }
  doc["lines"] = lines;
  ordered_json pieces = ordered_json::array();
  for (const auto& piece : env.pieces) {
    pieces.push_back({{"eta", piece.eta.to_string()},
                      {"j", piece.j()},
                      {"slope", piece.line.slope.to_string()},
                      {"intercept", piece.line.intercept.to_string()}});
  }
  doc["pieces"] = pieces;
  return doc;
}

void stamp(ordered_json& doc, std::string_view input) {
  doc["input_hash"] = hash_hex(input);
  doc["version"] = kVersion;
}

FraclapVerification verify_fraclap(int n, const Rational& sigma, const Rational& q) {
  if (n < 1) throw ValidationError("n must be positive");
  if (sigma.sign() <= 0) throw ValidationError("sigma must be positive");
  if (q.sign() <= 0) throw ValidationError("q must be positive");
  FraclapVerification v;
  v.n = n;
  v.sigma = sigma;
  v.q = q;
  const double s = sigma.to_double();
  v.origin_quadrature = singular_quadrature_apply(n, PolyDecayFunction{q, 1.0}, s, 0.0);
  v.origin_closed_form = value_at_origin(n, s, q.to_double());
  v.relative_error =
      std::abs(v.origin_quadrature - v.origin_closed_form) / std::abs(v.origin_closed_form);
  v.fit = pointwise_bound_check(n, s, q);
  for (std::size_t i = 0; i < v.fit.radii.size(); ++i) {
    const double bracket = std::sqrt(1.0 + v.fit.radii[i] * v.fit.radii[i]);
    v.bound_constant =
        std::max(v.bound_constant, std::abs(v.fit.values[i]) * std::pow(bracket, v.fit.q_sigma));
  }
  return v;
}

ordered_json fraclap_json(const FraclapVerification& v) {
  ordered_json doc;
  doc["n"] = v.n;
  doc["sigma"] = v.sigma.to_string();
  doc["q"] = v.q.to_string();
  doc["origin_quadrature"] = v.origin_quadrature;
  doc["origin_closed_form"] = v.origin_closed_form;
  doc["origin_relative_error"] = v.relative_error;
  doc["q_sigma"] = v.fit.q_sigma;
  doc["slope"] = v.fit.slope;
  doc["slope_bound_holds"] = v.fit.holds;
  doc["bound_constant"] = v.bound_constant;
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < v.fit.radii.size(); ++i) {
    table.push_back({{"x", v.fit.radii[i]}, {"value", v.fit.values[i]}});
  }
  doc["table"] = table;
  return doc;
}

std::string decay_table_csv(const FraclapVerification& v) {
  std::ostringstream out;
  out << "x,value,bound\n";
  for (std::size_t i = 0; i < v.fit.radii.size(); ++i) {
    const double x = v.fit.radii[i];
    const double bound = v.bound_constant * std::pow(1.0 + x * x, -0.5 * v.fit.q_sigma);
    out << shortest(x) << ',' << shortest(v.fit.values[i]) << ',' << shortest(bound) << '\n';
  }
  return out.str();
}

ordered_json run_json(const SimRun& run, const SimConfig& config) {
  ordered_json doc;
  doc["p"] = config.p;
  doc["nonlinear"] = config.nonlinear;
  doc["points"] = config.points;
  doc["half_width"] = config.half_width;
  doc["dt"] = config.dt;
  doc["t_end"] = config.t_end;
  doc["verdict"] = verdict_name(run.verdict);
  doc["blowup_time"] = run.blowup_time ? ordered_json(*run.blowup_time) : ordered_json();
  doc["blowup_confirmed"] = run.blowup_confirmed;
  doc["overflow"] = run.overflow;
  doc["support_violation"] = run.support_violation;
  doc["final_time"] = run.final_time;
  doc["final_sup"] = run.sup_series.empty() ? 0.0 : run.sup_series.back().second;
  doc["snapshots"] = run.snapshots.size();
  doc["weak_residual"] = run.weak_residual ? ordered_json(*run.weak_residual) : ordered_json();
  doc["note"] = run.note;
  return doc;
}

ordered_json sweep_json(const SweepResult& result) {
  ordered_json doc;
  doc["p_c"] = result.p_c.to_string();
  ordered_json rows = ordered_json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"p", row.p},
                    {"verdict", verdict_name(row.verdict)},
                    {"blowup_time", row.blowup_time ? ordered_json(*row.blowup_time)
                                                    : ordered_json()},
                    {"critical", row.critical},
                    {"note", row.note}});
  }
  doc["rows"] = rows;
  doc["monotone"] = monotone_pattern(result.rows);
  return doc;
}

std::string sup_series_csv(const SimRun& run) {
  std::ostringstream out;
  out << "t,sup\n";
  for (const auto& [t, sup] : run.sup_series) out << shortest(t) << ',' << shortest(sup) << '\n';
  return out.str();
}

}  // namespace critex
