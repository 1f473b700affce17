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

#include "critex/exponent_engine.hpp"

#include <algorithm>
#include <limits>

#include "critex/error.hpp"
#include "critex/kernels.hpp"

namespace critex {
namespace {

constexpr double kUnboundedCap = 1e6;

// g(eta) - eta reaches n first at the returned point, if ever.
std::optional<ExtendedRational> first_blowup_point(const Envelope& env, const Rational& n) {
  for (std::size_t k = 0; k < env.pieces.size(); ++k) {
    const auto& line = env.pieces[k].line;
    const Rational slope = line.slope - Rational(1);
    const Rational start = env.pieces[k].eta;
    if (line.at(start) - start >= n) return ExtendedRational(start);
    const bool last = k + 1 == env.pieces.size();
    if (slope.sign() <= 0) continue;
    const Rational hit = (n - line.intercept) / slope;
    if (last || hit <= env.pieces[k + 1].eta) return ExtendedRational(hit);
  }
  return std::nullopt;
}

std::vector<int> attaining(const Envelope& env, const Rational& eta) {
  const Rational g = g_eval(env, eta).value();
  std::vector<int> result;
  for (const auto& line : env.lines) {
    if (line.at(eta) == g) result.push_back(line.source_j);
  }
  return result;
}

}  // namespace

Envelope lower_envelope(const OperatorSpec& spec) {
  Envelope env;
  env.ell = spec.ell();
  for (const auto& t : spec.terms()) {
    env.lines.push_back({Rational(t.j - spec.ell()), t.omega, t.j});
  }
  env.j_last = env.lines.front().source_j;
  env.j_first = spec.order();
  for (const auto& line : env.lines) {
    if (line.intercept.sign() == 0) {
      env.j_first = line.source_j;
      break;
    }
  }

  // Lowest intercept at eta = 0; ties go to the smaller slope, which stays
  // below for eta > 0. Slopes are distinct because j is.
  const EnvelopeLine* current = &env.lines.front();
  for (const auto& line : env.lines) {
    if (line.intercept < current->intercept ||
        (line.intercept == current->intercept && line.slope < current->slope)) {
      current = &line;
    }
  }
  Rational eta(0);
  env.pieces.push_back({eta, *current});
  while (true) {
    const EnvelopeLine* next = nullptr;
    Rational next_eta;
    for (const auto& line : env.lines) {
      if (line.slope >= current->slope) continue;
      const Rational cross =
          (line.intercept - current->intercept) / (current->slope - line.slope);
      if (!next || cross < next_eta || (cross == next_eta && line.slope < next->slope)) {
        next = &line;
        next_eta = cross;
      }
    }
    if (!next) break;
    eta = max(eta, next_eta);
    current = next;
    env.pieces.push_back({eta, *current});
  }
  return env;
}

ExtendedRational g_eval(const Envelope& env, const ExtendedRational& eta) {
  if (eta.is_negative_infinity() || (eta.is_finite() && eta.value().sign() < 0)) {
    throw ValidationError("g is defined for eta >= 0");
  }
  if (eta.is_positive_infinity()) {
    const auto& line = env.pieces.back().line;
    if (line.slope.sign() > 0) return ExtendedRational::positive_infinity();
    if (line.slope.sign() < 0) return ExtendedRational::negative_infinity();
    return line.intercept;
  }
  const Rational& x = eta.value();
  const EnvelopePiece* piece = &env.pieces.front();
  for (const auto& candidate : env.pieces) {
    if (candidate.eta <= x) piece = &candidate;
  }
  return piece->line.at(x);
}

ExtendedRational h_eval(const OperatorSpec& spec, const Envelope& env,
                        const ExtendedRational& eta) {
  const int ell = spec.ell();
  if (eta.is_positive_infinity()) {
    if (env.j_last >= ell + 1) return ExtendedRational::positive_infinity();
    return Rational(1) / Rational(ell + 1 - env.j_last);
  }
  const Rational n(spec.dimension());
  const Rational num = n + eta.value();
  const Rational den = num - g_eval(env, eta).value();
  if (den.sign() <= 0) return ExtendedRational::positive_infinity();
  return num / den;
}

ExtendedRational h_eval(const OperatorSpec& spec, const ExtendedRational& eta) {
  return h_eval(spec, lower_envelope(spec), eta);
}

ExponentReport critical_exponent(const OperatorSpec& spec) {
  ExponentReport report;
  report.envelope = lower_envelope(spec);
  const Envelope& env = report.envelope;
  const int ell = spec.ell();
  const Rational n(spec.dimension());

  for (const auto& piece : env.pieces) {
    const Rational s = n * Rational(piece.j() - ell) - piece.line.intercept;
    report.signs.push_back(s.sign());
  }
  report.I = index_set_I(spec);
  const bool fractional = std::any_of(spec.terms().begin(), spec.terms().end(),
                                      [](const OperatorTerm& t) {
                                        return !t.sigma().is_integer();
                                      });
  if (fractional) {
    report.s = fractional_part_s(spec);
    report.q = weight_exponent_q(spec);
  }

  std::optional<Rational> max_excess;
  for (const auto& piece : env.pieces) {
    const Rational excess = piece.line.at(piece.eta) - piece.eta;
    if (!max_excess || excess > *max_excess) max_excess = excess;
  }
  const auto blowup_point = first_blowup_point(env, n);

  if (blowup_point || env.j_last >= ell + 1) {
    report.status = ExponentStatus::kInfinite;
    report.p_c = ExtendedRational::positive_infinity();
    report.boundary_case = env.j_last <= ell && max_excess && *max_excess == n;
    if (blowup_point) {
      report.eta_opt = *blowup_point;
      report.J_p = attaining(env, blowup_point->value());
    } else {
      report.eta_opt = ExtendedRational::positive_infinity();
      report.J_p = {env.j_last};
    }
  } else if (env.j_first <= ell) {
    report.status = ExponentStatus::kNoResult;
    report.p_c = Rational(1);
    report.eta_opt = Rational(0);
    report.J_p = attaining(env, Rational(0));
  } else {
    report.status = ExponentStatus::kFinite;
    ExtendedRational best = h_eval(spec, env, Rational(0));
    Rational best_eta(0);
    for (const auto& piece : env.pieces) {
      const ExtendedRational h = h_eval(spec, env, piece.eta);
      if (h > best) {
        best = h;
        best_eta = piece.eta;
      }
    }
    report.p_c = best;
    report.eta_opt = best_eta;
    report.J_p = attaining(env, best_eta);
  }
  report.classification = classify(report, spec);
  return report;
}

BruteForceResult brute_force_pc(const OperatorSpec& spec, const Rational& eta_max,
                                long steps) {
  if (steps < 1000) throw ValidationError("brute_force_pc needs at least 1000 steps");
  if (eta_max.sign() <= 0) throw ValidationError("eta_max must be positive");
  std::vector<kernels::LineD> lines;
  int j_last = spec.order();
  for (const auto& t : spec.terms()) {
    lines.push_back({static_cast<double>(t.j - spec.ell()), t.omega.to_double()});
    j_last = std::min(j_last, t.j);
  }
  const double hi = eta_max.to_double();
  const auto grid = kernels::omp::h_grid_max(lines, spec.dimension(), hi, steps);

  BruteForceResult result;
  result.p_hat = grid.value;
  result.eta_hat = hi * static_cast<double>(grid.index) / steps;
  if (j_last >= spec.ell() + 1) {
    result.unbounded = true;
    result.p_hat = std::numeric_limits<double>::infinity();
    result.eta_hat = std::numeric_limits<double>::infinity();
    return result;
  }
  const double limit = 1.0 / (spec.ell() + 1 - j_last);
  if (limit > result.p_hat) {
    result.p_hat = limit;
    result.eta_hat = std::numeric_limits<double>::infinity();
  }
  result.unbounded = result.p_hat > kUnboundedCap;
  return result;
}

std::string classify(const ExponentReport& /*report*/, const OperatorSpec& spec) {
  if (spec.order() != 2) return "generic";
  const OperatorTerm* damping = spec.term(1);
  const OperatorTerm* elastic = spec.term(0);
  if (!damping || !elastic || elastic->omega.sign() == 0) return "generic";
  const Rational twice_sigma1 = damping->omega;
  const Rational sigma = elastic->sigma();
  if (twice_sigma1.sign() == 0) return "classical-damping";
  if (twice_sigma1 < sigma) return "effective";
  if (twice_sigma1 > sigma) return "noneffective";
  return "quasi-homogeneous-limit";
}

std::string status_name(ExponentStatus status) {
  switch (status) {
    case ExponentStatus::kFinite:
      return "finite";
    case ExponentStatus::kInfinite:
      return "infinite";
    case ExponentStatus::kNoResult:
      return "no nonexistence result";
  }
  return "finite";
}

}  // namespace critex
